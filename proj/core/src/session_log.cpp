#include "ecohome/session_log.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>

#include "json.hpp"

namespace ecohome {

using ordered_json = nlohmann::ordered_json;

std::size_t SessionLog::restart_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      events.begin(), events.end(), [](const SessionEvent& e) { return e.kind == EventKind::Restart; }));
}

std::optional<std::int64_t> SessionLog::elapsed_ms() const noexcept {
  for (auto it = events.rbegin(); it != events.rend(); ++it) {
    if (it->kind == EventKind::SessionEnd) return it->t_ms;
  }
  return std::nullopt;
}

SessionLogError::SessionLogError(std::string source, std::size_t line, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message),
      source_(std::move(source)),
      line_(line) {}

std::string header_record(const SessionLogHeader& header) {
  ordered_json j;
  j["session_id"] = header.session_id;
  j["kb_source"] = header.kb_source;
  j["scenario_id"] = header.scenario_id ? ordered_json(*header.scenario_id) : ordered_json(nullptr);
  return j.dump();
}

std::string event_record(const SessionEvent& event) {
  ordered_json j;
  j["t_ms"] = event.t_ms;
  j["kind"] = event_kind_name(event.kind);
  j["detail"] = event.detail;
  return j.dump();
}

void write_session_log(std::ostream& out, const SessionLog& log) {
  out << header_record(log.header) << '\n';
  for (const SessionEvent& e : log.events) out << event_record(e) << '\n';
}

namespace {

const ordered_json& require(const ordered_json& obj, const char* key, const std::string& source,
                            std::size_t line) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw SessionLogError(source, line, std::string("missing field '") + key + "'");
  return *it;
}

std::string require_string(const ordered_json& obj, const char* key, const std::string& source,
                           std::size_t line) {
  const ordered_json& v = require(obj, key, source, line);
  if (!v.is_string()) throw SessionLogError(source, line, std::string("'") + key + "' must be a string");
  return v.get<std::string>();
}

}  // namespace

std::vector<SessionLog> read_session_logs(std::istream& in, const std::string& source_name) {
  std::vector<SessionLog> logs;
  std::string text;
  std::size_t line_no = 0;
  while (std::getline(in, text)) {
    ++line_no;
    if (!text.empty() && text.back() == '\r') text.pop_back();
    if (text.find_first_not_of(" \t") == std::string::npos) continue;

    ordered_json record = ordered_json::parse(text, nullptr, false);
    if (record.is_discarded() || !record.is_object()) {
      throw SessionLogError(source_name, line_no, "not a JSON object");
    }

    if (record.contains("session_id")) {
      SessionLogHeader header;
      header.session_id = require_string(record, "session_id", source_name, line_no);
      header.kb_source = require_string(record, "kb_source", source_name, line_no);
      const ordered_json& scenario = require(record, "scenario_id", source_name, line_no);
      if (scenario.is_string()) {
        header.scenario_id = scenario.get<std::string>();
      } else if (!scenario.is_null()) {
        throw SessionLogError(source_name, line_no, "'scenario_id' must be a string or null");
      }
      logs.push_back({std::move(header), {}});
      continue;
    }

    if (logs.empty()) throw SessionLogError(source_name, line_no, "event before session header");
    SessionEvent event;
    const ordered_json& t = require(record, "t_ms", source_name, line_no);
    if (!t.is_number_integer() || t.get<std::int64_t>() < 0) {
      throw SessionLogError(source_name, line_no, "'t_ms' must be a non-negative integer");
    }
    event.t_ms = t.get<std::int64_t>();
    const std::string kind = require_string(record, "kind", source_name, line_no);
    const auto parsed = parse_event_kind(kind);
    if (!parsed) throw SessionLogError(source_name, line_no, "unknown event kind '" + kind + "'");
    event.kind = *parsed;
    event.detail = require_string(record, "detail", source_name, line_no);

    auto& events = logs.back().events;
    if (!events.empty() && event.t_ms < events.back().t_ms) {
      throw SessionLogError(source_name, line_no, "timestamps must be non-decreasing");
    }
    events.push_back(std::move(event));
  }
  if (in.bad()) throw SessionLogError(source_name, line_no, "read error");
  return logs;
}

std::vector<SessionLog> read_session_log_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open session log '" + path.string() + "'");
  return read_session_logs(in, path.string());
}

std::string make_session_id() {
  static constexpr char kHex[] = "0123456789abcdef";
  std::random_device rd;
  std::mt19937_64 gen((static_cast<std::uint64_t>(rd()) << 32) ^ rd());
  std::uint64_t bits = gen();
  std::string id(16, '0');
  for (char& c : id) {
    c = kHex[bits & 0xf];
    bits >>= 4;
  }
  return id;
}

}  // namespace ecohome
