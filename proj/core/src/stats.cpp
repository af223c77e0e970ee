#include "ecohome/stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>

namespace ecohome {

StatsSummary summarize(std::span<const double> values) {
  if (values.size() < 2) {
    throw std::invalid_argument("summarize needs at least two values (sample sd is undefined)");
  }
  // Welford's single-pass update.
  double mean = 0.0;
  double m2 = 0.0;
  std::size_t k = 0;
  for (double x : values) {
    ++k;
    const double delta = x - mean;
    mean += delta / static_cast<double>(k);
    m2 += delta * (x - mean);
  }
  const double n = static_cast<double>(values.size());
  StatsSummary s;
  s.n = values.size();
  s.mean = mean;
  s.sd = std::sqrt(std::max(0.0, m2) / (n - 1.0));
  s.sem = s.sd / std::sqrt(n);
  return s;
}

LikertSummary summarize_likert(std::span<const int> values) {
  if (values.size() < 2) throw std::invalid_argument("summarize_likert needs at least two responses");
  for (int v : values) {
    if (v < 1 || v > 5) {
      throw std::invalid_argument("Likert response " + std::to_string(v) + " is outside 1..5");
    }
  }
  std::vector<double> as_real(values.begin(), values.end());
  const StatsSummary base = summarize(as_real);
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  LikertSummary s;
  s.n = base.n;
  s.min = *lo;
  s.max = *hi;
  s.mean = base.mean;
  // All-equal responses: report an exact zero rather than rounding noise.
  s.sd = (*lo == *hi) ? 0.0 : base.sd;
  return s;
}

double round_half_up(double value, int decimals) {
  const double scale = std::pow(10.0, decimals);
  const double scaled = std::abs(value) * scale;
  const double rounded = std::floor(scaled + 0.5) / scale;
  return std::copysign(rounded, value);
}

std::string format_fixed(double value, int decimals) {
  double r = round_half_up(value, decimals);
  if (r == 0.0) r = 0.0;  // no "-0.000"
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", decimals, r);
  return buf;
}

StatsInputError::StatsInputError(const std::string& source, std::size_t line,
                                 const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ": " + message) {}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

}  // namespace

std::vector<LikertItem> read_likert_csv(std::istream& in, const std::string& source_name) {
  std::vector<LikertItem> items;
  std::string line;
  std::size_t line_no = 0;
  bool seen_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string row = trim(line);
    if (row.empty()) continue;
    if (!seen_header) {
      if (row != "question_id,response") {
        throw StatsInputError(source_name, line_no, "expected header 'question_id,response'");
      }
      seen_header = true;
      continue;
    }
    const auto comma = row.rfind(',');
    if (comma == std::string::npos) throw StatsInputError(source_name, line_no, "expected two columns");
    const std::string question = trim(std::string_view(row).substr(0, comma));
    const std::string response = trim(std::string_view(row).substr(comma + 1));
    if (question.empty()) throw StatsInputError(source_name, line_no, "empty question_id");
    int value = 0;
    const auto [ptr, ec] = std::from_chars(response.data(), response.data() + response.size(), value);
    if (ec != std::errc() || ptr != response.data() + response.size()) {
      throw StatsInputError(source_name, line_no, "response '" + response + "' is not an integer");
    }
    if (value < 1 || value > 5) {
      throw StatsInputError(source_name, line_no, "response " + response + " is outside 1..5");
    }
    auto it = std::find_if(items.begin(), items.end(),
                           [&](const LikertItem& item) { return item.question == question; });
    if (it == items.end()) {
      items.push_back({question, {}});
      it = std::prev(items.end());
    }
    it->responses.push_back(value);
  }
  if (!seen_header) throw StatsInputError(source_name, line_no == 0 ? 1 : line_no, "missing header");
  return items;
}

std::vector<LikertItem> read_likert_csv_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open Likert file '" + path.string() + "'");
  return read_likert_csv(in, path.string());
}

double total_minutes(std::span<const SessionLog> sessions) {
  if (sessions.empty()) throw std::invalid_argument("log contains no sessions");
  std::int64_t total_ms = 0;
  for (const SessionLog& s : sessions) {
    const auto elapsed = s.elapsed_ms();
    if (!elapsed) {
      throw std::invalid_argument("session " + s.header.session_id + " has no SessionEnd event");
    }
    total_ms += *elapsed;
  }
  return static_cast<double>(total_ms) / 60000.0;
}

std::vector<TimingGroup> timing_groups_from_logs(std::span<const std::filesystem::path> logs,
                                                 std::span<const std::string> labels) {
  if (labels.size() > 1 && labels.size() != logs.size()) {
    throw std::invalid_argument("expected one group label per log, or a single label for all");
  }
  std::vector<TimingGroup> groups;
  for (std::size_t i = 0; i < logs.size(); ++i) {
    const std::string label =
        labels.empty() ? std::string("Use Program") : labels[labels.size() == 1 ? 0 : i];
    const std::vector<SessionLog> sessions = read_session_log_file(logs[i]);
    double minutes = 0.0;
    try {
      minutes = total_minutes(sessions);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(logs[i].string() + ": " + e.what());
    }
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const TimingGroup& g) { return g.label == label; });
    if (it == groups.end()) {
      groups.push_back({label, {}});
      it = std::prev(groups.end());
    }
    it->minutes.push_back(minutes);
  }
  return groups;
}

namespace {

std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()), 0);
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::string out;
  for (const auto& row : rows) {
    std::string line;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(widths[c] - row[c].size() + 2, ' ');
    }
    out += line + '\n';
  }
  return out;
}

}  // namespace

std::string render_stats_report(std::span<const TimingGroup> groups,
                                std::span<const LikertItem> likert) {
  std::string out;
  if (!groups.empty()) {
    std::vector<std::vector<std::string>> rows = {
        {"Mode of Testing", "N", "Mean", "Std. Deviation", "Std. Error of Mean"}};
    for (const TimingGroup& g : groups) {
      if (g.minutes.size() < 2) {
        throw std::invalid_argument("group '" + g.label + "' has " + std::to_string(g.minutes.size()) +
                                    " participant(s); at least two are required");
      }
      const StatsSummary s = summarize(g.minutes);
      rows.push_back({g.label, std::to_string(s.n), format_fixed(s.mean, 3), format_fixed(s.sd, 3),
                      format_fixed(s.sem, 3)});
    }
    out += "Time Completion (minutes)\n";
    out += render_table(rows);
  }
  if (!likert.empty()) {
    if (!out.empty()) out += '\n';
    std::vector<std::vector<std::string>> rows = {
        {"Question", "N", "Minimum", "Maximum", "Mean", "Std. Deviation"}};
    for (const LikertItem& item : likert) {
      LikertSummary s;
      try {
        s = summarize_likert(item.responses);
      } catch (const std::invalid_argument& e) {
        throw std::invalid_argument("question '" + item.question + "': " + e.what());
      }
      rows.push_back({item.question, std::to_string(s.n), std::to_string(s.min),
                      std::to_string(s.max), format_fixed(s.mean, 2), format_fixed(s.sd, 3)});
    }
    out += "Likert Scale Questions\n";
    out += render_table(rows);
  }
  return out;
}

std::string stats_report(std::span<const std::filesystem::path> logs,
                         std::span<const std::string> labels,
                         std::span<const std::filesystem::path> likert_csvs) {
  const std::vector<TimingGroup> groups = timing_groups_from_logs(logs, labels);
  std::vector<LikertItem> likert;
  for (const auto& path : likert_csvs) {
    for (LikertItem& item : read_likert_csv_file(path)) {
      auto it = std::find_if(likert.begin(), likert.end(),
                             [&](const LikertItem& l) { return l.question == item.question; });
      if (it == likert.end()) {
        likert.push_back(std::move(item));
      } else {
        it->responses.insert(it->responses.end(), item.responses.begin(), item.responses.end());
      }
    }
  }
  return render_stats_report(groups, likert);
}

}  // namespace ecohome
