#pragma once

// Line-delimited JSON session logs. A log file holds one or more sessions;
// each starts with a header record followed by its event records:
//
//   {"session_id":"7f3a...","kb_source":"data/sample.kb","scenario_id":"1"}
//   {"t_ms":0,"kind":"MenuShown","detail":"main"}
//   {"t_ms":812,"kind":"ChoiceMade","detail":"Get Advice"}
//
// Keys are written in exactly this order. scenario_id is null outside
// scenario mode. See docs/session-log.md.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ecohome/session.hpp"

namespace ecohome {

struct SessionLogHeader {
  std::string session_id;
  std::string kb_source;
  std::optional<std::string> scenario_id;

  friend bool operator==(const SessionLogHeader&, const SessionLogHeader&) = default;
};

struct SessionLog {
  SessionLogHeader header;
  std::vector<SessionEvent> events;

  std::size_t restart_count() const noexcept;
  /// t_ms of the SessionEnd event; nullopt if the session never ended.
  std::optional<std::int64_t> elapsed_ms() const noexcept;

  friend bool operator==(const SessionLog&, const SessionLog&) = default;
};

/// Raised for malformed log input; what() names the source and line.
class SessionLogError : public std::runtime_error {
 public:
  SessionLogError(std::string source, std::size_t line, const std::string& message);
  const std::string& source() const noexcept { return source_; }
  std::size_t line() const noexcept { return line_; }

 private:
  std::string source_;
  std::size_t line_;
};

std::string header_record(const SessionLogHeader& header);
std::string event_record(const SessionEvent& event);

/// Writes header + events, one JSON object per line.
void write_session_log(std::ostream& out, const SessionLog& log);

/// Reads every session in a log stream. Blank lines are ignored.
/// Throws SessionLogError.
std::vector<SessionLog> read_session_logs(std::istream& in, const std::string& source_name);
std::vector<SessionLog> read_session_log_file(const std::filesystem::path& path);

/// Random 16-hex-digit identifier.
std::string make_session_id();

}  // namespace ecohome
