#pragma once

// Terminal front end: the numbered-menu wizard, scenario mode, the stats
// report and the HTTP server launcher.

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ecohome/kb.hpp"
#include "ecohome/scenarios.hpp"
#include "ecohome/session.hpp"
#include "ecohome/session_log.hpp"

namespace ecohome {

enum class Command { Run, Scenarios, Stats, Serve };

struct CliConfig {
  Command command = Command::Run;
  std::filesystem::path kb_path;
  /// run/scenarios: log file to append to. stats: the logs to read.
  std::vector<std::filesystem::path> log_paths;
  std::vector<std::string> group_labels;
  std::vector<std::filesystem::path> likert_paths;
  int port = 8080;
  std::optional<std::filesystem::path> scenario_file;
  std::optional<std::filesystem::path> static_dir;
};

namespace exit_code {
inline constexpr int kOk = 0;
inline constexpr int kIoError = 1;
inline constexpr int kParseError = 2;
inline constexpr int kUsage = 64;  // bad command line, as sysexits EX_USAGE
}  // namespace exit_code

/// Seams for tests: where session clocks and ids come from.
struct DriverHooks {
  std::function<Session::Clock()> clock_factory = [] { return Session::steady_clock_from_now(); };
  std::function<std::string()> session_id = make_session_id;
};

/// Menu heading for a facet menu; the main menu is "Main Menu".
std::string_view menu_title(FacetKey facet) noexcept;

/// Prints one result in the two-line "Advice : " / "Rationale : " layout.
void render_advice(std::ostream& out, std::span<const AdviceResult> results);

/// Drives one session from `in` until the user picks Quit or input ends.
/// Entering `r` or `restart` at any menu restarts the drill-down.
SessionLog run_session(const KnowledgeBase& kb, std::istream& in, std::ostream& out,
                       const DriverHooks& hooks, std::optional<std::string> scenario_id = std::nullopt);

/// One interactive session. Appends its log to `log` when given.
int run_interactive(const KnowledgeBase& kb, std::istream& in, std::ostream& out,
                    std::ostream* log = nullptr, const DriverHooks& hooks = {});

/// One session per scenario, in file order. Stops early if input ends.
/// Each scenario's elapsed time and restart count go to `log`.
int run_scenarios(const KnowledgeBase& kb, std::span<const Scenario> scenarios, std::istream& in,
                  std::ostream& out, std::ostream* log = nullptr, const DriverHooks& hooks = {});

/// Loads files named by `config` and runs the command. Errors go to `err`.
int run_command(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err,
                const DriverHooks& hooks = {});

/// Parses argv (CLI11) and dispatches to run_command().
int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err);

}  // namespace ecohome
