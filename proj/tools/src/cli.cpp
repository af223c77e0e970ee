#include "ecohome/cli.hpp"

#include <charconv>
#include <climits>
#include <fstream>
#include <iostream>
#include <memory>

#include "CLI11.hpp"
#include "ecohome/query.hpp"
#include "ecohome/service.hpp"
#include "ecohome/stats.hpp"
#include "httplib.h"

namespace ecohome {

namespace {

constexpr std::string_view kChoicePrompt = "Choice (r to restart): ";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Integer menu input. Values beyond long long saturate so that range
// checking still reports the right error.
std::optional<long long> parse_choice(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ptr != text.data() + text.size()) return std::nullopt;
  if (ec == std::errc::result_out_of_range) return text.front() == '-' ? LLONG_MIN : LLONG_MAX;
  if (ec != std::errc()) return std::nullopt;
  return value;
}

bool is_restart(std::string_view text) {
  text = trim(text);
  return text == "r" || text == "restart";
}

void render_menu(std::ostream& out, const SessionState& state) {
  out << '\n';
  if (const auto* choosing = std::get_if<ChoosingPhase>(&state.phase)) {
    out << menu_title(choosing->facet) << '\n';
  } else {
    out << "Main Menu\n";
  }
  for (std::size_t i = 0; i < state.current_options.size(); ++i) {
    out << (i + 1) << ". " << state.current_options[i] << '\n';
  }
  out << kChoicePrompt << std::flush;
}

}  // namespace

std::string_view menu_title(FacetKey facet) noexcept {
  switch (facet) {
    case FacetKey::Area: return "Aspect of Home Menu";
    case FacetKey::Stage: return "Stage Menu";
    case FacetKey::Type: return "Type Menu";
    case FacetKey::Ghg: break;
  }
  return "Greenhouse Gas Menu";
}

void render_advice(std::ostream& out, std::span<const AdviceResult> results) {
  if (results.empty()) {
    out << "\nNo advice found.\n";
    return;
  }
  for (const AdviceResult& r : results) {
    out << "\nAdvice : " << r.advice_text << "\nRationale : " << r.rationale << '\n';
  }
}

SessionLog run_session(const KnowledgeBase& kb, std::istream& in, std::ostream& out,
                       const DriverHooks& hooks, std::optional<std::string> scenario_id) {
  SessionLog log;
  log.header = {hooks.session_id(), kb.source_name(), std::move(scenario_id)};

  Session session(kb, hooks.clock_factory());
  render_menu(out, session.state());

  std::string line;
  while (!session.ended()) {
    if (!std::getline(in, line)) {
      out << '\n';
      session.end();
      break;
    }
    if (is_restart(line)) {
      session.restart();
      render_menu(out, session.state());
      continue;
    }
    const auto choice = parse_choice(line);
    if (!choice) {
      session.reject_non_numeric();
      out << '\n' << kPromptEnterNumber << '\n';
      render_menu(out, session.state());
      continue;
    }
    const OptionOutcome outcome = session.apply_choice(*choice);
    if (const auto* rejected = std::get_if<Rejected>(&outcome)) {
      out << '\n' << rejected->message << '\n';
      render_menu(out, session.state());
      continue;
    }
    if (std::holds_alternative<ShowingAdvicePhase>(session.state().phase)) {
      render_advice(out, session.state().results);
      session.return_to_main_menu();
    }
    if (!session.ended()) render_menu(out, session.state());
  }

  const auto events = session.events();
  log.events.assign(events.begin(), events.end());
  return log;
}

int run_interactive(const KnowledgeBase& kb, std::istream& in, std::ostream& out, std::ostream* log,
                    const DriverHooks& hooks) {
  const SessionLog session = run_session(kb, in, out, hooks);
  if (log != nullptr) {
    write_session_log(*log, session);
    log->flush();
    if (!*log) return exit_code::kIoError;
  }
  return exit_code::kOk;
}

int run_scenarios(const KnowledgeBase& kb, std::span<const Scenario> scenarios, std::istream& in,
                  std::ostream& out, std::ostream* log, const DriverHooks& hooks) {
  for (const Scenario& scenario : scenarios) {
    out << "\n=== Scenario " << scenario.id << " ===\n" << scenario.prompt << '\n';
    const SessionLog session = run_session(kb, in, out, hooks, scenario.id);
    out << "\nScenario " << scenario.id << " finished (restarts: " << session.restart_count()
        << ").\n";
    if (log != nullptr) {
      write_session_log(*log, session);
      log->flush();
      if (!*log) return exit_code::kIoError;
    }
    if (!in) break;
  }
  return exit_code::kOk;
}

namespace {

std::unique_ptr<std::ofstream> open_log(const CliConfig& config) {
  if (config.log_paths.empty()) return nullptr;
  auto file = std::make_unique<std::ofstream>(config.log_paths.front(), std::ios::app);
  if (!*file) {
    throw std::runtime_error("cannot open log file '" + config.log_paths.front().string() + "'");
  }
  return file;
}

int serve(const KnowledgeBase& kb, const CliConfig& config, std::ostream& out) {
  const AdviceApi api(kb);
  httplib::Server server;
  mount_routes(server, api, config.static_dir);
  out << "Serving " << kb.size() << " facts from " << kb.source_name() << " on port "
      << config.port << std::endl;
  if (!server.listen("0.0.0.0", config.port)) {
    throw std::runtime_error("cannot listen on port " + std::to_string(config.port));
  }
  return exit_code::kOk;
}

}  // namespace

int run_command(const CliConfig& config, std::istream& in, std::ostream& out, std::ostream& err,
                const DriverHooks& hooks) {
  try {
    if (config.command == Command::Stats) {
      if (config.log_paths.empty()) throw std::invalid_argument("stats requires at least one --log");
      out << stats_report(config.log_paths, config.group_labels, config.likert_paths);
      return exit_code::kOk;
    }

    const KnowledgeBase kb = load_kb_file(config.kb_path);
    switch (config.command) {
      case Command::Run: {
        auto log = open_log(config);
        return run_interactive(kb, in, out, log.get(), hooks);
      }
      case Command::Scenarios: {
        if (!config.scenario_file) throw std::invalid_argument("scenarios requires --scenarios");
        const std::vector<Scenario> scenarios = load_scenarios(*config.scenario_file);
        auto log = open_log(config);
        return run_scenarios(kb, scenarios, in, out, log.get(), hooks);
      }
      case Command::Serve:
        return serve(kb, config, out);
      case Command::Stats:
        break;
    }
  } catch (const KbParseException& e) {
    err << "error: " << config.kb_path.string() << ":" << e.error().line << ":" << e.error().column
        << ": " << e.error().message << '\n';
    return exit_code::kParseError;
  } catch (const ScenarioFormatError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kParseError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::kIoError;
  }
  return exit_code::kOk;
}

int cli_main(int argc, const char* const* argv, std::istream& in, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"ecohome: home energy advice by drill-down menus"};
  app.require_subcommand(1);

  CliConfig config;
  std::string log_path;

  auto* run = app.add_subcommand("run", "Interactive advice wizard");
  run->add_option("--kb", config.kb_path, "Knowledge base file (.kb)")->required();
  run->add_option("--log", log_path, "Append the session log to this file");

  auto* scenarios = app.add_subcommand("scenarios", "Timed study scenarios");
  scenarios->add_option("--kb", config.kb_path, "Knowledge base file (.kb)")->required();
  scenarios->add_option("--scenarios", config.scenario_file, "Scenario file (id<TAB>prompt)")
      ->required();
  scenarios->add_option("--log", log_path, "Append session logs to this file");

  auto* stats = app.add_subcommand("stats", "Completion-time and Likert summary tables");
  stats->add_option("--log", config.log_paths, "Participant session log (repeatable)")->required();
  stats->add_option("--group", config.group_labels,
                    "Group label per --log, or one label for all (repeatable)");
  stats->add_option("--likert", config.likert_paths, "Likert CSV question_id,response (repeatable)");

  auto* serve_cmd = app.add_subcommand("serve", "HTTP JSON API");
  serve_cmd->add_option("--kb", config.kb_path, "Knowledge base file (.kb)")->required();
  serve_cmd->add_option("--port", config.port, "Listen port")->default_val(8080)->check(CLI::Range(1, 65535));
  serve_cmd->add_option("--static", config.static_dir, "Directory with the web UI bundle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // --help and --version come through here too and exit 0.
    return app.exit(e, out, err) == 0 ? exit_code::kOk : exit_code::kUsage;
  }

  if (run->parsed()) config.command = Command::Run;
  if (scenarios->parsed()) config.command = Command::Scenarios;
  if (stats->parsed()) config.command = Command::Stats;
  if (serve_cmd->parsed()) config.command = Command::Serve;
  if (!log_path.empty()) config.log_paths = {log_path};

  return run_command(config, in, out, err);
}

}  // namespace ecohome
