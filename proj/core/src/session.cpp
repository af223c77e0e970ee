#include "ecohome/session.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecohome {

namespace {

constexpr std::array<std::string_view, 6> kEventKindNames = {
    "MenuShown", "ChoiceMade", "ErrorShown", "Restart", "AdviceShown", "SessionEnd"};

}  // namespace

const std::vector<std::string>& main_menu_options() {
  static const std::vector<std::string> options = {std::string(kGetAdvice), std::string(kQuit)};
  return options;
}

OptionOutcome validate_option(long long choice, std::span<const std::string> options) {
  if (options.empty()) throw std::invalid_argument("validate_option needs at least one option");
  if (choice < 1) return Rejected{std::string(kErrZeroOptions)};
  if (static_cast<unsigned long long>(choice) > options.size()) {
    return Rejected{std::string(kErrTooManyOptions)};
  }
  return Selected{options[static_cast<std::size_t>(choice - 1)]};
}

std::string_view event_kind_name(EventKind kind) noexcept {
  return kEventKindNames[static_cast<std::size_t>(kind)];
}

std::optional<EventKind> parse_event_kind(std::string_view name) noexcept {
  const auto it = std::find(kEventKindNames.begin(), kEventKindNames.end(), name);
  if (it == kEventKindNames.end()) return std::nullopt;
  return static_cast<EventKind>(it - kEventKindNames.begin());
}

Session::Clock Session::steady_clock_from_now() {
  const auto start = std::chrono::steady_clock::now();
  return [start] {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                                  start);
  };
}

Session::Session(const KnowledgeBase& kb, Clock clock) : kb_(&kb), clock_(std::move(clock)) {
  show_main_menu();
}

std::size_t Session::restart_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(
      events_.begin(), events_.end(), [](const SessionEvent& e) { return e.kind == EventKind::Restart; }));
}

void Session::log(EventKind kind, std::string detail) {
  std::int64_t t = clock_().count();
  if (!events_.empty()) t = std::max(t, events_.back().t_ms);
  events_.push_back({t, kind, std::move(detail)});
}

void Session::show_main_menu() {
  state_.phase = MainMenuPhase{};
  state_.selection.clear();
  state_.results.clear();
  state_.current_options = main_menu_options();
  log(EventKind::MenuShown, "main");
}

void Session::enter_menu(FacetKey facet) {
  std::vector<std::string> options = distinct_values(*kb_, facet, state_.selection);
  if (options.empty()) {
    // Only reachable from the main menu of an empty KB: every deeper menu is
    // derived from a value that a matching fact supplied.
    if (!state_.selection.empty()) {
      throw std::logic_error("empty " + std::string(facet_name(facet)) +
                             " menu below a non-empty selection");
    }
    state_.current_options.clear();
    state_.results.clear();
    state_.phase = ShowingAdvicePhase{};
    log(EventKind::AdviceShown, "0");
    return;
  }
  state_.current_options = std::move(options);
  state_.phase = ChoosingPhase{facet};
  log(EventKind::MenuShown, std::string(facet_name(facet)));
}

void Session::show_advice() {
  state_.results = resolve_advice(*kb_, state_.selection);
  state_.current_options.clear();
  state_.phase = ShowingAdvicePhase{};
  log(EventKind::AdviceShown, std::to_string(state_.results.size()));
}

OptionOutcome Session::apply_choice(long long choice) {
  const bool at_main = std::holds_alternative<MainMenuPhase>(state_.phase);
  const auto* choosing = std::get_if<ChoosingPhase>(&state_.phase);
  if (!at_main && choosing == nullptr) {
    throw std::logic_error("apply_choice is only valid at a menu");
  }

  OptionOutcome outcome = validate_option(choice, state_.current_options);
  if (const auto* rejected = std::get_if<Rejected>(&outcome)) {
    log(EventKind::ErrorShown, rejected->message);
    return outcome;
  }
  const std::string& value = std::get<Selected>(outcome).value;

  if (at_main) {
    log(EventKind::ChoiceMade, value);
    if (value == kQuit) {
      end();
    } else {
      enter_menu(FacetKey::Area);
    }
    return outcome;
  }

  const FacetKey facet = choosing->facet;
  log(EventKind::ChoiceMade, std::string(facet_name(facet)) + "=" + value);
  state_.selection.bind(facet, value);
  if (auto next = state_.selection.next_facet()) {
    enter_menu(*next);
  } else {
    show_advice();
  }
  return outcome;
}

void Session::reject_non_numeric() {
  log(EventKind::ErrorShown, std::string(kPromptEnterNumber));
}

void Session::restart() {
  if (ended()) throw std::logic_error("cannot restart an ended session");
  log(EventKind::Restart, std::to_string(state_.selection.depth()));
  show_main_menu();
}

void Session::return_to_main_menu() {
  if (!std::holds_alternative<ShowingAdvicePhase>(state_.phase)) {
    throw std::logic_error("return_to_main_menu is only valid after advice is shown");
  }
  show_main_menu();
}

void Session::end() {
  if (ended()) return;
  state_.current_options.clear();
  state_.phase = EndedPhase{};
  log(EventKind::SessionEnd, "");
}

}  // namespace ecohome
