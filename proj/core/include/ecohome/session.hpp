#pragma once

// Interactive drill-down state machine: a hard-coded main menu, then one
// menu per facet in drill-down order, then the matching advice.

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ecohome/kb.hpp"
#include "ecohome/query.hpp"

namespace ecohome {

inline constexpr std::string_view kErrZeroOptions =
    "***** ERROR!  Cannot Have Zero Options! ******";
inline constexpr std::string_view kErrTooManyOptions =
    "***** ERROR!  Number Entered is Greater than number of Options! *****";
/// Shown for input that is not an integer at all.
inline constexpr std::string_view kPromptEnterNumber = "Please enter a number.";

inline constexpr std::string_view kGetAdvice = "Get Advice";
inline constexpr std::string_view kQuit = "Quit";

/// Main menu entries, in display order.
const std::vector<std::string>& main_menu_options();

struct Selected {
  std::string value;
  friend bool operator==(const Selected&, const Selected&) = default;
};

struct Rejected {
  std::string message;
  friend bool operator==(const Rejected&, const Rejected&) = default;
};

using OptionOutcome = std::variant<Selected, Rejected>;

/// Maps a 1-based menu choice onto `options`. Total over all integers.
/// Throws std::invalid_argument when `options` is empty.
OptionOutcome validate_option(long long choice, std::span<const std::string> options);

struct MainMenuPhase {
  friend bool operator==(MainMenuPhase, MainMenuPhase) = default;
};
struct ChoosingPhase {
  FacetKey facet;
  friend bool operator==(ChoosingPhase, ChoosingPhase) = default;
};
struct ShowingAdvicePhase {
  friend bool operator==(ShowingAdvicePhase, ShowingAdvicePhase) = default;
};
struct EndedPhase {
  friend bool operator==(EndedPhase, EndedPhase) = default;
};

using Phase = std::variant<MainMenuPhase, ChoosingPhase, ShowingAdvicePhase, EndedPhase>;

struct SessionState {
  Phase phase = MainMenuPhase{};
  Selection selection;
  /// Options of the menu currently on screen (empty outside menus).
  std::vector<std::string> current_options;
  /// Advice for the completed selection (ShowingAdvice only).
  std::vector<AdviceResult> results;
};

enum class EventKind { MenuShown, ChoiceMade, ErrorShown, Restart, AdviceShown, SessionEnd };

std::string_view event_kind_name(EventKind kind) noexcept;
std::optional<EventKind> parse_event_kind(std::string_view name) noexcept;

struct SessionEvent {
  std::int64_t t_ms = 0;
  EventKind kind = EventKind::MenuShown;
  std::string detail;

  friend bool operator==(const SessionEvent&, const SessionEvent&) = default;
};

/// One user's walk through the menus. Holds a reference to the KB, which
/// must outlive the session.
class Session {
 public:
  /// Milliseconds elapsed since the session started.
  using Clock = std::function<std::chrono::milliseconds()>;

  /// Wall-clock elapsed time measured from the moment of the call.
  static Clock steady_clock_from_now();

  explicit Session(const KnowledgeBase& kb, Clock clock = steady_clock_from_now());

  const SessionState& state() const noexcept { return state_; }
  std::span<const SessionEvent> events() const noexcept { return events_; }
  std::size_t restart_count() const noexcept;

  /// Applies a 1-based menu choice. On rejection the state is unchanged
  /// apart from an ErrorShown event. Throws std::logic_error outside the
  /// main menu and facet menus.
  OptionOutcome apply_choice(long long choice);

  /// Records input that was not a number; the current menu stays up.
  void reject_non_numeric();

  /// Abandons the drill-down and returns to the main menu.
  /// Throws std::logic_error once the session has ended.
  void restart();

  /// Leaves the advice screen for the main menu (not counted as a restart).
  void return_to_main_menu();

  /// Logs SessionEnd and enters Ended. No-op if already ended.
  void end();

  bool ended() const noexcept { return std::holds_alternative<EndedPhase>(state_.phase); }

 private:
  void log(EventKind kind, std::string detail);
  void show_main_menu();
  void enter_menu(FacetKey facet);
  void show_advice();

  const KnowledgeBase* kb_;
  Clock clock_;
  SessionState state_;
  std::vector<SessionEvent> events_;
};

}  // namespace ecohome
