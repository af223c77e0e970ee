#include <gtest/gtest.h>

#include <climits>
#include <memory>
#include <random>
#include <sstream>

#include "ecohome/session.hpp"
#include "ecohome/session_log.hpp"
#include "support/oracles.hpp"

namespace ecohome {
namespace {

// Manually advanced clock shared between a test and its session.
struct FakeClock {
  std::shared_ptr<std::int64_t> now = std::make_shared<std::int64_t>(0);
  Session::Clock clock() const {
    return [now = now] { return std::chrono::milliseconds(*now); };
  }
  void advance(std::int64_t ms) const { *now += ms; }
};

std::vector<EventKind> kinds(std::span<const SessionEvent> events) {
  std::vector<EventKind> out;
  for (const auto& e : events) out.push_back(e.kind);
  return out;
}

long long index_of(const std::vector<std::string>& options, std::string_view value) {
  const auto it = std::find(options.begin(), options.end(), value);
  EXPECT_NE(it, options.end()) << value;
  return static_cast<long long>(it - options.begin()) + 1;
}

TEST(ValidateOption, Basics) {
  const std::vector<std::string> one = {"x"};
  EXPECT_EQ(validate_option(1, one), OptionOutcome(Selected{"x"}));
  EXPECT_EQ(validate_option(0, one), OptionOutcome(Rejected{std::string(kErrZeroOptions)}));
  const std::vector<std::string> three = {"a", "b", "c"};
  EXPECT_EQ(validate_option(5, three), OptionOutcome(Rejected{std::string(kErrTooManyOptions)}));
  EXPECT_EQ(validate_option(3, three), OptionOutcome(Selected{"c"}));
  EXPECT_EQ(validate_option(-1, three), OptionOutcome(Rejected{std::string(kErrZeroOptions)}));
  EXPECT_EQ(validate_option(LLONG_MIN, three), OptionOutcome(Rejected{std::string(kErrZeroOptions)}));
  EXPECT_EQ(validate_option(LLONG_MAX, three), OptionOutcome(Rejected{std::string(kErrTooManyOptions)}));
  EXPECT_THROW(validate_option(1, std::vector<std::string>{}), std::invalid_argument);
}

TEST(ValidateOption, ErrorStringsAreByteExact) {
  EXPECT_EQ(kErrZeroOptions, "***** ERROR!  Cannot Have Zero Options! ******");
  EXPECT_EQ(kErrTooManyOptions,
            "***** ERROR!  Number Entered is Greater than number of Options! *****");
}

TEST(ValidateOption, TotalOverRandomIntegers) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> any(LLONG_MIN, LLONG_MAX);
  std::uniform_int_distribution<std::size_t> len(1, 20);
  for (int i = 0; i < 20000; ++i) {
    std::vector<std::string> options(len(rng));
    for (std::size_t k = 0; k < options.size(); ++k) options[k] = std::to_string(k + 1);
    const long long choice = (i % 2 == 0) ? any(rng) : static_cast<long long>(rng() % 30) - 5;
    const OptionOutcome out = validate_option(choice, options);
    if (choice >= 1 && choice <= static_cast<long long>(options.size())) {
      ASSERT_EQ(std::get<Selected>(out).value, std::to_string(choice));
    } else {
      ASSERT_TRUE(std::holds_alternative<Rejected>(out));
    }
  }
}

TEST(Session, StartsAtHardCodedMainMenu) {
  const KnowledgeBase kb = load_kb_file(testing::sample_kb_path());
  Session session(kb, FakeClock{}.clock());
  EXPECT_TRUE(std::holds_alternative<MainMenuPhase>(session.state().phase));
  EXPECT_EQ(session.state().current_options, (std::vector<std::string>{"Get Advice", "Quit"}));
  EXPECT_TRUE(session.state().selection.empty());
  ASSERT_EQ(session.events().size(), 1u);
  EXPECT_EQ(session.events()[0].kind, EventKind::MenuShown);

  const KnowledgeBase empty;
  Session empty_session(empty, FakeClock{}.clock());
  EXPECT_EQ(empty_session.state().current_options, main_menu_options());
}

TEST(Session, GetAdviceEntersAreaMenu) {
  const KnowledgeBase kb = load_kb_file(testing::sample_kb_path());
  Session session(kb, FakeClock{}.clock());
  session.apply_choice(1);
  EXPECT_EQ(session.state().phase, Phase(ChoosingPhase{FacetKey::Area}));
  EXPECT_EQ(session.state().current_options, distinct_values(kb, FacetKey::Area, {}));
}

TEST(Session, EmptyKbGoesStraightToEmptyAdvice) {
  const KnowledgeBase kb;
  Session session(kb, FakeClock{}.clock());
  session.apply_choice(1);
  EXPECT_TRUE(std::holds_alternative<ShowingAdvicePhase>(session.state().phase));
  EXPECT_TRUE(session.state().results.empty());
}

TEST(Session, WorkedExamplePathReachesPilotAdvice) {
  const KnowledgeBase kb = load_kb_file(testing::sample_kb_path());
  Session session(kb, FakeClock{}.clock());
  session.apply_choice(1);
  for (std::string_view v : {"Hot Water Systems", "Buying", "Type of Hot Water System"}) {
    session.apply_choice(index_of(session.state().current_options, v));
  }
  ASSERT_EQ(session.state().phase, Phase(ChoosingPhase{FacetKey::Ghg}));
  session.apply_choice(index_of(session.state().current_options, "Greenhouse Gas Emissions Facts"));
  ASSERT_TRUE(std::holds_alternative<ShowingAdvicePhase>(session.state().phase));
  ASSERT_EQ(session.state().results.size(), 1u);
  EXPECT_EQ(session.state().results[0].advice_text,
            "Don't use a hot water system with a continuous pilot.");
  EXPECT_EQ(session.events().back().kind, EventKind::AdviceShown);
}

TEST(Session, RejectedChoiceKeepsStateAndLogsError) {
  const KnowledgeBase kb = load_kb_file(testing::sample_kb_path());
  Session session(kb, FakeClock{}.clock());
  session.apply_choice(1);
  const SessionState before = session.state();
  const std::size_t n_events = session.events().size();
  const OptionOutcome out = session.apply_choice(0);
  EXPECT_EQ(std::get<Rejected>(out).message, kErrZeroOptions);
  EXPECT_EQ(session.state().phase, before.phase);
  EXPECT_EQ(session.state().current_options, before.current_options);
  EXPECT_EQ(session.state().selection, before.selection);
  ASSERT_EQ(session.events().size(), n_events + 1);
  EXPECT_EQ(session.events().back().kind, EventKind::ErrorShown);
  EXPECT_EQ(session.events().back().detail, kErrZeroOptions);
}

TEST(Session, OneFactKbTakesExactlyFourSelections) {
  const KnowledgeBase kb({testing::hot_water_pilot_fact()});
  Session session(kb, FakeClock{}.clock());
  session.apply_choice(1);
  int selected = 0;
  while (std::holds_alternative<ChoosingPhase>(session.state().phase)) {
    ASSERT_EQ(session.state().current_options.size(), 1u);
    ASSERT_TRUE(std::holds_alternative<Selected>(session.apply_choice(1)));
    ++selected;
  }
  EXPECT_EQ(selected, 4);
  ASSERT_EQ(session.state().results.size(), 1u);
  EXPECT_EQ(session.state().results[0].rationale, "This can save $40 and 200kg of GHGs per year.");
}

TEST(Session, RestartClearsSelectionAndKeepsHistory) {
  const KnowledgeBase kb = load_kb_file(testing::sample_kb_path());
  FakeClock clock;
  Session session(kb, clock.clock());
  session.apply_choice(1);
  session.apply_choice(1);
  session.apply_choice(1);
  ASSERT_EQ(session.state().phase, Phase(ChoosingPhase{FacetKey::Type}));
  clock.advance(50);
  session.restart();
  EXPECT_TRUE(std::holds_alternative<MainMenuPhase>(session.state().phase));
  EXPECT_TRUE(session.state().selection.empty());
  session.restart();
  EXPECT_EQ(session.restart_count(), 2u);
  std::int64_t last = -1;
  for (const auto& e : session.events()) {
    EXPECT_GE(e.t_ms, last);
    last = e.t_ms;
  }
  EXPECT_EQ(session.events().front().kind, EventKind::MenuShown);
}

TEST(Session, QuitEndsAndEndedRejectsFurtherUse) {
  const KnowledgeBase kb = load_kb_file(testing::sample_kb_path());
  Session session(kb, FakeClock{}.clock());
  session.apply_choice(2);
  EXPECT_TRUE(session.ended());
  EXPECT_EQ(session.events().back().kind, EventKind::SessionEnd);
  EXPECT_THROW(session.restart(), std::logic_error);
  EXPECT_THROW(session.apply_choice(1), std::logic_error);
  session.end();
  EXPECT_EQ(session.events().back().kind, EventKind::SessionEnd);
  EXPECT_EQ(std::count_if(session.events().begin(), session.events().end(),
                          [](const SessionEvent& e) { return e.kind == EventKind::SessionEnd; }),
            1);
}

TEST(Session, TimestampsNeverGoBackwards) {
  const KnowledgeBase kb({testing::hot_water_pilot_fact()});
  auto t = std::make_shared<std::int64_t>(100);
  Session session(kb, [t] { return std::chrono::milliseconds((*t -= 10)); });
  session.apply_choice(1);
  session.apply_choice(1);
  for (std::size_t i = 1; i < session.events().size(); ++i) {
    EXPECT_GE(session.events()[i].t_ms, session.events()[i - 1].t_ms);
  }
}

TEST(Session, DeterministicForSameChoices) {
  std::mt19937_64 rng(11);
  for (int round = 0; round < 50; ++round) {
    const KnowledgeBase kb = testing::random_kb(rng, 40, 3);
    std::vector<long long> script;
    std::uniform_int_distribution<long long> pick(-1, 4);
    for (int i = 0; i < 12; ++i) script.push_back(pick(rng));

    auto play = [&] {
      Session s(kb, FakeClock{}.clock());
      for (long long c : script) {
        if (s.ended()) break;
        if (std::holds_alternative<ShowingAdvicePhase>(s.state().phase)) s.return_to_main_menu();
        s.apply_choice(c);
      }
      return std::make_pair(kinds(s.events()), s.state().results);
    };
    ASSERT_EQ(play(), play());
  }
}

TEST(Session, EveryMenuNonEmptyOnNonEmptyKbs) {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const KnowledgeBase kb = testing::random_kb(rng, 30, 5);
    if (kb.empty()) continue;
    Session s(kb, FakeClock{}.clock());
    s.apply_choice(1);
    while (std::holds_alternative<ChoosingPhase>(s.state().phase)) {
      const auto& options = s.state().current_options;
      ASSERT_FALSE(options.empty());
      s.apply_choice(static_cast<long long>(rng() % options.size()) + 1);
    }
    ASSERT_FALSE(s.state().results.empty());
  }
}

TEST(SessionLogFormat, RecordsAreBitExact) {
  EXPECT_EQ(header_record({"abc", "data/sample.kb", std::nullopt}),
            R"({"session_id":"abc","kb_source":"data/sample.kb","scenario_id":null})");
  EXPECT_EQ(header_record({"abc", "k", "2"}),
            R"({"session_id":"abc","kb_source":"k","scenario_id":"2"})");
  EXPECT_EQ(event_record({812, EventKind::ChoiceMade, "area=Hot Water Systems"}),
            R"({"t_ms":812,"kind":"ChoiceMade","detail":"area=Hot Water Systems"})");
}

TEST(SessionLogFormat, WriteThenReadIsIdentity) {
  const KnowledgeBase kb = load_kb_file(testing::sample_kb_path());
  FakeClock clock;
  Session session(kb, clock.clock());
  session.apply_choice(1);
  clock.advance(120);
  session.apply_choice(9);
  session.restart();
  clock.advance(30);
  session.apply_choice(2);

  SessionLog a{{"id-1", kb.source_name(), std::nullopt}, {session.events().begin(), session.events().end()}};
  SessionLog b{{"id-2", kb.source_name(), "3"}, {{0, EventKind::MenuShown, "main"}, {5, EventKind::SessionEnd, ""}}};
  std::stringstream buffer;
  write_session_log(buffer, a);
  write_session_log(buffer, b);
  const auto back = read_session_logs(buffer, "mem");
  ASSERT_EQ(back.size(), 2u);
  EXPECT_EQ(back[0], a);
  EXPECT_EQ(back[1], b);
  EXPECT_EQ(back[0].restart_count(), 1u);
  EXPECT_EQ(back[0].elapsed_ms(), 150);
}

TEST(SessionLogFormat, MalformedInputNamesSourceAndLine) {
  auto error_of = [](const std::string& text) -> std::string {
    std::istringstream in(text);
    try {
      read_session_logs(in, "p1.jsonl");
    } catch (const SessionLogError& e) {
      return e.what();
    }
    return "no error";
  };
  const std::string header = R"({"session_id":"s","kb_source":"k","scenario_id":null})";
  EXPECT_EQ(error_of(R"({"t_ms":0,"kind":"MenuShown","detail":""})"),
            "p1.jsonl:1: event before session header");
  EXPECT_EQ(error_of(header + "\n\nnot json\n"), "p1.jsonl:3: not a JSON object");
  EXPECT_EQ(error_of(header + "\n" + R"({"t_ms":0,"kind":"Dance","detail":""})"),
            "p1.jsonl:2: unknown event kind 'Dance'");
  EXPECT_EQ(error_of(header + "\n" + R"({"t_ms":5,"kind":"MenuShown","detail":""})" + "\n" +
                     R"({"t_ms":4,"kind":"MenuShown","detail":""})"),
            "p1.jsonl:3: timestamps must be non-decreasing");
  EXPECT_EQ(error_of(R"({"session_id":"s","kb_source":"k"})"), "p1.jsonl:1: missing field 'scenario_id'");
}

TEST(SessionLogFormat, SessionIdsAreHex) {
  const std::string id = make_session_id();
  EXPECT_EQ(id.size(), 16u);
  EXPECT_EQ(id.find_first_not_of("0123456789abcdef"), std::string::npos);
}

}  // namespace
}  // namespace ecohome
