#include <algorithm>
#include <cctype>

#include "ecohome/kb.hpp"

namespace ecohome {

namespace {

constexpr std::array<std::string_view, 6> kFieldNames = {
    "area", "stage", "type", "ghg", "theAdvice", "rationale"};

struct Mark {
  std::size_t line;
  std::size_t column;
};

class FactParser {
 public:
  explicit FactParser(std::string_view input) : input_(input) {
    if (input_.starts_with("\xEF\xBB\xBF")) pos_ = 3;
  }

  std::vector<AdviceFact> parse_all() {
    std::vector<AdviceFact> facts;
    for (;;) {
      skip_layout();
      if (at_end()) break;
      facts.push_back(parse_fact());
    }
    return facts;
  }

 private:
  bool at_end() const { return pos_ >= input_.size(); }
  char peek() const { return at_end() ? '\0' : input_[pos_]; }
  char peek_next() const { return pos_ + 1 < input_.size() ? input_[pos_ + 1] : '\0'; }
  Mark mark() const { return {line_, column_}; }

  void advance() {
    if (input_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  [[noreturn]] void fail(Mark at, std::string message) const {
    throw KbParseException(ParseError{at.line, at.column, std::move(message)});
  }

  std::string describe_next() const {
    if (at_end()) return "end of input";
    const auto c = static_cast<unsigned char>(peek());
    if (c < 0x20 || c == 0x7f) return "a control character";
    return "'" + std::string(1, peek()) + "'";
  }

  // Whitespace and `%` line comments.
  void skip_layout() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        advance();
      } else if (c == '%') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  std::string_view identifier() {
    const std::size_t start = pos_;
    if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) {
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        advance();
      }
    }
    return input_.substr(start, pos_ - start);
  }

  void expect(char c, std::string_view context) {
    skip_layout();
    if (peek() != c) {
      fail(mark(), "expected '" + std::string(1, c) + "' " + std::string(context) + ", found " +
                       describe_next());
    }
    advance();
  }

  std::string quoted_value(std::string_view field) {
    skip_layout();
    const Mark open = mark();
    if (peek() != '\'') {
      fail(open, "expected a single-quoted value for " + std::string(field) + ", found " +
                     describe_next());
    }
    advance();
    std::string value;
    for (;;) {
      if (at_end() || peek() == '\n') fail(open, "unterminated string");
      const char c = peek();
      if (c == '\'') {
        if (peek_next() == '\'') {
          value.push_back('\'');
          advance();
          advance();
          continue;
        }
        advance();
        break;
      }
      const auto uc = static_cast<unsigned char>(c);
      if (uc < 0x20 || uc == 0x7f) fail(mark(), "control character in value");
      value.push_back(c);
      advance();
    }
    if (value.find_first_not_of(' ') == std::string::npos) {
      fail(open, "empty value for " + std::string(field));
    }
    return value;
  }

  std::string field(std::size_t index) {
    const std::string_view expected = kFieldNames[index];
    skip_layout();
    if (index > 0) {
      if (peek() == ')') fail(mark(), "missing field " + std::string(expected));
      expect(',', "between fields");
      skip_layout();
    }
    const Mark at = mark();
    const std::string_view name = identifier();
    if (name.empty()) {
      if (peek() == ')' || at_end()) fail(at, "missing field " + std::string(expected));
      fail(at, "expected " + std::string(expected) + "(...), found " + describe_next());
    }
    if (name != expected) {
      const bool known =
          std::find(kFieldNames.begin(), kFieldNames.end(), name) != kFieldNames.end();
      fail(at, (known ? "field " + std::string(name) + " out of order"
                      : "unknown wrapper '" + std::string(name) + "'") +
                   "; expected " + std::string(expected));
    }
    expect('(', "after " + std::string(expected));
    std::string value = quoted_value(expected);
    expect(')', "closing " + std::string(expected) + "(...)");
    return value;
  }

  AdviceFact parse_fact() {
    const Mark start = mark();
    const std::string_view head = identifier();
    if (head.empty()) fail(start, "expected a fact, found " + describe_next());
    if (head != "advice") {
      fail(start, "unknown wrapper '" + std::string(head) + "'; expected advice");
    }
    expect('(', "after advice");

    AdviceFact fact;
    fact.area = field(0);
    fact.stage = field(1);
    fact.facet_type = field(2);
    fact.ghg = field(3);
    fact.advice_text = field(4);
    fact.rationale = field(5);

    skip_layout();
    if (peek() == ',') fail(mark(), "too many fields; advice takes 6");
    if (peek() != ')') fail(mark(), "missing terminating ').', found " + describe_next());
    advance();
    skip_layout();
    if (peek() != '.') fail(mark(), "missing terminating ').', found " + describe_next());
    advance();
    return fact;
  }

  std::string_view input_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace

KnowledgeBase parse_kb(std::string_view input, std::string source_name) {
  return KnowledgeBase(FactParser(input).parse_all(), std::move(source_name));
}

}  // namespace ecohome
