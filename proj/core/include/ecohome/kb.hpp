#pragma once

// Knowledge-base data model and the `.kb` fact file format.
//
// A KB file is a sequence of ground facts of the form
//
//   advice(area('Hot Water Systems'),
//          stage('Buying'),
//          type('Type of Hot Water System'),
//          ghg('Greenhouse Gas Emissions Facts'),
//          theAdvice('Don''t use a hot water system with a continuous pilot.'),
//          rationale('This can save $40 and 200kg of GHGs per year.')).
//
// Values are single-quoted, single-line strings; `''` is an escaped quote.
// Whitespace between tokens is insignificant and `%` starts a line comment.

#include <array>
#include <compare>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ecohome {

/// The four tags used to index advice, in drill-down order.
enum class FacetKey { Area = 0, Stage = 1, Type = 2, Ghg = 3 };

inline constexpr std::array<FacetKey, 4> kDrillDownOrder = {
    FacetKey::Area, FacetKey::Stage, FacetKey::Type, FacetKey::Ghg};

constexpr std::size_t facet_index(FacetKey key) noexcept {
  return static_cast<std::size_t>(key);
}

/// Lower-case wire name: "area", "stage", "type" or "ghg".
std::string_view facet_name(FacetKey key) noexcept;

/// Inverse of facet_name(); nullopt for anything else (case-sensitive).
std::optional<FacetKey> parse_facet(std::string_view name) noexcept;

struct AdviceFact {
  std::string area;
  std::string stage;
  std::string facet_type;
  std::string ghg;
  std::string advice_text;
  std::string rationale;

  const std::string& facet(FacetKey key) const noexcept;

  friend bool operator==(const AdviceFact&, const AdviceFact&) = default;
  friend auto operator<=>(const AdviceFact&, const AdviceFact&) = default;
};

/// Checks the single-fact invariants: every field non-blank and free of
/// control characters. Returns a description of the first violation.
std::optional<std::string> validate_fact(const AdviceFact& fact);

/// Ordered, immutable collection of facts. File order is preserved and
/// duplicates are kept.
class KnowledgeBase {
 public:
  KnowledgeBase() = default;
  /// Throws std::invalid_argument if any fact violates validate_fact().
  explicit KnowledgeBase(std::vector<AdviceFact> facts,
                         std::string source_name = {});

  std::span<const AdviceFact> facts() const noexcept { return facts_; }
  const std::string& source_name() const noexcept { return source_name_; }
  std::size_t size() const noexcept { return facts_.size(); }
  bool empty() const noexcept { return facts_.empty(); }

  /// Fact-for-fact equality; the source label is not compared.
  friend bool operator==(const KnowledgeBase& a, const KnowledgeBase& b) {
    return a.facts_ == b.facts_;
  }

 private:
  std::vector<AdviceFact> facts_;
  std::string source_name_;
};

/// Position (1-based, columns counted in bytes) and description of the
/// first malformed construct in a KB file.
struct ParseError {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;

  friend bool operator==(const ParseError&, const ParseError&) = default;
};

class KbParseException : public std::runtime_error {
 public:
  explicit KbParseException(ParseError error);
  const ParseError& error() const noexcept { return error_; }

 private:
  ParseError error_;
};

/// Parses KB text. Fails on the first malformed fact.
/// Throws KbParseException.
KnowledgeBase parse_kb(std::string_view input, std::string source_name = {});

/// Reads and parses a KB file. Throws KbParseException on malformed input
/// and std::runtime_error when the file cannot be read.
KnowledgeBase load_kb_file(const std::filesystem::path& path);

/// Canonical text form; parse_kb(serialize_kb(kb)) == kb.
std::string serialize_kb(const KnowledgeBase& kb);

/// Quotes a value for the KB format, doubling embedded single quotes.
std::string quote_kb_value(std::string_view value);

}  // namespace ecohome
