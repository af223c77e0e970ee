#pragma once

// Menu derivation and advice resolution over a KnowledgeBase.
//
// distinct_values() has sort/2 semantics (byte-wise ascending, duplicates
// removed); resolve_advice() has findall/3 semantics (KB order, duplicates
// kept). Matching is exact and case-sensitive.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ecohome/kb.hpp"

namespace ecohome {

/// Partial facet assignment built up in drill-down order. Holds a prefix
/// of kDrillDownOrder: binding Ghg implies Area, Stage and Type are bound.
class Selection {
 public:
  Selection() = default;

  /// Builds a selection from up to four values taken in drill-down order.
  /// Throws std::invalid_argument for more than four values.
  static Selection from_prefix(std::vector<std::string> values);

  /// Binds the next facet. Throws std::logic_error if `key` is not
  /// next_facet().
  void bind(FacetKey key, std::string value);

  std::optional<std::string_view> get(FacetKey key) const noexcept;
  bool is_bound(FacetKey key) const noexcept { return facet_index(key) < values_.size(); }

  /// Number of bound facets (0..4).
  std::size_t depth() const noexcept { return values_.size(); }
  bool complete() const noexcept { return values_.size() == kDrillDownOrder.size(); }
  bool empty() const noexcept { return values_.empty(); }

  /// The facet that may be bound next; nullopt once complete.
  std::optional<FacetKey> next_facet() const noexcept;

  /// True when every bound facet precedes `target` in drill-down order.
  bool binds_only_before(FacetKey target) const noexcept {
    return values_.size() <= facet_index(target);
  }

  bool matches(const AdviceFact& fact) const noexcept;

  void clear() noexcept { values_.clear(); }
  const std::vector<std::string>& values() const noexcept { return values_; }

  friend bool operator==(const Selection&, const Selection&) = default;

 private:
  std::vector<std::string> values_;
};

struct AdviceResult {
  std::string advice_text;
  std::string rationale;

  friend bool operator==(const AdviceResult&, const AdviceResult&) = default;
};

/// Sorted, de-duplicated values of `target` over the facts matching every
/// binding in `constraints`. Throws std::invalid_argument if `constraints`
/// binds `target` or a later facet.
std::vector<std::string> distinct_values(const KnowledgeBase& kb, FacetKey target,
                                         const Selection& constraints);

/// (advice, rationale) of every fact matching all four bindings, in KB
/// order. Throws std::invalid_argument if the selection is incomplete.
std::vector<AdviceResult> resolve_advice(const KnowledgeBase& kb, const Selection& selection);

}  // namespace ecohome
