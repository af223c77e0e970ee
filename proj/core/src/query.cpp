#include "ecohome/query.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecohome {

Selection Selection::from_prefix(std::vector<std::string> values) {
  if (values.size() > kDrillDownOrder.size()) {
    throw std::invalid_argument("a selection binds at most four facets");
  }
  Selection s;
  s.values_ = std::move(values);
  return s;
}

void Selection::bind(FacetKey key, std::string value) {
  if (facet_index(key) != values_.size()) {
    throw std::logic_error("facet '" + std::string(facet_name(key)) +
                           "' bound out of drill-down order");
  }
  values_.push_back(std::move(value));
}

std::optional<std::string_view> Selection::get(FacetKey key) const noexcept {
  if (!is_bound(key)) return std::nullopt;
  return values_[facet_index(key)];
}

std::optional<FacetKey> Selection::next_facet() const noexcept {
  if (complete()) return std::nullopt;
  return kDrillDownOrder[values_.size()];
}

bool Selection::matches(const AdviceFact& fact) const noexcept {
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (fact.facet(kDrillDownOrder[i]) != values_[i]) return false;
  }
  return true;
}

std::vector<std::string> distinct_values(const KnowledgeBase& kb, FacetKey target,
                                         const Selection& constraints) {
  if (!constraints.binds_only_before(target)) {
    throw std::invalid_argument("constraints must bind only facets before '" +
                                std::string(facet_name(target)) + "'");
  }
  // std::string compares by char_traits<char>, which is unsigned-byte order.
  std::vector<std::string> values;
  for (const AdviceFact& fact : kb.facts()) {
    if (constraints.matches(fact)) values.push_back(fact.facet(target));
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

std::vector<AdviceResult> resolve_advice(const KnowledgeBase& kb, const Selection& selection) {
  if (!selection.complete()) {
    throw std::invalid_argument("resolve_advice needs all four facets bound");
  }
  std::vector<AdviceResult> results;
  for (const AdviceFact& fact : kb.facts()) {
    if (selection.matches(fact)) results.push_back({fact.advice_text, fact.rationale});
  }
  return results;
}

}  // namespace ecohome
