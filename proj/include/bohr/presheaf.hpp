#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "bohr/order.hpp"

namespace bohr {

/// Finite presheaf on a poset read in the given (site) order.
///
/// For every q <= p there is a restriction map values(p) -> values(q);
/// identities and composites are checked at construction.
class Presheaf {
 public:
  /// `restrict(from, to, v)` gives the restriction of value index `v` at
  /// `from` to `to`, for every to <= from.
  using RestrictionFn = std::function<std::size_t(Element from, Element to, std::size_t value)>;

  Presheaf(FinitePoset poset, Order order, std::vector<std::vector<std::string>> values,
           const RestrictionFn& restrict);

  const FinitePoset& poset() const noexcept { return poset_; }
  Order order() const noexcept { return order_; }
  std::size_t size() const noexcept { return poset_.size(); }

  std::size_t value_count(Element p) const { return values_.at(p).size(); }
  const std::vector<std::string>& values(Element p) const { return values_.at(p); }
  const std::string& value_name(Element p, std::size_t v) const { return values_.at(p).at(v); }

  std::size_t restrict(Element from, Element to, std::size_t value) const;

 private:
  FinitePoset poset_;
  Order order_;
  std::vector<std::vector<std::string>> values_;
  std::vector<std::vector<std::vector<std::size_t>>> maps_;  // maps_[from][to][value]
};

/// Per-element subsets of a presheaf's values.
using Subpresheaf = std::vector<ElementSet>;

bool is_subpresheaf(const Presheaf& w, const Subpresheaf& v);

/// One value index per element, compatible with every restriction.
using Section = std::vector<std::size_t>;

struct SectionSearch {
  std::vector<Section> sections;  // lexicographically sorted
  std::size_t nodes = 0;          // search-tree nodes visited
};

SectionSearch search_global_sections(const Presheaf& p, std::optional<std::size_t> limit = std::nullopt);

std::vector<Section> global_sections(const Presheaf& p, std::optional<std::size_t> limit = std::nullopt);

}  // namespace bohr
