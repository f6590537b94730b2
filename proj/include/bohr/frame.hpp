#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "bohr/order.hpp"

namespace bohr {

/// A finite frame given concretely as a family of subsets of a ground set,
/// ordered by inclusion.
///
/// The family must contain the ground-set top and be closed under binary
/// intersection; meets are intersections and joins are the least member
/// containing the union. Opens are kept sorted by size, then by content,
/// so index 0 is the bottom and the last index is the top.
class FiniteFrame {
 public:
  using Index = std::size_t;

  FiniteFrame(std::size_t ground_size, std::vector<ElementSet> opens);

  std::size_t size() const noexcept { return opens_.size(); }
  std::size_t ground_size() const noexcept { return ground_size_; }
  const ElementSet& open(Index i) const { return opens_.at(i); }
  const std::vector<ElementSet>& opens() const noexcept { return opens_; }
  std::optional<Index> find(const ElementSet& s) const;

  Index bottom() const noexcept { return 0; }
  Index top() const noexcept { return opens_.size() - 1; }

  bool leq(Index a, Index b) const { return opens_[a].is_subset_of(opens_[b]); }
  Index meet(Index a, Index b) const;
  Index join(Index a, Index b) const;
  /// Largest w with a ∧ w <= b.
  Index implies(Index a, Index b) const;
  Index negate(Index a) const { return implies(a, bottom()); }

  /// Family really is closed under intersection and has a top.
  bool is_intersection_closed() const;

  friend bool operator==(const FiniteFrame& a, const FiniteFrame& b) {
    return a.ground_size_ == b.ground_size_ && a.opens_ == b.opens_;
  }

 private:
  Index least_superset(const ElementSet& s) const;

  std::size_t ground_size_;
  std::vector<ElementSet> opens_;
  std::map<ElementSet, Index> index_;
};

FiniteFrame::Index heyting(const FiniteFrame& f, FiniteFrame::Index u, FiniteFrame::Index v);

/// Sub-frame of ¬¬-stable opens; its joins are ¬¬(u ∨ v).
FiniteFrame booleanize(const FiniteFrame& f);

bool is_boolean(const FiniteFrame& f);
bool is_distributive(const FiniteFrame& f);
/// w <= (u => v) iff u ∧ w <= v for all triples.
bool satisfies_heyting_adjunction(const FiniteFrame& f);

}  // namespace bohr
