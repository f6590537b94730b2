#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace bohr {

using Element = std::size_t;
using ElementSet = boost::dynamic_bitset<>;

/// Which way a stored poset is read.
///
/// Posets are stored in inclusion order (for contexts: C <= D iff C is a
/// subalgebra of D). The refinement order is its opposite: D refines C iff
/// C is included in D. Sites over contexts use the refinement order, so the
/// bigger contexts sit lower.
enum class Order { inclusion, refinement };

std::vector<Element> members(const ElementSet& s);

/// Finite partial order on named elements, immutable after construction.
///
/// Elements are indexed in lexicographic order of their ids, so every
/// enumeration by index is canonically sorted.
class FinitePoset {
 public:
  /// Reflexive-transitive closure of `leq_pairs` over `ids`.
  ///
  /// Throws UnknownId for pairs naming absent ids (or duplicated ids) and
  /// AntisymmetryViolation when the closure identifies two distinct ids.
  static FinitePoset build(std::vector<std::string> ids,
                           const std::vector<std::pair<std::string, std::string>>& leq_pairs);

  /// Same as build() but with pairs given by position in `ids`.
  static FinitePoset build_indexed(std::vector<std::string> ids,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs);

  std::size_t size() const noexcept { return ids_.size(); }
  const std::string& id(Element x) const { return ids_.at(x); }
  const std::vector<std::string>& ids() const noexcept { return ids_; }
  std::optional<Element> find(std::string_view id) const;
  Element at(std::string_view id) const;

  bool leq(Element a, Element b, Order order = Order::inclusion) const;
  bool less(Element a, Element b, Order order = Order::inclusion) const {
    return a != b && leq(a, b, order);
  }

  /// {y : y <= x} in the given order.
  const ElementSet& down(Element x, Order order = Order::inclusion) const;
  /// {y : x <= y} in the given order.
  const ElementSet& up(Element x, Order order = Order::inclusion) const;

  ElementSet down_closure(const ElementSet& s, Order order = Order::inclusion) const;
  ElementSet up_closure(const ElementSet& s, Order order = Order::inclusion) const;

  ElementSet empty_set() const { return ElementSet(size()); }
  ElementSet full_set() const { return ElementSet(size()).set(); }

  bool is_down_closed(const ElementSet& s, Order order = Order::inclusion) const;

  /// Every pair of elements has a greatest lower bound.
  bool has_binary_meets(Order order = Order::inclusion) const;

  /// Hasse edges (a, b) with a covered by b in the stored order, sorted.
  std::vector<std::pair<Element, Element>> cover_edges() const;

 private:
  FinitePoset() = default;

  std::vector<std::string> ids_;
  std::vector<ElementSet> down_;  // stored (inclusion) order
  std::vector<ElementSet> up_;
};

/// Inhabited downset that is directed upward: an ideal.
struct Downset {
  ElementSet members;
  friend bool operator==(const Downset&, const Downset&) = default;
};

/// Inhabited upset that is directed downward.
struct Filter {
  ElementSet members;
  friend bool operator==(const Filter&, const Filter&) = default;
};

bool is_directed_up(const FinitePoset& p, const ElementSet& s, Order order);
bool is_directed_down(const FinitePoset& p, const ElementSet& s, Order order);
bool is_ideal(const FinitePoset& p, const ElementSet& s, Order order);
bool is_filter(const FinitePoset& p, const ElementSet& s, Order order);

/// All ideals of a finite poset. Every ideal of a finite poset is principal,
/// so these are the sets down(x), listed in element order.
std::vector<Downset> ideals_of(const FinitePoset& p, Order order = Order::inclusion);

/// Maximum element of an ideal; NotDirected if `d` has none.
Element principal_witness(const FinitePoset& p, const Downset& d, Order order = Order::inclusion);

ElementSet maximal_elements(const FinitePoset& p, Order order = Order::inclusion);
ElementSet minimal_elements(const FinitePoset& p, Order order = Order::inclusion);

/// Every q <= x bounds some d in `dense` from above.
bool is_dense_below(const FinitePoset& p, Element x, const ElementSet& dense,
                    Order order = Order::inclusion);

}  // namespace bohr
