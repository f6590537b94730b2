#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bohr/frame.hpp"
#include "bohr/order.hpp"

namespace bohr {

/// A basic covering family `root ◁ family`; every member lies below root.
struct BasicCover {
  Element root;
  ElementSet family;
};

/// A down-closed subset of the elements below `root`.
struct Sieve {
  Element root;
  ElementSet members;
};

/// A finite poset together with basic covers, read in a fixed direction.
///
/// The generated Grothendieck topology is handled through its closed
/// downsets: a downset U is saturated when, for every basic cover r ◁ G and
/// every y <= r, (↓G ∩ ↓y) ⊆ U implies y ∈ U. A sieve S covers x exactly
/// when x lies in the least saturated downset containing S.
class Site {
 public:
  Site(FinitePoset poset, Order order, std::vector<BasicCover> covers);

  const FinitePoset& poset() const noexcept { return poset_; }
  Order order() const noexcept { return order_; }
  std::size_t size() const noexcept { return poset_.size(); }
  const std::vector<BasicCover>& basic_covers() const noexcept { return covers_; }

  bool leq(Element a, Element b) const { return poset_.leq(a, b, order_); }
  const ElementSet& down(Element x) const { return poset_.down(x, order_); }
  const ElementSet& up(Element x) const { return poset_.up(x, order_); }
  ElementSet down_closure(const ElementSet& s) const { return poset_.down_closure(s, order_); }

  /// Sieve on `root` generated by `family`.
  Sieve sieve(Element root, const ElementSet& family) const;

  /// Least saturated downset containing the down-closure of `s`.
  ElementSet closure(const ElementSet& s) const;
  bool is_saturated(const ElementSet& downset) const;

 private:
  FinitePoset poset_;
  Order order_;
  std::vector<BasicCover> covers_;
  std::vector<ElementSet> generated_;  // down-closure of each family
};

/// Decides `root ◁ family` for the topology generated by a site.
///
/// Posets of at most `memo_limit` elements have their answers memoized per
/// sieve. The oracle is not safe to share between threads.
class CoveringOracle {
 public:
  static constexpr std::size_t memo_limit = 12;

  explicit CoveringOracle(const Site& site) : site_(&site) {}

  bool covers(Element root, const ElementSet& family) const;
  bool covers(const Sieve& s) const { return covers(s.root, s.members); }

 private:
  const Site* site_;
  mutable std::map<std::pair<Element, ElementSet>, bool> memo_;
};

CoveringOracle saturate(const Site& site);

/// Completely prime filter check straight from the definition: `s` is an
/// inhabited, up-closed, down-directed set meeting every cover of each of
/// its members.
bool is_point(const Site& site, const CoveringOracle& oracle, const ElementSet& s);

/// Points of the site. Each candidate is a principal filter ↑x; it is a
/// point when its complement is saturated.
std::vector<Filter> points_of(const Site& site);

/// Frame of saturated downsets, enumerated in lectic order. Throws
/// LimitExceeded once more than `limit` opens are found.
FiniteFrame frame_of(const Site& site, std::optional<std::size_t> limit = std::nullopt);

}  // namespace bohr
