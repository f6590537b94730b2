#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bohr/contexts.hpp"
#include "bohr/coverage.hpp"

namespace bohr {

using Context = ContextPoset::Context;

/// Forcing condition: a context together with an element of its algebra.
struct Pair {
  Context context;
  Mask element;
  friend bool operator==(const Pair&, const Pair&) = default;
};

/// All pairs (C, u) with u in B_C.
///
/// Stored coarse to fine: (C,u) is below (D,v) when C ⊆ D and v is below
/// the image of u. Sites over pairs read this in Order::refinement, which
/// gives the information order (D,v) <= (C,u).
class PairPoset {
 public:
  explicit PairPoset(ContextPoset contexts);

  const ContextPoset& contexts() const noexcept { return contexts_; }
  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const Pair& pair(Element e) const { return pairs_.at(e); }
  Element index(Context c, Mask u) const;
  Element index(const Pair& p) const { return index(p.context, p.element); }
  std::string name(const Pair& p) const;

  /// (D,v) <= (C,u) in the information order.
  bool refines(const Pair& fine, const Pair& coarse) const;

 private:
  ContextPoset contexts_;
  FinitePoset poset_ = FinitePoset::build({}, {});
  std::vector<Pair> pairs_;               // by poset index
  std::vector<std::vector<Element>> at_;  // at_[context][mask]
};

/// A site whose objects are pairs.
struct PairSite {
  PairPoset pairs;
  Site site;

  const ContextPoset& contexts() const noexcept { return pairs.contexts(); }
};

/// Partial measurement outcome site: covers generated by the atomic
/// decompositions (C,u) ◁ {(C,a) : a atom below u} inside each context,
/// including (C,0) ◁ ∅.
PairSite pmo_site(const ContextPoset& cp);

/// Forcing of u ◁ V at stage C for the presheaf generated by `family`:
/// true iff u lies below the join of the images at C of the family members
/// whose context is included in C. For families over refinements of C
/// this keeps only the members sitting at C itself.
bool internal_cover_check(const ContextPoset& cp, Context c, Mask u, const std::vector<Pair>& family);

/// Ideal of contexts with one compatible atom per member.
struct ConsistentIdeal {
  ElementSet contexts;
  std::vector<std::pair<Context, std::size_t>> outcome;  // sorted by context

  std::optional<std::size_t> outcome_at(Context c) const;
  friend bool operator==(const ConsistentIdeal&, const ConsistentIdeal&) = default;
  friend bool operator<(const ConsistentIdeal& a, const ConsistentIdeal& b) { return a.outcome < b.outcome; }
};

bool is_consistent_ideal(const ContextPoset& cp, const ConsistentIdeal& ideal);

/// Every consistent ideal: each ideal of contexts with each compatible
/// choice of atoms. Sorted canonically.
std::vector<ConsistentIdeal> pmo_points(const ContextPoset& cp, std::optional<std::size_t> limit = std::nullopt);

/// {(C,u) : C in the ideal, outcome(C) below u}.
Filter filter_of(const PairPoset& pairs, const ConsistentIdeal& ideal);
/// Contexts C with (C,1) in the filter, each with its unique atom in the
/// filter; nullopt if that data is not a consistent ideal.
std::optional<ConsistentIdeal> ideal_of(const PairPoset& pairs, const Filter& point);

/// Points of pmo_site(cp) and consistent ideals correspond one to one
/// through ideal_of and filter_of, which are mutually inverse.
bool verify_pmo_theorem(const ContextPoset& cp);

}  // namespace bohr
