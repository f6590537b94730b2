#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bohr/contexts.hpp"
#include "bohr/coverage.hpp"
#include "bohr/pmo.hpp"
#include "bohr/presheaf.hpp"

namespace bohr {

/// Dense topology: p ◁ D when D is dense below p.
///
/// In a finite poset D is dense below p exactly when it contains every
/// minimal element below p, so the generators are p ◁ min(↓p).
Site dense_site(const FinitePoset& p, Order order);

/// ¬¬V(p) = {x ∈ W(p) | for all q <= p there is r <= q with x|r ∈ V(r)}.
/// Throws NotSubpresheaf if `v` is not a subpresheaf of `w`.
Subpresheaf nn_sheafify(const Presheaf& w, const Subpresheaf& v);

/// C ↦ the intersection of B_M over the maximal contexts M containing C,
/// as a presheaf in refinement order whose values are element names.
/// Throws RequiresBlockRepresentation for posets without a shared universe.
Presheaf nn_bohrification(const ContextPoset& cp);
Presheaf nn_bohrification(const BlockStructure& b);

/// Point of the spectrum of a maximal context.
struct MeasurementOutcome {
  Context context;
  std::size_t atom;
  friend auto operator<=>(const MeasurementOutcome&, const MeasurementOutcome&) = default;
};

/// Measurement outcome site: the pair poset with the atomic decompositions
/// plus the lifted dense covers (C,u) ◁ {(M, u) : M maximal, C ⊆ M}.
PairSite mo_site(const ContextPoset& cp);

/// The ¬¬ covering condition evaluated literally on the sieve generated by
/// `family` below `root` = (C,u): for every D ⊇ C there is E ⊇ D with the
/// image of u below the join of the sieve's elements at E.
bool mo_condition(const PairPoset& pairs, Element root, const ElementSet& family);

/// Same for the partial outcome site: u below the join of the sieve's
/// elements at C itself.
bool pmo_condition(const PairPoset& pairs, Element root, const ElementSet& family);

std::vector<MeasurementOutcome> mo_points(const ContextPoset& cp, std::optional<std::size_t> limit = std::nullopt);

/// Dense topology on the nonzero pairs, extended by (C,0) ◁ ∅.
PairSite dense_pair_site(const ContextPoset& cp);

/// mo_site and dense_pair_site have the same points on the shared pair
/// poset, and the same opens whenever both frames have at most
/// `frame_limit` opens.
bool iterated_forcing_check(const ContextPoset& cp, std::size_t frame_limit = 64);

}  // namespace bohr
