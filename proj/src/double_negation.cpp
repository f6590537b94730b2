#include "bohr/double_negation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bohr/errors.hpp"

namespace bohr {

Site dense_site(const FinitePoset& p, Order order) {
  const ElementSet minimal = minimal_elements(p, order);
  std::vector<BasicCover> covers;
  for (Element x = 0; x < p.size(); ++x) covers.push_back(BasicCover{x, p.down(x, order) & minimal});
  return Site(p, order, std::move(covers));
}

Subpresheaf nn_sheafify(const Presheaf& w, const Subpresheaf& v) {
  if (!is_subpresheaf(w, v)) throw NotSubpresheaf("value family is not a subpresheaf");
  const auto& poset = w.poset();
  Subpresheaf out(w.size());
  for (Element p = 0; p < w.size(); ++p) {
    out[p] = ElementSet(w.value_count(p));
    for (std::size_t x = 0; x < w.value_count(p); ++x) {
      bool every = true;
      for (auto q : members(poset.down(p, w.order()))) {
        bool some = false;
        for (auto r : members(poset.down(q, w.order()))) {
          if (v[r].test(w.restrict(p, r, x))) {
            some = true;
            break;
          }
        }
        if (!some) {
          every = false;
          break;
        }
      }
      if (every) out[p].set(x);
    }
  }
  return out;
}

Presheaf nn_bohrification(const ContextPoset& cp) {
  if (!cp.has_universe()) {
    throw RequiresBlockRepresentation("intersections of contexts need elements named by universe atoms");
  }
  const ElementSet maximal = cp.maximal();
  std::vector<std::set<std::string>> element_names(cp.size());
  for (Context c = 0; c < cp.size(); ++c) {
    for (Mask m : cp.algebra(c).elements()) element_names[c].insert(cp.element_name(c, m));
  }
  std::vector<std::vector<std::string>> values(cp.size());
  for (Context c = 0; c < cp.size(); ++c) {
    std::optional<std::set<std::string>> meet;
    for (auto m : members(maximal & cp.poset().up(c))) {
      if (!meet) {
        meet = element_names[m];
        continue;
      }
      std::set<std::string> next;
      std::set_intersection(meet->begin(), meet->end(), element_names[m].begin(), element_names[m].end(),
                            std::inserter(next, next.end()));
      meet = std::move(next);
    }
    values[c].assign(meet->begin(), meet->end());
  }
  auto restrict = [values](Element from, Element to, std::size_t v) {
    const auto& target = values[to];
    auto it = std::lower_bound(target.begin(), target.end(), values[from][v]);
    if (it == target.end() || *it != values[from][v]) throw InvalidPresheaf("value lost along an inclusion");
    return static_cast<std::size_t>(it - target.begin());
  };
  return Presheaf(cp.poset(), Order::refinement, std::move(values), restrict);
}

Presheaf nn_bohrification(const BlockStructure& b) { return nn_bohrification(ContextPoset::from_blocks(b)); }

PairSite mo_site(const ContextPoset& cp) {
  PairPoset pairs(cp);
  const ElementSet maximal = cp.maximal();
  std::vector<BasicCover> covers;
  for (Element e = 0; e < pairs.size(); ++e) {
    const auto [c, u] = pairs.pair(e);
    ElementSet atoms(pairs.size());
    for (std::size_t a = 0; a < cp.algebra(c).atom_count(); ++a) {
      if (u >> a & 1) atoms.set(pairs.index(c, Mask{1} << a));
    }
    covers.push_back(BasicCover{e, std::move(atoms)});
    if (u == 0) continue;
    ElementSet lifted(pairs.size());
    for (auto m : members(maximal & cp.poset().up(c))) lifted.set(pairs.index(m, cp.embed(c, m, u)));
    covers.push_back(BasicCover{e, std::move(lifted)});
  }
  Site site(pairs.poset(), Order::refinement, std::move(covers));
  return PairSite{std::move(pairs), std::move(site)};
}

namespace {

/// Join, per context, of the sieve's elements at that context.
std::vector<Mask> joins_by_context(const PairPoset& pairs, Element root, const ElementSet& family) {
  const auto& poset = pairs.poset();
  const ElementSet sieve = poset.down_closure(family, Order::refinement) & poset.down(root, Order::refinement);
  std::vector<Mask> joins(pairs.contexts().size(), 0);
  for (auto e : members(sieve)) joins[pairs.pair(e).context] |= pairs.pair(e).element;
  return joins;
}

}  // namespace

bool mo_condition(const PairPoset& pairs, Element root, const ElementSet& family) {
  const auto& cp = pairs.contexts();
  const auto [c, u] = pairs.pair(root);
  const auto joins = joins_by_context(pairs, root, family);
  for (auto d : members(cp.poset().up(c))) {
    bool found = false;
    for (auto e : members(cp.poset().up(d))) {
      if ((cp.embed(c, e, u) & ~joins[e]) == 0) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool pmo_condition(const PairPoset& pairs, Element root, const ElementSet& family) {
  const auto [c, u] = pairs.pair(root);
  const auto joins = joins_by_context(pairs, root, family);
  return internal_cover_check(pairs.contexts(), c, u, {Pair{c, joins[c]}});
}

std::vector<MeasurementOutcome> mo_points(const ContextPoset& cp, std::optional<std::size_t> limit) {
  const PairSite s = mo_site(cp);
  const ElementSet maximal = cp.maximal();
  std::vector<MeasurementOutcome> out;
  for (const auto& tau : points_of(s.site)) {
    auto ideal = ideal_of(s.pairs, tau);
    if (!ideal) throw Error("point of the outcome site is not a consistent ideal");
    const Context top = principal_witness(cp.poset(), Downset{ideal->contexts});
    if (!maximal.test(top)) throw Error("point of the outcome site misses every maximal context");
    out.push_back(MeasurementOutcome{top, *ideal->outcome_at(top)});
    if (limit && out.size() > *limit) throw LimitExceeded(*limit);
  }
  std::sort(out.begin(), out.end());
  return out;
}

PairSite dense_pair_site(const ContextPoset& cp) {
  PairPoset pairs(cp);
  const auto& poset = pairs.poset();
  ElementSet nonzero(pairs.size());
  for (Element e = 0; e < pairs.size(); ++e) {
    if (pairs.pair(e).element != 0) nonzero.set(e);
  }
  // Minimal nonzero pairs in the information order.
  ElementSet minimal(pairs.size());
  for (auto e : members(nonzero)) {
    if ((poset.down(e, Order::refinement) & nonzero).count() == 1) minimal.set(e);
  }
  std::vector<BasicCover> covers;
  for (Element e = 0; e < pairs.size(); ++e) {
    ElementSet family = nonzero.test(e) ? ElementSet(poset.down(e, Order::refinement) & minimal) : ElementSet(pairs.size());
    covers.push_back(BasicCover{e, std::move(family)});
  }
  Site site(poset, Order::refinement, std::move(covers));
  return PairSite{std::move(pairs), std::move(site)};
}

bool iterated_forcing_check(const ContextPoset& cp, std::size_t frame_limit) {
  const PairSite mo = mo_site(cp);
  const PairSite dense = dense_pair_site(cp);
  if (mo.pairs.poset().ids() != dense.pairs.poset().ids()) return false;

  auto as_sets = [](const std::vector<Filter>& fs) {
    std::vector<ElementSet> out;
    for (const auto& f : fs) out.push_back(f.members);
    std::sort(out.begin(), out.end());
    return out;
  };
  if (as_sets(points_of(mo.site)) != as_sets(points_of(dense.site))) return false;

  auto bounded_frame = [&](const Site& s) -> std::optional<FiniteFrame> {
    try {
      return frame_of(s, frame_limit);
    } catch (const LimitExceeded&) {
      return std::nullopt;
    }
  };
  // Frames too large to compare must both be too large.
  return bounded_frame(mo.site) == bounded_frame(dense.site);
}

}  // namespace bohr
