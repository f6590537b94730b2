#include "bohr/pmo.hpp"

#include <algorithm>
#include <functional>

#include "bohr/errors.hpp"

namespace bohr {

PairPoset::PairPoset(ContextPoset contexts) : contexts_(std::move(contexts)) {
  const auto& cp = contexts_;
  std::vector<std::string> ids;
  std::vector<Pair> raw;
  std::vector<std::vector<std::size_t>> raw_at(cp.size());
  for (Context c = 0; c < cp.size(); ++c) {
    for (Mask u : cp.algebra(c).elements()) {
      raw_at[c].push_back(raw.size());
      raw.push_back(Pair{c, u});
      ids.push_back(name(Pair{c, u}));
    }
  }
  // Generators of the stored order: shrink u inside a context, or move the
  // same element up to a covering context.
  std::vector<std::pair<std::size_t, std::size_t>> leq;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const auto [c, u] = raw[i];
    for (std::size_t a = 0; a < cp.algebra(c).atom_count(); ++a) {
      if (u >> a & 1) leq.emplace_back(i, raw_at[c][u & ~(Mask{1} << a)]);
    }
  }
  for (const auto& [c, d] : cp.poset().cover_edges()) {
    for (Mask u : cp.algebra(c).elements()) leq.emplace_back(raw_at[c][u], raw_at[d][cp.embed(c, d, u)]);
  }
  poset_ = FinitePoset::build_indexed(ids, leq);

  pairs_.resize(raw.size());
  at_.resize(cp.size());
  for (Context c = 0; c < cp.size(); ++c) at_[c].resize(raw_at[c].size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    const Element e = poset_.at(ids[i]);
    pairs_[e] = raw[i];
    at_[raw[i].context][raw[i].element] = e;
  }
}

Element PairPoset::index(Context c, Mask u) const {
  if (c >= at_.size() || !contexts_.algebra(c).contains(u)) {
    throw ElementNotInContext("no such pair in context " + std::to_string(c));
  }
  return at_[c][u];
}

std::string PairPoset::name(const Pair& p) const {
  return contexts_.name(p.context) + ":" + contexts_.element_name(p.context, p.element);
}

bool PairPoset::refines(const Pair& fine, const Pair& coarse) const {
  return contexts_.included(coarse.context, fine.context) &&
         (fine.element & ~contexts_.embed(coarse.context, fine.context, coarse.element)) == 0;
}

PairSite pmo_site(const ContextPoset& cp) {
  PairPoset pairs(cp);
  std::vector<BasicCover> covers;
  for (Element e = 0; e < pairs.size(); ++e) {
    const auto [c, u] = pairs.pair(e);
    ElementSet family(pairs.size());
    for (std::size_t a = 0; a < cp.algebra(c).atom_count(); ++a) {
      if (u >> a & 1) family.set(pairs.index(c, Mask{1} << a));
    }
    covers.push_back(BasicCover{e, std::move(family)});
  }
  Site site(pairs.poset(), Order::refinement, std::move(covers));
  return PairSite{std::move(pairs), std::move(site)};
}

bool internal_cover_check(const ContextPoset& cp, Context c, Mask u, const std::vector<Pair>& family) {
  if (c >= cp.size() || !cp.algebra(c).contains(u)) throw ElementNotInContext("element is not in the context");
  Mask join = 0;
  for (const auto& [d, v] : family) {
    if (d >= cp.size() || !cp.algebra(d).contains(v)) {
      throw ElementNotInContext("family member is not an element of its context");
    }
    if (cp.included(d, c)) join |= cp.embed(d, c, v);
  }
  return (u & ~join) == 0;
}

std::optional<std::size_t> ConsistentIdeal::outcome_at(Context c) const {
  for (const auto& [ctx, atom] : outcome) {
    if (ctx == c) return atom;
  }
  return std::nullopt;
}

bool is_consistent_ideal(const ContextPoset& cp, const ConsistentIdeal& ideal) {
  if (!is_ideal(cp.poset(), ideal.contexts, Order::inclusion)) return false;
  if (ideal.outcome.size() != ideal.contexts.count()) return false;
  for (const auto& [c, atom] : ideal.outcome) {
    if (!ideal.contexts.test(c) || atom >= cp.algebra(c).atom_count()) return false;
  }
  for (const auto& [c, a] : ideal.outcome) {
    for (const auto& [d, b] : ideal.outcome) {
      if (c != d && cp.included(c, d) && cp.restrict_atom(d, c, b) != a) return false;
    }
  }
  return true;
}

std::vector<ConsistentIdeal> pmo_points(const ContextPoset& cp, std::optional<std::size_t> limit) {
  std::vector<ConsistentIdeal> out;
  for (const auto& ideal : ideals_of(cp.poset(), Order::inclusion)) {
    // Largest contexts first so their atoms force the rest.
    std::vector<Context> order = members(ideal.members);
    std::stable_sort(order.begin(), order.end(), [&](Context a, Context b) {
      return cp.poset().down(a).count() > cp.poset().down(b).count();
    });
    std::vector<std::size_t> atom(cp.size(), 0);
    ElementSet assigned(cp.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == order.size()) {
        ConsistentIdeal ci{ideal.members, {}};
        for (auto c : members(ideal.members)) ci.outcome.emplace_back(c, atom[c]);
        out.push_back(std::move(ci));
        if (limit && out.size() > *limit) throw LimitExceeded(*limit);
        return;
      }
      const Context c = order[i];
      for (std::size_t a = 0; a < cp.algebra(c).atom_count(); ++a) {
        bool ok = true;
        for (auto d : members(assigned)) {
          if (cp.included(c, d) && cp.restrict_atom(d, c, atom[d]) != a) ok = false;
          if (cp.included(d, c) && cp.restrict_atom(c, d, a) != atom[d]) ok = false;
          if (!ok) break;
        }
        if (!ok) continue;
        atom[c] = a;
        assigned.set(c);
        rec(i + 1);
        assigned.reset(c);
      }
    };
    rec(0);
  }
  std::sort(out.begin(), out.end());
  return out;
}

Filter filter_of(const PairPoset& pairs, const ConsistentIdeal& ideal) {
  ElementSet f(pairs.size());
  for (Element e = 0; e < pairs.size(); ++e) {
    const auto [c, u] = pairs.pair(e);
    if (auto a = ideal.outcome_at(c); a && (u >> *a & 1)) f.set(e);
  }
  return Filter{std::move(f)};
}

std::optional<ConsistentIdeal> ideal_of(const PairPoset& pairs, const Filter& point) {
  const auto& cp = pairs.contexts();
  ConsistentIdeal ci{ElementSet(cp.size()), {}};
  for (Context c = 0; c < cp.size(); ++c) {
    if (!point.members.test(pairs.index(c, cp.algebra(c).top()))) continue;
    std::optional<std::size_t> chosen;
    for (std::size_t a = 0; a < cp.algebra(c).atom_count(); ++a) {
      if (!point.members.test(pairs.index(c, Mask{1} << a))) continue;
      if (chosen) return std::nullopt;
      chosen = a;
    }
    if (!chosen) return std::nullopt;
    ci.contexts.set(c);
    ci.outcome.emplace_back(c, *chosen);
  }
  if (!is_consistent_ideal(cp, ci)) return std::nullopt;
  return ci;
}

bool verify_pmo_theorem(const ContextPoset& cp) {
  const PairSite s = pmo_site(cp);
  const auto points = points_of(s.site);
  auto ideals = pmo_points(cp);

  std::vector<ConsistentIdeal> image;
  for (const auto& tau : points) {
    auto ci = ideal_of(s.pairs, tau);
    if (!ci) return false;
    if (!(filter_of(s.pairs, *ci) == tau)) return false;
    image.push_back(std::move(*ci));
  }
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
  if (image != ideals) return false;

  // Converse direction: every consistent ideal yields a point.
  const CoveringOracle oracle = saturate(s.site);
  for (const auto& ci : ideals) {
    const Filter f = filter_of(s.pairs, ci);
    if (!is_point(s.site, oracle, f.members)) return false;
    if (ideal_of(s.pairs, f) != ci) return false;
  }
  return true;
}

}  // namespace bohr
