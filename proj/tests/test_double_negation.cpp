#include "doctest.h"
#include "support.hpp"

#include "bohr/double_negation.hpp"
#include "bohr/pmo.hpp"

using namespace bohr;
using namespace testing;

namespace {

Presheaf constant_x(const FinitePoset& p, Order o) {
  return Presheaf(p, o, std::vector<std::vector<std::string>>(p.size(), {"x"}),
                  [](Element, Element, std::size_t v) { return v; });
}

Subpresheaf only_at(const FinitePoset& p, std::initializer_list<const char*> ids) {
  Subpresheaf v(p.size(), ElementSet(1));
  for (auto id : ids) v[p.at(id)].set(0);
  return v;
}

bool within(const Subpresheaf& a, const Subpresheaf& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_subset_of(b[i])) return false;
  }
  return true;
}

ElementSet pairs_of(const PairPoset& pairs, std::initializer_list<std::pair<const char*, Mask>> items) {
  ElementSet s = pairs.poset().empty_set();
  for (const auto& [ctx, m] : items) s.set(pairs.index(pairs.contexts().at(ctx), m));
  return s;
}

}  // namespace

TEST_CASE("sheafification examples") {
  auto two = FinitePoset::build({"bot", "T"}, {{"bot", "T"}});
  Presheaf w = constant_x(two, Order::refinement);
  auto nn = nn_sheafify(w, only_at(two, {"T"}));
  CHECK(nn[two.at("bot")].test(0));
  CHECK(nn[two.at("T")].test(0));
  Subpresheaf all = only_at(two, {"bot", "T"});
  CHECK(nn_sheafify(w, all) == all);

  auto spin = FinitePoset::build({"bot", "X", "Y", "Z"}, {{"bot", "X"}, {"bot", "Y"}, {"bot", "Z"}});
  Presheaf ws = constant_x(spin, Order::refinement);
  auto ns = nn_sheafify(ws, only_at(spin, {"X"}));
  CHECK_FALSE(ns[spin.at("bot")].test(0));
  CHECK(ns[spin.at("X")].test(0));
  CHECK_FALSE(ns[spin.at("Y")].test(0));

  // Present at bot but not at its refinement X: not closed under restriction.
  CHECK_THROWS_AS(nn_sheafify(ws, only_at(spin, {"bot"})), NotSubpresheaf);
}

TEST_CASE("sheafification laws on random subpresheaves") {
  std::mt19937 rng(4401);
  std::size_t cases = 0;
  for (int trial = 0; trial < 1200; ++trial) {
    const std::size_t n = 1 + trial % 8;
    auto p = random_poset(rng, n, 0.35);
    Presheaf w = random_presheaf(rng, p, 5, 2);
    Subpresheaf v = random_subpresheaf(rng, w, 0.25);
    Subpresheaf bigger = v;
    for (std::size_t x = 0; x < n; ++x) bigger[x] |= random_subset(rng, ElementSet(w.value_count(x)).set(), 0.2);
    bigger = close_subpresheaf(w, bigger);

    auto nv = nn_sheafify(w, v);
    CHECK(is_subpresheaf(w, nv));
    CHECK(within(v, nv));
    CHECK(within(nv, nn_sheafify(w, bigger)));
    CHECK(nn_sheafify(w, nv) == nv);

    // Same answer from the dense topology: x survives iff its support sieve is dense.
    Site dense = dense_site(p, w.order());
    CoveringOracle oracle = saturate(dense);
    for (Element x = 0; x < n; ++x) {
      for (std::size_t val = 0; val < w.value_count(x); ++val) {
        ElementSet support = p.empty_set();
        for (auto y : members(p.down(x, w.order()))) {
          if (v[y].test(w.restrict(x, y, val))) support.set(y);
        }
        CHECK(nv[x].test(val) == oracle.covers(x, support));
      }
    }
    ++cases;
  }
  CHECK(cases >= 1000);
}

TEST_CASE("double-negation bohrification") {
  auto single = nn_bohrification(single_block(3));
  for (Element c = 0; c < single.size(); ++c) CHECK(single.value_count(c) == 8);
  auto fix3 = nn_bohrification(fixture("fix3pt.blk"));
  for (Element c = 0; c < fix3.size(); ++c) CHECK(fix3.value_count(c) == 8);

  auto cp = ContextPoset::from_blocks(fixture("fixspin.blk"));
  auto spin = nn_bohrification(cp);
  CHECK(spin.values(cp.bottom()) == std::vector<std::string>{"0", "1"});
  for (auto m : members(cp.maximal())) CHECK(spin.value_count(m) == 4);
  CHECK(spin.order() == Order::refinement);
}

TEST_CASE("mo site covers") {
  {
    auto cp = ContextPoset::from_blocks(fixture("fix2pt.blk"));
    const PairSite s = mo_site(cp);
    const Element root = s.pairs.index(cp.bottom(), 1);
    ElementSet fam = s.pairs.poset().down_closure(pairs_of(s.pairs, {{"e1|e2", 3}}), Order::refinement);
    CHECK(mo_condition(s.pairs, root, fam));
    CHECK(saturate(s.site).covers(root, fam));
  }
  {
    auto cp = ContextPoset::from_blocks(fixture("fixspin.blk"));
    const PairSite s = mo_site(cp);
    CoveringOracle oracle = saturate(s.site);
    const auto& p = s.pairs.poset();
    const Element root = s.pairs.index(cp.bottom(), 1);
    auto all = p.down_closure(pairs_of(s.pairs, {{"x+|x-", 3}, {"y+|y-", 3}, {"z+|z-", 3}}), Order::refinement);
    auto one = p.down_closure(pairs_of(s.pairs, {{"x+|x-", 3}}), Order::refinement);
    CHECK(mo_condition(s.pairs, root, all));
    CHECK(oracle.covers(root, all));
    CHECK_FALSE(mo_condition(s.pairs, root, one));
    CHECK_FALSE(oracle.covers(root, one));
    const Element xtop = s.pairs.index(cp.at("x+|x-"), 3);
    auto atoms = p.down_closure(pairs_of(s.pairs, {{"x+|x-", 1}, {"x+|x-", 2}}), Order::refinement);
    CHECK(oracle.covers(xtop, atoms));
  }
}

TEST_CASE("mo covering equals the literal refinement condition") {
  for (const char* name : {"fix2pt.blk", "fix3pt.blk", "fixspin.blk", "c1.blk"}) {
    auto cp = ContextPoset::from_blocks(fixture(name));
    const PairSite mo = mo_site(cp);
    const PairSite pmo = pmo_site(cp);
    CoveringOracle mo_oracle = saturate(mo.site), pmo_oracle = saturate(pmo.site);
    const auto& p = mo.pairs.poset();
    for (Element root = 0; root < p.size(); ++root) {
      downsets_within(p, Order::refinement, p.down(root, Order::refinement), 1 << 16, [&](const ElementSet& sv) {
        const bool covers = mo_oracle.covers(root, sv);
        CHECK(covers == mo_condition(mo.pairs, root, sv));
        if (pmo_oracle.covers(root, sv)) CHECK(covers);
      });
    }
  }
}

TEST_CASE("measurement outcomes") {
  CHECK(mo_points(ContextPoset::from_blocks(fixture("fix2pt.blk"))).size() == 2);
  CHECK(mo_points(ContextPoset::from_blocks(fixture("fix3pt.blk"))).size() == 3);
  auto spin = ContextPoset::from_blocks(fixture("fixspin.blk"));
  auto outcomes = mo_points(spin);
  CHECK(outcomes.size() == 6);
  for (const auto& m : outcomes) CHECK(spin.maximal().test(m.context));
  CHECK(std::is_sorted(outcomes.begin(), outcomes.end()));
  CHECK_THROWS_AS(mo_points(spin, 5), LimitExceeded);
}

TEST_CASE("commutative case is spatial") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto cp = ContextPoset::from_blocks(single_block(n));
    const PairSite s = mo_site(cp);
    CHECK(mo_points(cp).size() == n);
    CHECK(frame_of(s.site).size() == (std::size_t{1} << n));
    CHECK(iterated_forcing_check(cp));
  }
}

TEST_CASE("iterated forcing on fixtures") {
  for (const char* name : {"fix2pt.blk", "fix3pt.blk", "fixspin.blk", "c1.blk", "c3.blk"}) {
    CHECK(iterated_forcing_check(ContextPoset::from_blocks(fixture(name))));
  }
  auto cp = ContextPoset::from_blocks(fixture("fixspin.blk"));
  CHECK(frame_of(mo_site(cp).site) == frame_of(dense_pair_site(cp).site));
  CHECK(frame_of(mo_site(cp).site).size() == 64);
}
