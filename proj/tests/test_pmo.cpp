#include "doctest.h"
#include "support.hpp"

#include "bohr/double_negation.hpp"
#include "bohr/pmo.hpp"

using namespace bohr;
using namespace testing;

namespace {

Mask atom_mask(const ContextPoset& cp, Context c, const std::string& name) {
  const auto& b = cp.algebra(c);
  for (std::size_t a = 0; a < b.atom_count(); ++a) {
    if (b.atom_name(a) == name) return Mask{1} << a;
  }
  FAIL("no atom " << name);
  return 0;
}

std::size_t atom_total(const ContextPoset& cp) {
  std::size_t n = 0;
  for (Context c = 0; c < cp.size(); ++c) n += cp.algebra(c).atom_count();
  return n;
}

}  // namespace

TEST_CASE("pair poset of two outcomes") {
  auto cp = ContextPoset::from_blocks(fixture("fix2pt.blk"));
  PairPoset pairs(cp);
  CHECK(pairs.size() == 6);
  const Context bot = cp.bottom(), top = cp.at("e1|e2");
  const Mask a1 = atom_mask(cp, top, "e1");
  CHECK(pairs.refines({top, a1}, {bot, 1}));
  CHECK_FALSE(pairs.refines({top, a1}, {bot, 0}));
  CHECK(pairs.name({top, a1}) == "e1|e2:e1");
  CHECK(pairs.poset().leq(pairs.index(top, a1), pairs.index(bot, 1), Order::refinement));

  // No member of the family sits at the bottom context.
  const Mask a2 = atom_mask(cp, top, "e2");
  CHECK_FALSE(internal_cover_check(cp, bot, 1, {{top, a1}, {top, a2}}));
  CHECK(internal_cover_check(cp, top, 3, {{top, a1}, {top, a2}}));
  CHECK_FALSE(internal_cover_check(cp, bot, 1, {{top, a1}}));
  CHECK(internal_cover_check(cp, top, 0, {}));
  CHECK(internal_cover_check(cp, bot, 0, {}));
  CHECK_THROWS_AS(internal_cover_check(cp, bot, 2, {}), ElementNotInContext);

  const PairSite s = pmo_site(cp);
  CoveringOracle oracle = saturate(s.site);
  ElementSet fam = s.pairs.poset().empty_set();
  fam.set(s.pairs.index(top, a1)).set(s.pairs.index(top, a2));
  CHECK_FALSE(oracle.covers(s.pairs.index(bot, 1), fam));
  CHECK(oracle.covers(s.pairs.index(top, 3), fam));
}

TEST_CASE("pmo covering equals the stage condition on fixtures") {
  for (const char* name : {"fix2pt.blk", "fix3pt.blk", "fixspin.blk", "c1.blk", "c3.blk"}) {
    auto cp = ContextPoset::from_blocks(fixture(name));
    const PairSite s = pmo_site(cp);
    CoveringOracle oracle = saturate(s.site);
    const auto& p = s.pairs.poset();
    for (Element root = 0; root < p.size(); ++root) {
      downsets_within(p, Order::refinement, p.down(root, Order::refinement), 1 << 16, [&](const ElementSet& sv) {
        const bool covers = oracle.covers(root, sv);
        CHECK(covers == pmo_condition(s.pairs, root, sv));
        std::vector<Pair> fam;
        for (auto x : members(sv)) fam.push_back(s.pairs.pair(x));
        const Pair& r = s.pairs.pair(root);
        CHECK(covers == internal_cover_check(cp, r.context, r.element, fam));
        if (!covers) return;
        // Stability under refinement of the root.
        for (auto d : members(p.down(root, Order::refinement))) {
          CHECK(oracle.covers(d, sv & p.down(d, Order::refinement)));
        }
      });
    }
  }
}

TEST_CASE("pmo point counts") {
  CHECK(pmo_points(ContextPoset::from_blocks(fixture("fix2pt.blk"))).size() == 3);
  CHECK(pmo_points(ContextPoset::from_blocks(fixture("fix3pt.blk"))).size() == 10);
  CHECK(pmo_points(ContextPoset::from_blocks(fixture("fixspin.blk"))).size() == 7);
  CHECK_THROWS_AS(pmo_points(ContextPoset::from_blocks(fixture("fix3pt.blk")), 9), LimitExceeded);
}

TEST_CASE("pmo theorem on fixtures and small corpus") {
  for (const char* name : {"fix2pt.blk", "fix3pt.blk", "fixspin.blk", "c1.blk", "c4.blk"}) {
    auto cp = ContextPoset::from_blocks(fixture(name));
    CHECK(verify_pmo_theorem(cp));
    auto pts = pmo_points(cp);
    CHECK(pts.size() == atom_total(cp));
    for (const auto& ci : pts) {
      CHECK(is_consistent_ideal(cp, ci));
      CHECK(is_ideal(cp.poset(), ci.contexts, Order::inclusion));
    }
  }
  for (const auto& e : corpus(2, 2)) {
    if (e.overlapping) continue;
    CHECK(verify_pmo_theorem(ContextPoset::from_blocks(e.blocks)));
  }
}

TEST_CASE("consistent ideals reject incompatible outcomes") {
  auto cp = ContextPoset::from_blocks(fixture("fix3pt.blk"));
  const Context top = cp.at("e1|e2|e3"), m12 = cp.at("e1,e2|e3");
  ConsistentIdeal ci;
  ci.contexts = cp.poset().down(top);
  for (auto c : members(ci.contexts)) ci.outcome.emplace_back(c, cp.restrict_atom(top, c, 0));
  std::sort(ci.outcome.begin(), ci.outcome.end());
  CHECK(is_consistent_ideal(cp, ci));
  for (auto& [c, a] : ci.outcome) {
    if (c == m12) a = 1 - a;
  }
  CHECK_FALSE(is_consistent_ideal(cp, ci));
}

TEST_CASE("subalgebra points outnumber the spectrum of one block") {
  for (std::size_t n = 1; n <= 4; ++n) {
    auto cp = ContextPoset::from_blocks(single_block(n));
    auto pts = pmo_points(cp);
    if (n >= 2) CHECK(pts.size() > n);
    for (const auto& ci : pts) {
      const Context top = principal_witness(cp.poset(), Downset{ci.contexts});
      CHECK(ci.outcome_at(top).has_value());
    }
  }
}
