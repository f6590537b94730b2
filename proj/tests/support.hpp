// Shared helpers for the unit and acceptance suites: fixtures, the exhaustive
// block-structure corpus, seeded generators and brute-force oracles. The
// oracles deliberately avoid the library's closure and search code.
#pragma once

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "bohr/blockfile.hpp"
#include "bohr/contexts.hpp"
#include "bohr/coverage.hpp"
#include "bohr/errors.hpp"
#include "bohr/presheaf.hpp"

namespace testing {

using namespace bohr;

inline std::string fixture_path(const std::string& name) { return std::string(BOHR_FIXTURES) + "/" + name; }

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

inline BlockStructure fixture(const std::string& name) { return parse_block_file(read_text(fixture_path(name))); }

inline BlockStructure single_block(std::size_t n) {
  BlockStructure b;
  std::vector<std::size_t> blk;
  for (std::size_t i = 0; i < n; ++i) {
    b.universe.push_back("a" + std::to_string(i + 1));
    blk.push_back(i);
  }
  b.blocks.push_back(blk);
  return b;
}

struct CorpusEntry {
  BlockStructure blocks;
  bool overlapping = false;  // two distinct blocks share an atom
};

/// Every block structure with 1..max_blocks blocks of 1..max_atoms atoms,
/// atoms labelled in order of first occurrence. Blocks are listed in
/// generation order, so relabelings of one shape appear once per ordering.
inline std::vector<CorpusEntry> corpus(std::size_t max_blocks = 3, std::size_t max_atoms = 3) {
  std::vector<CorpusEntry> out;
  std::vector<std::vector<std::size_t>> blocks;
  std::function<void(std::size_t)> extend = [&](std::size_t atoms_used) {
    if (!blocks.empty()) {
      CorpusEntry e;
      for (std::size_t i = 0; i < atoms_used; ++i) e.blocks.universe.push_back("a" + std::to_string(i + 1));
      e.blocks.blocks = blocks;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        for (std::size_t j = i + 1; j < blocks.size(); ++j) {
          std::set<std::size_t> x(blocks[i].begin(), blocks[i].end()), y(blocks[j].begin(), blocks[j].end());
          bool shared = false;
          for (auto a : x) shared = shared || y.count(a);
          if (shared && x != y) e.overlapping = true;
        }
      }
      out.push_back(std::move(e));
    }
    if (blocks.size() == max_blocks) return;
    // A new block: a subset of the existing atoms followed by `fresh` new ones.
    for (std::size_t mask = 0; mask < (std::size_t{1} << atoms_used); ++mask) {
      std::vector<std::size_t> old;
      for (std::size_t a = 0; a < atoms_used; ++a) {
        if (mask >> a & 1) old.push_back(a);
      }
      for (std::size_t fresh = 0; old.size() + fresh <= max_atoms; ++fresh) {
        if (old.size() + fresh == 0) continue;
        auto blk = old;
        for (std::size_t k = 0; k < fresh; ++k) blk.push_back(atoms_used + k);
        blocks.push_back(blk);
        extend(atoms_used + fresh);
        blocks.pop_back();
      }
    }
  };
  extend(0);
  return out;
}

/// Random poset on n elements "p0".."p{n-1}": i <= j with probability `density` for i < j.
inline FinitePoset random_poset(std::mt19937& rng, std::size_t n, double density) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back("p" + std::to_string(i));
  std::bernoulli_distribution edge(density);
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (edge(rng)) rel.emplace_back(i, j);
    }
  }
  return FinitePoset::build_indexed(ids, rel);
}

inline ElementSet random_subset(std::mt19937& rng, const ElementSet& of, double p = 0.5) {
  std::bernoulli_distribution pick(p);
  ElementSet out(of.size());
  for (auto x : members(of)) {
    if (pick(rng)) out.set(x);
  }
  return out;
}

/// All downsets of `p` (in `order`) contained in `within`, up to `cap` of them.
/// Returns false when the cap was hit.
inline bool downsets_within(const FinitePoset& p, Order order, const ElementSet& within, std::size_t cap,
                            const std::function<void(const ElementSet&)>& visit) {
  const auto elems = members(within);
  std::size_t seen = 0;
  ElementSet cur(p.size()), banned(p.size());
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == elems.size()) {
      if (++seen > cap) return false;
      visit(cur);
      return true;
    }
    const Element x = elems[i];
    // Elements are decided in index order; include x only when its whole
    // down-set inside `within` is still allowed.
    if (cur.test(x)) return go(i + 1);
    if (!banned.test(x)) {
      const ElementSet below = p.down(x, order) & within;
      if (!below.intersects(banned)) {
        ElementSet saved = cur;
        cur |= below;
        if (!go(i + 1)) return false;
        cur = saved;
      }
    }
    ElementSet saved = banned;
    banned |= p.up(x, order) & within;
    bool ok = go(i + 1);
    banned = saved;
    return ok;
  };
  return go(0);
}

/// Least Grothendieck topology containing the basic covers, by literal
/// fixpoint over all sieves (maximal sieve, stability, transitivity).
/// result[x] is the set of covering sieves on x.
inline std::vector<std::set<ElementSet>> brute_topology(const Site& site) {
  const auto& p = site.poset();
  const Order o = site.order();
  const std::size_t n = p.size();
  std::vector<std::vector<ElementSet>> sieves(n);
  for (Element x = 0; x < n; ++x) {
    downsets_within(p, o, p.down(x, o), std::size_t(-1), [&](const ElementSet& s) { sieves[x].push_back(s); });
  }
  std::vector<std::set<ElementSet>> j(n);
  for (Element x = 0; x < n; ++x) j[x].insert(p.down(x, o));
  for (const auto& c : site.basic_covers()) j[c.root].insert(p.down_closure(c.family, o));
  for (bool changed = true; changed;) {
    changed = false;
    for (Element x = 0; x < n; ++x) {
      for (const auto& s : std::vector<ElementSet>(j[x].begin(), j[x].end())) {
        for (auto y : members(p.down(x, o))) {
          if (j[y].insert(s & p.down(y, o)).second) changed = true;
        }
      }
      for (const auto& r : sieves[x]) {
        if (j[x].count(r)) continue;
        for (const auto& s : j[x]) {
          bool all = true;
          for (auto y : members(s)) all = all && j[y].count(r & p.down(y, o));
          if (all) {
            j[x].insert(r);
            changed = true;
            break;
          }
        }
      }
    }
  }
  return j;
}

/// Points by subset search: nonempty filters meeting every covering sieve
/// of each of their members, with coverage decided by `covers(root, sieve)`.
inline std::vector<ElementSet> brute_points(const FinitePoset& p, Order o,
                                            const std::function<bool(Element, const ElementSet&)>& covers) {
  std::vector<ElementSet> out;
  ElementSet everything = p.full_set();
  // Up-sets are complements of down-sets.
  downsets_within(p, o, everything, std::size_t(-1), [&](const ElementSet& down) {
    ElementSet f = ~down;
    if (f.none()) return;
    for (auto a : members(f)) {
      for (auto b : members(f)) {
        if (!(p.down(a, o) & p.down(b, o) & f).any()) return;
      }
    }
    // Covering is upward closed in sieves, so the largest sieve missing f decides.
    for (auto a : members(f)) {
      if (covers(a, p.down(a, o) - f)) return;
    }
    out.push_back(f);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// A random presheaf on `p` (restricting from x to y <= x in inclusion order):
/// values at x are the classes of a ground set under labels of everything below x.
inline Presheaf random_presheaf(std::mt19937& rng, const FinitePoset& p, std::size_t ground, std::size_t labels) {
  const std::size_t n = p.size();
  std::uniform_int_distribution<std::size_t> label(0, labels - 1);
  std::vector<std::vector<std::size_t>> h(n, std::vector<std::size_t>(ground));
  for (auto& row : h) {
    for (auto& v : row) v = label(rng);
  }
  // key[x][g]: the tuple of labels of g over the down-set of x.
  std::vector<std::vector<std::vector<std::size_t>>> key(n, std::vector<std::vector<std::size_t>>(ground));
  std::vector<std::vector<std::vector<std::size_t>>> classes(n);
  std::vector<std::vector<std::string>> values(n);
  std::vector<std::vector<std::size_t>> class_of(n, std::vector<std::size_t>(ground));
  for (Element x = 0; x < n; ++x) {
    std::vector<std::vector<std::size_t>> keys;
    for (std::size_t g = 0; g < ground; ++g) {
      for (auto y : members(p.down(x))) key[x][g].push_back(h[y][g]);
      auto it = std::find(keys.begin(), keys.end(), key[x][g]);
      if (it == keys.end()) {
        class_of[x][g] = keys.size();
        keys.push_back(key[x][g]);
      } else {
        class_of[x][g] = std::size_t(it - keys.begin());
      }
    }
    for (std::size_t v = 0; v < keys.size(); ++v) values[x].push_back("v" + std::to_string(v));
  }
  auto restrict = [class_of, ground](Element from, Element to, std::size_t v) {
    for (std::size_t g = 0; g < ground; ++g) {
      if (class_of[from][g] == v) return class_of[to][g];
    }
    return std::size_t(0);
  };
  return Presheaf(p, Order::inclusion, std::move(values), restrict);
}

/// Smallest subpresheaf containing the chosen values.
inline Subpresheaf close_subpresheaf(const Presheaf& w, Subpresheaf v) {
  const auto& p = w.poset();
  for (Element x = 0; x < p.size(); ++x) {
    for (auto val : members(v[x])) {
      for (auto y : members(p.down(x, w.order()))) v[y].set(w.restrict(x, y, val));
    }
  }
  return v;
}

inline Subpresheaf random_subpresheaf(std::mt19937& rng, const Presheaf& w, double p) {
  Subpresheaf v;
  for (Element x = 0; x < w.size(); ++x) v.push_back(random_subset(rng, ElementSet(w.value_count(x)).set(), p));
  return close_subpresheaf(w, v);
}

}  // namespace testing
