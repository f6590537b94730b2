#include "bohr/frame.hpp"

#include <algorithm>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

bool open_order(const ElementSet& a, const ElementSet& b) {
  const auto ca = a.count();
  const auto cb = b.count();
  if (ca != cb) return ca < cb;
  return members(a) < members(b);
}

}  // namespace

FiniteFrame::FiniteFrame(std::size_t ground_size, std::vector<ElementSet> opens)
    : ground_size_(ground_size), opens_(std::move(opens)) {
  if (opens_.empty()) throw Error("a frame needs at least one open");
  for (const auto& o : opens_) {
    if (o.size() != ground_size_) throw Error("open has the wrong ground size");
  }
  std::sort(opens_.begin(), opens_.end(), open_order);
  opens_.erase(std::unique(opens_.begin(), opens_.end()), opens_.end());
  for (Index i = 0; i < opens_.size(); ++i) index_.emplace(opens_[i], i);
}

std::optional<FiniteFrame::Index> FiniteFrame::find(const ElementSet& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

FiniteFrame::Index FiniteFrame::least_superset(const ElementSet& s) const {
  for (Index i = 0; i < opens_.size(); ++i) {
    if (s.is_subset_of(opens_[i])) return i;
  }
  throw Error("no open contains the given set");
}

FiniteFrame::Index FiniteFrame::meet(Index a, Index b) const {
  if (auto i = find(opens_.at(a) & opens_.at(b))) return *i;
  throw Error("family is not closed under intersection");
}

FiniteFrame::Index FiniteFrame::join(Index a, Index b) const {
  return least_superset(opens_.at(a) | opens_.at(b));
}

FiniteFrame::Index FiniteFrame::implies(Index a, Index b) const {
  const ElementSet& u = opens_.at(a);
  const ElementSet& v = opens_.at(b);
  // Sorted by size: the first hit from the top is the largest such open.
  for (Index i = opens_.size(); i-- > 0;) {
    if ((u & opens_[i]).is_subset_of(v)) return i;
  }
  throw Error("implication has no candidate");
}

bool FiniteFrame::is_intersection_closed() const {
  const ElementSet& t = opens_.back();
  for (const auto& o : opens_) {
    if (!o.is_subset_of(t)) return false;
  }
  for (Index a = 0; a < opens_.size(); ++a) {
    for (Index b = a + 1; b < opens_.size(); ++b) {
      if (!find(opens_[a] & opens_[b])) return false;
    }
  }
  return true;
}

FiniteFrame::Index heyting(const FiniteFrame& f, FiniteFrame::Index u, FiniteFrame::Index v) {
  return f.implies(u, v);
}

FiniteFrame booleanize(const FiniteFrame& f) {
  std::vector<ElementSet> stable;
  for (FiniteFrame::Index i = 0; i < f.size(); ++i) {
    if (f.negate(f.negate(i)) == i) stable.push_back(f.open(i));
  }
  return FiniteFrame(f.ground_size(), std::move(stable));
}

bool is_boolean(const FiniteFrame& f) {
  for (FiniteFrame::Index x = 0; x < f.size(); ++x) {
    const auto nx = f.negate(x);
    if (f.join(x, nx) != f.top()) return false;
    if (f.negate(nx) != x) return false;
  }
  return true;
}

bool is_distributive(const FiniteFrame& f) {
  const auto n = f.size();
  for (FiniteFrame::Index a = 0; a < n; ++a) {
    for (FiniteFrame::Index b = 0; b < n; ++b) {
      const auto ab = f.meet(a, b);
      for (FiniteFrame::Index c = b; c < n; ++c) {
        if (f.meet(a, f.join(b, c)) != f.join(ab, f.meet(a, c))) return false;
      }
    }
  }
  return true;
}

bool satisfies_heyting_adjunction(const FiniteFrame& f) {
  const auto n = f.size();
  for (FiniteFrame::Index u = 0; u < n; ++u) {
    for (FiniteFrame::Index v = 0; v < n; ++v) {
      const auto imp = f.implies(u, v);
      for (FiniteFrame::Index w = 0; w < n; ++w) {
        if (f.leq(w, imp) != f.leq(f.meet(u, w), v)) return false;
      }
    }
  }
  return true;
}

}  // namespace bohr
