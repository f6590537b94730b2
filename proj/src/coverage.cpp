#include "bohr/coverage.hpp"

#include "bohr/errors.hpp"

namespace bohr {

Site::Site(FinitePoset poset, Order order, std::vector<BasicCover> covers)
    : poset_(std::move(poset)), order_(order), covers_(std::move(covers)) {
  generated_.reserve(covers_.size());
  for (const auto& c : covers_) {
    if (c.root >= size() || c.family.size() != size()) throw InvalidCover("cover is not over this poset");
    if (!c.family.is_subset_of(down(c.root))) {
      throw InvalidCover("covering family of '" + poset_.id(c.root) + "' has a member not below it");
    }
    generated_.push_back(down_closure(c.family));
  }
}

Sieve Site::sieve(Element root, const ElementSet& family) const {
  return Sieve{root, down_closure(family) & down(root)};
}

ElementSet Site::closure(const ElementSet& s) const {
  ElementSet u = down_closure(s);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t c = 0; c < covers_.size(); ++c) {
      const ElementSet candidates = down(covers_[c].root) - u;
      for (auto y : members(candidates)) {
        if (u.test(y)) continue;
        if ((generated_[c] & down(y)).is_subset_of(u)) {
          u |= down(y);
          changed = true;
        }
      }
    }
  }
  return u;
}

bool Site::is_saturated(const ElementSet& downset) const {
  for (std::size_t c = 0; c < covers_.size(); ++c) {
    const ElementSet candidates = down(covers_[c].root) - downset;
    for (auto y : members(candidates)) {
      if ((generated_[c] & down(y)).is_subset_of(downset)) return false;
    }
  }
  return true;
}

bool CoveringOracle::covers(Element root, const ElementSet& family) const {
  const ElementSet sieve = site_->down_closure(family) & site_->down(root);
  if (sieve.test(root)) return true;
  if (site_->size() > memo_limit) return site_->closure(sieve).test(root);
  auto key = std::make_pair(root, sieve);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const bool result = site_->closure(sieve).test(root);
  memo_.emplace(std::move(key), result);
  return result;
}

CoveringOracle saturate(const Site& site) { return CoveringOracle(site); }

bool is_point(const Site& site, const CoveringOracle& oracle, const ElementSet& s) {
  if (!is_filter(site.poset(), s, site.order())) return false;
  // Covering sieves are upward closed, so some cover of a misses s exactly
  // when the largest sieve missing s already covers a.
  for (auto a : members(s)) {
    if (oracle.covers(a, site.down(a) - s)) return false;
  }
  return true;
}

std::vector<Filter> points_of(const Site& site) {
  std::vector<Filter> out;
  for (Element x = 0; x < site.size(); ++x) {
    const ElementSet& f = site.up(x);
    if (site.is_saturated(~f)) out.push_back(Filter{f});
  }
  return out;
}

FiniteFrame frame_of(const Site& site, std::optional<std::size_t> limit) {
  const std::size_t n = site.size();
  std::vector<ElementSet> opens;
  auto emit = [&](const ElementSet& s) {
    opens.push_back(s);
    if (limit && opens.size() > *limit) throw LimitExceeded(*limit);
  };

  ElementSet current = site.closure(ElementSet(n));
  emit(current);
  // NextClosure: the lectic successor of a closed set.
  for (;;) {
    bool advanced = false;
    ElementSet prefix_mask(n);
    prefix_mask.set();
    for (std::size_t i = n; i-- > 0;) {
      prefix_mask.reset(i);
      if (current.test(i)) continue;
      ElementSet seed = current & prefix_mask;
      const ElementSet prefix = seed;
      seed.set(i);
      ElementSet next = site.closure(seed);
      if ((next & prefix_mask) == prefix) {
        current = std::move(next);
        emit(current);
        advanced = true;
        break;
      }
    }
    if (!advanced) break;
  }
  return FiniteFrame(n, std::move(opens));
}

}  // namespace bohr
