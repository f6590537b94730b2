#include "bohr/order.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bohr/errors.hpp"

namespace bohr {

std::vector<Element> members(const ElementSet& s) {
  std::vector<Element> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

FinitePoset FinitePoset::build(std::vector<std::string> ids,
                               const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  std::map<std::string, std::size_t, std::less<>> index;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (!index.emplace(ids[i], i).second) throw UnknownId("duplicate element id '" + ids[i] + "'");
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(leq_pairs.size());
  for (const auto& [a, b] : leq_pairs) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end()) throw UnknownId("unknown element id '" + a + "'");
    if (ib == index.end()) throw UnknownId("unknown element id '" + b + "'");
    pairs.emplace_back(ia->second, ib->second);
  }
  return build_indexed(std::move(ids), pairs);
}

FinitePoset FinitePoset::build_indexed(std::vector<std::string> ids,
                                       const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs) {
  const std::size_t n = ids.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](auto a, auto b) { return ids[a] < ids[b]; });
  for (std::size_t i = 1; i < n; ++i) {
    if (ids[perm[i - 1]] == ids[perm[i]]) throw UnknownId("duplicate element id '" + ids[perm[i]] + "'");
  }
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[perm[i]] = i;

  FinitePoset p;
  p.ids_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.ids_[i] = std::move(ids[perm[i]]);

  // up_[a] holds b with a <= b; close reflexively and transitively.
  p.up_.assign(n, ElementSet(n));
  for (std::size_t i = 0; i < n; ++i) p.up_[i].set(i);
  for (const auto& [a, b] : leq_pairs) {
    if (a >= n || b >= n) throw UnknownId("pair index out of range");
    p.up_[rank[a]].set(rank[b]);
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (p.up_[i].test(k)) p.up_[i] |= p.up_[k];
    }
  }
  p.down_.assign(n, ElementSet(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b : members(p.up_[a])) p.down_[b].set(a);
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (auto b : members(p.up_[a])) {
      if (b != a && p.up_[b].test(a)) {
        throw AntisymmetryViolation("order identifies distinct elements '" + p.ids_[a] + "' and '" +
                                    p.ids_[b] + "'");
      }
    }
  }
  return p;
}

std::optional<Element> FinitePoset::find(std::string_view id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return std::nullopt;
  return static_cast<Element>(it - ids_.begin());
}

Element FinitePoset::at(std::string_view id) const {
  if (auto e = find(id)) return *e;
  throw UnknownId("unknown element id '" + std::string(id) + "'");
}

bool FinitePoset::leq(Element a, Element b, Order order) const {
  return order == Order::inclusion ? up_.at(a).test(b) : up_.at(b).test(a);
}

const ElementSet& FinitePoset::down(Element x, Order order) const {
  return order == Order::inclusion ? down_.at(x) : up_.at(x);
}

const ElementSet& FinitePoset::up(Element x, Order order) const {
  return order == Order::inclusion ? up_.at(x) : down_.at(x);
}

ElementSet FinitePoset::down_closure(const ElementSet& s, Order order) const {
  ElementSet out(size());
  for (auto x : members(s)) out |= down(x, order);
  return out;
}

ElementSet FinitePoset::up_closure(const ElementSet& s, Order order) const {
  ElementSet out(size());
  for (auto x : members(s)) out |= up(x, order);
  return out;
}

bool FinitePoset::is_down_closed(const ElementSet& s, Order order) const {
  for (auto x : members(s)) {
    if (!down(x, order).is_subset_of(s)) return false;
  }
  return true;
}

bool FinitePoset::has_binary_meets(Order order) const {
  for (std::size_t a = 0; a < size(); ++a) {
    for (std::size_t b = a + 1; b < size(); ++b) {
      const ElementSet lower = down(a, order) & down(b, order);
      bool found = false;
      for (auto m : members(lower)) {
        if (lower.is_subset_of(down(m, order))) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
  }
  return true;
}

std::vector<std::pair<Element, Element>> FinitePoset::cover_edges() const {
  std::vector<std::pair<Element, Element>> edges;
  for (std::size_t a = 0; a < size(); ++a) {
    for (auto b : members(up_[a])) {
      if (b == a) continue;
      // a < b with nothing strictly between.
      ElementSet between = up_[a] & down_[b];
      if (between.count() == 2) edges.emplace_back(a, b);
    }
  }
  return edges;
}

bool is_directed_up(const FinitePoset& p, const ElementSet& s, Order order) {
  const auto xs = members(s);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    for (std::size_t j = i + 1; j < xs.size(); ++j) {
      if (!(p.up(xs[i], order) & p.up(xs[j], order)).intersects(s)) return false;
    }
  }
  return true;
}

bool is_directed_down(const FinitePoset& p, const ElementSet& s, Order order) {
  const Order flipped = order == Order::inclusion ? Order::refinement : Order::inclusion;
  return is_directed_up(p, s, flipped);
}

bool is_ideal(const FinitePoset& p, const ElementSet& s, Order order) {
  return s.any() && p.is_down_closed(s, order) && is_directed_up(p, s, order);
}

bool is_filter(const FinitePoset& p, const ElementSet& s, Order order) {
  const Order flipped = order == Order::inclusion ? Order::refinement : Order::inclusion;
  return is_ideal(p, s, flipped);
}

std::vector<Downset> ideals_of(const FinitePoset& p, Order order) {
  std::vector<Downset> out;
  out.reserve(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out.push_back(Downset{p.down(x, order)});
  return out;
}

Element principal_witness(const FinitePoset& p, const Downset& d, Order order) {
  for (auto x : members(d.members)) {
    if (d.members.is_subset_of(p.down(x, order))) return x;
  }
  throw NotDirected("downset has no maximum element");
}

ElementSet maximal_elements(const FinitePoset& p, Order order) {
  ElementSet out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.up(x, order).count() == 1) out.set(x);
  }
  return out;
}

ElementSet minimal_elements(const FinitePoset& p, Order order) {
  ElementSet out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p.down(x, order).count() == 1) out.set(x);
  }
  return out;
}

bool is_dense_below(const FinitePoset& p, Element x, const ElementSet& dense, Order order) {
  for (auto q : members(p.down(x, order))) {
    if (!p.down(q, order).intersects(dense)) return false;
  }
  return true;
}

}  // namespace bohr
