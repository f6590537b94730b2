#include "bohr/presheaf.hpp"

#include <algorithm>
#include <numeric>

#include "bohr/errors.hpp"

namespace bohr {

Presheaf::Presheaf(FinitePoset poset, Order order, std::vector<std::vector<std::string>> values,
                   const RestrictionFn& restrict)
    : poset_(std::move(poset)), order_(order), values_(std::move(values)) {
  const std::size_t n = poset_.size();
  if (values_.size() != n) throw InvalidPresheaf("value table does not match the poset");
  maps_.assign(n, std::vector<std::vector<std::size_t>>(n));
  for (Element p = 0; p < n; ++p) {
    for (auto q : members(poset_.down(p, order_))) {
      auto& m = maps_[p][q];
      m.resize(values_[p].size());
      for (std::size_t v = 0; v < m.size(); ++v) {
        m[v] = p == q ? v : restrict(p, q, v);
        if (m[v] >= values_[q].size()) {
          throw InvalidPresheaf("restriction from '" + poset_.id(p) + "' to '" + poset_.id(q) +
                                "' leaves the value set");
        }
      }
    }
  }
  for (Element p = 0; p < n; ++p) {
    for (auto q : members(poset_.down(p, order_))) {
      for (auto r : members(poset_.down(q, order_))) {
        for (std::size_t v = 0; v < values_[p].size(); ++v) {
          if (maps_[q][r][maps_[p][q][v]] != maps_[p][r][v]) {
            throw InvalidPresheaf("restrictions " + poset_.id(p) + " -> " + poset_.id(q) + " -> " +
                                  poset_.id(r) + " do not compose");
          }
        }
      }
    }
  }
}

std::size_t Presheaf::restrict(Element from, Element to, std::size_t value) const {
  const auto& m = maps_.at(from).at(to);
  if (m.empty() && !values_.at(from).empty()) {
    throw InvalidPresheaf("'" + poset_.id(to) + "' is not below '" + poset_.id(from) + "'");
  }
  return m.at(value);
}

bool is_subpresheaf(const Presheaf& w, const Subpresheaf& v) {
  if (v.size() != w.size()) return false;
  for (Element p = 0; p < w.size(); ++p) {
    if (v[p].size() != w.value_count(p)) return false;
  }
  for (Element p = 0; p < w.size(); ++p) {
    for (auto x : members(v[p])) {
      for (auto q : members(w.poset().down(p, w.order()))) {
        if (!v[q].test(w.restrict(p, q, x))) return false;
      }
    }
  }
  return true;
}

namespace {

class SectionSearcher {
 public:
  SectionSearcher(const Presheaf& p, std::optional<std::size_t> limit) : p_(p), limit_(limit) {
    const std::size_t n = p.size();
    order_.resize(n);
    std::iota(order_.begin(), order_.end(), 0);
    // Maximal elements first: their choices force everything beneath them.
    std::stable_sort(order_.begin(), order_.end(), [&](Element a, Element b) {
      return p.poset().up(a, p.order()).count() < p.poset().up(b, p.order()).count();
    });
    assignment_.assign(n, 0);
    assigned_ = ElementSet(n);
  }

  SectionSearch run() {
    descend(0);
    std::sort(result_.sections.begin(), result_.sections.end());
    return std::move(result_);
  }

 private:
  bool consistent(Element e, std::size_t v) const {
    const auto& poset = p_.poset();
    for (auto q : members(poset.down(e, p_.order()) & assigned_)) {
      if (p_.restrict(e, q, v) != assignment_[q]) return false;
    }
    for (auto a : members(poset.up(e, p_.order()) & assigned_)) {
      if (p_.restrict(a, e, assignment_[a]) != v) return false;
    }
    return true;
  }

  void descend(std::size_t depth) {
    ++result_.nodes;
    if (depth == order_.size()) {
      result_.sections.push_back(assignment_);
      if (limit_ && result_.sections.size() > *limit_) throw LimitExceeded(*limit_);
      return;
    }
    const Element e = order_[depth];
    for (std::size_t v = 0; v < p_.value_count(e); ++v) {
      if (!consistent(e, v)) continue;
      assignment_[e] = v;
      assigned_.set(e);
      descend(depth + 1);
      assigned_.reset(e);
    }
  }

  const Presheaf& p_;
  std::optional<std::size_t> limit_;
  std::vector<Element> order_;
  Section assignment_;
  ElementSet assigned_;
  SectionSearch result_;
};

}  // namespace

SectionSearch search_global_sections(const Presheaf& p, std::optional<std::size_t> limit) {
  return SectionSearcher(p, limit).run();
}

std::vector<Section> global_sections(const Presheaf& p, std::optional<std::size_t> limit) {
  return search_global_sections(p, limit).sections;
}

}  // namespace bohr
