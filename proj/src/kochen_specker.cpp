#include "bohr/kochen_specker.hpp"

#include <algorithm>
#include <numeric>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

enum class Value : unsigned char { unset, zero, one };

class ColoringSearcher {
 public:
  ColoringSearcher(const BlockStructure& b, std::optional<std::size_t> limit)
      : universe_(b.universe.size()), limit_(limit) {
    std::vector<std::size_t> degree(universe_, 0);
    for (const auto& blk : b.blocks) {
      for (auto a : blk) ++degree[a];
    }
    blocks_ = b.blocks;
    for (auto& blk : blocks_) {
      std::stable_sort(blk.begin(), blk.end(), [&](auto x, auto y) { return degree[x] > degree[y]; });
    }
    std::stable_sort(blocks_.begin(), blocks_.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    values_.assign(universe_, Value::unset);
  }

  ColoringSearch run() {
    descend(0);
    std::sort(result_.colorings.begin(), result_.colorings.end(),
              [](const Coloring& x, const Coloring& y) { return members(x.ones) < members(y.ones); });
    return std::move(result_);
  }

 private:
  void descend(std::size_t depth) {
    ++result_.nodes;
    if (depth == blocks_.size()) {
      Coloring c{ElementSet(universe_)};
      for (std::size_t a = 0; a < universe_; ++a) {
        if (values_[a] == Value::one) c.ones.set(a);
      }
      result_.colorings.push_back(std::move(c));
      if (limit_ && result_.colorings.size() > *limit_) throw LimitExceeded(*limit_);
      return;
    }
    const auto& blk = blocks_[depth];
    for (auto chosen : blk) {
      if (values_[chosen] == Value::zero) continue;
      bool ok = true;
      for (auto a : blk) {
        if (a != chosen && values_[a] == Value::one) ok = false;
      }
      if (!ok) continue;
      std::vector<std::size_t> touched;
      for (auto a : blk) {
        if (values_[a] != Value::unset) continue;
        values_[a] = a == chosen ? Value::one : Value::zero;
        touched.push_back(a);
      }
      descend(depth + 1);
      for (auto a : touched) values_[a] = Value::unset;
    }
  }

  std::size_t universe_;
  std::optional<std::size_t> limit_;
  std::vector<std::vector<std::size_t>> blocks_;
  std::vector<Value> values_;
  ColoringSearch result_;
};

}  // namespace

ColoringSearch search_colorings(const BlockStructure& b, std::optional<std::size_t> limit) {
  b.validate();
  return ColoringSearcher(b, limit).run();
}

std::vector<Coloring> ks_colorings(const BlockStructure& b, std::optional<std::size_t> limit) {
  return search_colorings(b, limit).colorings;
}

KsReport ks_report(const BlockStructure& b) {
  auto search = search_colorings(b);
  KsReport r;
  r.colorable = !search.colorings.empty();
  r.colorings = search.colorings.size();
  r.nodes = search.nodes;
  if (r.colorable) r.witness = search.colorings.front();
  return r;
}

}  // namespace bohr
