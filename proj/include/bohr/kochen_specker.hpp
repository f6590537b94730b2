#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "bohr/contexts.hpp"
#include "bohr/presheaf.hpp"

namespace bohr {

/// {0,1}-valuation of universe atoms with exactly one 1 in every block.
struct Coloring {
  ElementSet ones;  // over the universe
  friend bool operator==(const Coloring&, const Coloring&) = default;
};

struct ColoringSearch {
  std::vector<Coloring> colorings;  // sorted by the list of atoms set to 1
  std::size_t nodes = 0;            // search-tree nodes visited
};

/// Exhaustive backtracking over blocks, smallest block first, trying atoms
/// of higher degree first. Works on raw hypergraphs: no consistency
/// requirement beyond BlockStructure::validate().
ColoringSearch search_colorings(const BlockStructure& b, std::optional<std::size_t> limit = std::nullopt);

std::vector<Coloring> ks_colorings(const BlockStructure& b, std::optional<std::size_t> limit = std::nullopt);

struct KsReport {
  bool colorable = false;
  std::optional<Coloring> witness;  // first coloring found, when colorable
  std::size_t colorings = 0;
  std::size_t nodes = 0;  // size of the exhausted search tree
};

KsReport ks_report(const BlockStructure& b);

}  // namespace bohr
