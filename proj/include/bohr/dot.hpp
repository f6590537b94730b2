#pragma once

#include <string>
#include <string_view>

#include "bohr/order.hpp"

namespace bohr {

/// Hasse diagram as a DOT digraph. Edges run upward in the stored order
/// (for contexts: from a subalgebra to a covering superalgebra; for pairs:
/// from a condition to a covering refinement). Nodes and edges are listed
/// in element order.
std::string to_dot(const FinitePoset& p, std::string_view graph_name);

}  // namespace bohr
