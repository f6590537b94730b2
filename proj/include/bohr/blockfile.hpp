#pragma once

#include <string>
#include <string_view>

#include "bohr/contexts.hpp"

namespace bohr {

/// Reads the line-based block format:
///
///     # comment
///     universe a b c
///     block a b
///     block c
///
/// The universe line comes first; every block lists atoms of the universe.
/// Throws ParseError carrying the offending line number. Structural checks
/// that are not about syntax (atoms in no block) are left to validate().
BlockStructure parse_block_file(std::string_view text);

/// Canonical text: one universe line then one line per block, single spaces.
std::string to_block_file(const BlockStructure& b);

}  // namespace bohr
