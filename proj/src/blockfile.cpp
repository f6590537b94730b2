#include "bohr/blockfile.hpp"

#include <map>
#include <set>
#include <sstream>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

constexpr std::string_view reserved_chars = ",|:{}\"#";

void check_atom_id(std::size_t line, const std::string& id) {
  if (id == "0" || id == "1") throw ParseError(line, "atom id '" + id + "' is reserved");
  if (id.find_first_of(reserved_chars) != std::string::npos) {
    throw ParseError(line, "atom id '" + id + "' contains one of " + std::string(reserved_chars));
  }
}

}  // namespace

BlockStructure parse_block_file(std::string_view text) {
  BlockStructure b;
  std::map<std::string, std::size_t> index;
  bool have_universe = false;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string keyword;
    if (!(tokens >> keyword)) continue;
    std::vector<std::string> args;
    for (std::string t; tokens >> t;) args.push_back(t);

    if (keyword == "universe") {
      if (have_universe) throw ParseError(line_no, "duplicate universe line");
      if (args.empty()) throw ParseError(line_no, "empty universe");
      for (const auto& a : args) {
        check_atom_id(line_no, a);
        if (!index.emplace(a, b.universe.size()).second) throw ParseError(line_no, "duplicate atom '" + a + "'");
        b.universe.push_back(a);
      }
      have_universe = true;
    } else if (keyword == "block") {
      if (!have_universe) throw ParseError(line_no, "block before the universe line");
      if (args.empty()) throw ParseError(line_no, "empty block");
      std::vector<std::size_t> blk;
      std::set<std::size_t> seen;
      for (const auto& a : args) {
        auto it = index.find(a);
        if (it == index.end()) throw ParseError(line_no, "unknown atom '" + a + "'");
        if (!seen.insert(it->second).second) throw ParseError(line_no, "atom '" + a + "' repeated in block");
        blk.push_back(it->second);
      }
      b.blocks.push_back(std::move(blk));
    } else {
      if (!have_universe) throw ParseError(line_no, "expected the universe line, found '" + keyword + "'");
      throw ParseError(line_no, "unknown directive '" + keyword + "'");
    }
  }
  if (!have_universe) throw ParseError(line_no + 1, "missing universe line");
  return b;
}

std::string to_block_file(const BlockStructure& b) {
  std::string out = "universe";
  for (const auto& a : b.universe) out += " " + a;
  out += "\n";
  for (const auto& blk : b.blocks) {
    out += "block";
    for (auto a : blk) out += " " + b.universe.at(a);
    out += "\n";
  }
  return out;
}

}  // namespace bohr
