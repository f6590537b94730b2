#include "bohr/dot.hpp"

namespace bohr {

namespace {

std::string quoted(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_dot(const FinitePoset& p, std::string_view graph_name) {
  std::string out = "digraph " + quoted(graph_name) + " {\n";
  for (Element x = 0; x < p.size(); ++x) out += "  " + quoted(p.id(x)) + ";\n";
  for (const auto& [a, b] : p.cover_edges()) out += "  " + quoted(p.id(a)) + " -> " + quoted(p.id(b)) + ";\n";
  return out + "}\n";
}

}  // namespace bohr
