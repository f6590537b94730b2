#include "bohr/cli.hpp"

#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include <openssl/evp.h>

#include "CLI11.hpp"
#include "bohr/blockfile.hpp"
#include "bohr/contexts.hpp"
#include "bohr/dot.hpp"
#include "bohr/double_negation.hpp"
#include "bohr/errors.hpp"
#include "bohr/kochen_specker.hpp"
#include "bohr/pmo.hpp"

namespace bohr {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw Error("sha256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < len; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Options {
  std::string command;
  std::string input;
  std::size_t limit = default_limit;
  std::string site;
  std::string what;
};

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) out += " " + a;
  return out;
}

std::string braced(const FinitePoset& p, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto x : members(s)) {
    if (!first) out += ' ';
    out += p.id(x);
    first = false;
  }
  return out + "}";
}

/// Generators of a downset: its maximal members in the site order.
ElementSet generators(const Site& site, const ElementSet& downset) {
  ElementSet out(site.size());
  for (auto x : members(downset)) {
    if ((site.up(x) & downset).count() == 1) out.set(x);
  }
  return out;
}

Site select_site(const ContextPoset& cp, const std::string& site_name) {
  if (site_name == "pmo") return pmo_site(cp).site;
  if (site_name == "mo") return mo_site(cp).site;
  if (site_name == "dense") return dense_site(cp.poset(), Order::refinement);
  if (site_name.rfind("gelfand:", 0) == 0) {
    const std::string name = site_name.substr(8);
    auto c = cp.poset().find(name);
    if (!c) throw UsageError("unknown context '" + name + "'");
    return gelfand_site(cp.algebra(*c));
  }
  throw UsageError("unknown site '" + site_name + "' (expected pmo, mo, dense or gelfand:<context>)");
}

void check_limit(std::size_t count, std::size_t limit) {
  if (count > limit) throw LimitExceeded(limit);
}

class Runner {
 public:
  Runner(const Options& o, const BlockStructure& b) : o_(o), b_(b) {}

  void run(std::ostream& out) {
    const auto& c = o_.command;
    if (c == "validate") return validate(out);
    if (c == "colorings") return colorings(out);
    // Everything else needs the context poset.
    const ContextPoset cp = ContextPoset::from_blocks(b_);
    check_limit(cp.size(), o_.limit);
    if (c == "contexts") return contexts(cp, out);
    if (c == "pmo") return pmo(cp, out);
    if (c == "mo") return mo(cp, out);
    if (c == "sections") return sections(cp, out);
    if (c == "frame") return frame(cp, out, false);
    if (c == "booleanize") return frame(cp, out, true);
    if (c == "dot") return dot(cp, out);
    throw UsageError("unknown command '" + c + "'");
  }

 private:
  void validate(std::ostream& out) {
    b_.validate();
    const ContextPoset cp = ContextPoset::from_blocks(b_);
    out << "atoms " << b_.universe.size() << "\n";
    out << "blocks " << b_.blocks.size() << "\n";
    out << "contexts " << cp.size() << "\n";
    out << "maximal " << cp.maximal().count() << "\n";
    out << "valid\n";
  }

  void contexts(const ContextPoset& cp, std::ostream& out) {
    const ElementSet maximal = cp.maximal();
    for (Context c = 0; c < cp.size(); ++c) {
      out << "context " << cp.name(c) << " atoms=" << cp.algebra(c).atom_count()
          << " maximal=" << (maximal.test(c) ? "yes" : "no") << "\n";
    }
    out << cp.size() << " contexts\n";
  }

  void pmo(const ContextPoset& cp, std::ostream& out) {
    const auto points = pmo_points(cp, o_.limit);
    std::vector<std::string> lines;
    for (const auto& ci : points) {
      const Context top = principal_witness(cp.poset(), Downset{ci.contexts});
      std::string line = "point " + cp.name(top) + " " + cp.algebra(top).atom_name(*ci.outcome_at(top)) + " ideal";
      for (const auto& [ctx, atom] : ci.outcome) line += " " + cp.name(ctx) + ":" + cp.algebra(ctx).atom_name(atom);
      lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    for (const auto& l : lines) out << l << "\n";
    out << points.size() << " points\n";
  }

  void mo(const ContextPoset& cp, std::ostream& out) {
    const auto outcomes = mo_points(cp, o_.limit);
    for (const auto& m : outcomes) {
      out << "outcome " << cp.name(m.context) << " " << cp.algebra(m.context).atom_name(m.atom) << "\n";
    }
    out << outcomes.size() << " outcomes\n";
  }

  void sections(const ContextPoset& cp, std::ostream& out) {
    const Presheaf sigma = spectral_presheaf(cp);
    const auto secs = global_sections(sigma, o_.limit);
    for (const auto& s : secs) {
      out << "section";
      for (Context c = 0; c < cp.size(); ++c) out << " " << cp.name(c) << ":" << sigma.value_name(c, s[c]);
      out << "\n";
    }
    out << secs.size() << " sections\n";
  }

  void colorings(std::ostream& out) {
    const auto search = search_colorings(b_, o_.limit);
    for (const auto& col : search.colorings) {
      out << "coloring";
      for (auto a : members(col.ones)) out << " " << b_.universe[a];
      out << "\n";
    }
    if (search.colorings.empty()) {
      out << "# not colorable: search tree exhausted after " << search.nodes << " nodes\n";
    } else {
      out << "# search nodes: " << search.nodes << "\n";
    }
    out << search.colorings.size() << " colorings\n";
  }

  void frame(const ContextPoset& cp, std::ostream& out, bool boolean) {
    if (o_.site.empty()) throw UsageError("--site is required");
    const Site site = select_site(cp, o_.site);
    FiniteFrame f = frame_of(site, o_.limit);
    if (boolean) f = booleanize(f);
    const char* label = boolean ? "element " : "open ";
    for (const auto& open : f.opens()) out << label << braced(site.poset(), generators(site, open)) << "\n";
    out << f.size() << (boolean ? " elements\n" : " opens\n");
  }

  void dot(const ContextPoset& cp, std::ostream& out) {
    if (o_.what == "contexts") {
      out << to_dot(cp.poset(), "contexts");
    } else if (o_.what == "pmo" || o_.what == "mo") {
      out << to_dot(PairPoset(cp).poset(), o_.what);
    } else {
      throw UsageError("--what must be contexts, pmo or mo");
    }
  }

  const Options& o_;
  const BlockStructure& b_;
};

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Partial and total measurement outcome spaces of finite context posets", "bohrcalc"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--input", o.input, "block file")->required();
  app.add_option("--limit", o.limit, "abort enumerations beyond N results")->check(CLI::PositiveNumber);

  struct Sub {
    const char* name;
    const char* help;
  };
  const Sub subs[] = {
      {"validate", "check the block structure and its context poset"},
      {"contexts", "list contexts"},
      {"pmo", "points of the partial measurement outcome site"},
      {"mo", "measurement outcomes"},
      {"sections", "global sections of the spectral presheaf"},
      {"colorings", "Kochen-Specker colorings"},
      {"frame", "frame of opens of a site"},
      {"booleanize", "double-negation stable opens of a site"},
      {"dot", "Hasse diagram in DOT"},
  };
  for (const auto& s : subs) {
    auto* sub = app.add_subcommand(s.name, s.help);
    const std::string name = s.name;
    sub->callback([&o, name] { o.command = name; });
    if (name == "frame" || name == "booleanize") {
      sub->add_option("--site", o.site, "pmo, mo, dense or gelfand:<context>")->required();
    }
    if (name == "dot") sub->add_option("--what", o.what, "contexts, pmo or mo")->required();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    err << "bohrcalc: " << e.what() << "\n";
    return exit_code::usage;
  }

  std::ifstream file(o.input, std::ios::binary);
  if (!file) {
    err << "bohrcalc: cannot read '" << o.input << "'\n";
    return exit_code::usage;
  }
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();

  try {
    const BlockStructure b = parse_block_file(text);
    std::ostringstream body;
    Runner(o, b).run(body);
    out << "# bohrcalc" << join_args(args) << "\n";
    out << "# input sha256:" << sha256_hex(text) << "\n";
    out << body.str();
    return exit_code::ok;
  } catch (const ParseError& e) {
    err << "bohrcalc: parse error: " << e.what() << "\n";
    return exit_code::parse;
  } catch (const UsageError& e) {
    err << "bohrcalc: " << e.what() << "\n";
    return exit_code::usage;
  } catch (const LimitExceeded& e) {
    err << "bohrcalc: " << e.what() << "\n";
    return exit_code::limit;
  } catch (const Error& e) {
    err << "bohrcalc: invalid model: " << e.what() << "\n";
    return exit_code::model;
  }
}

}  // namespace bohr
