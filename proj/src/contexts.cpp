#include "bohr/contexts.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>

#include "bohr/errors.hpp"

namespace bohr {

namespace {

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

std::string describe_block(const BlockStructure& b, const std::vector<std::size_t>& block) {
  std::vector<std::string> names;
  for (auto a : block) names.push_back(b.universe[a]);
  return "{" + join(names, ",") + "}";
}

/// Set partitions of {0..n-1} as restricted growth strings.
void for_each_partition(std::size_t n, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> rgs(n, 0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i, std::size_t max_label) {
    if (i == n) {
      f(rgs);
      return;
    }
    for (std::size_t l = 0; l <= max_label + 1; ++l) {
      rgs[i] = l;
      rec(i + 1, std::max(max_label, l));
    }
  };
  if (n == 0) return;
  rgs[0] = 0;
  rec(1, 0);
}

// Context under construction, in universe terms.
struct RawContext {
  std::string name;
  std::optional<std::size_t> block;      // nullopt for the trivial context
  std::vector<ElementSet> atom_sets;     // universe atoms of each atom
};

}  // namespace

void BlockStructure::validate() const {
  std::set<std::string> seen;
  for (const auto& a : universe) {
    if (!seen.insert(a).second) throw InvalidModel("duplicate universe atom '" + a + "'");
  }
  std::vector<bool> used(universe.size(), false);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) throw InvalidModel("block " + std::to_string(i + 1) + " is empty");
    std::set<std::size_t> in_block;
    for (auto a : blocks[i]) {
      if (a >= universe.size()) throw InvalidModel("block " + std::to_string(i + 1) + " names an unknown atom");
      if (!in_block.insert(a).second) {
        throw InvalidModel("block " + std::to_string(i + 1) + " repeats atom '" + universe[a] + "'");
      }
      used[a] = true;
    }
  }
  for (std::size_t a = 0; a < universe.size(); ++a) {
    if (!used[a]) throw InvalidModel("atom '" + universe[a] + "' is in no block");
  }
}

BooleanAlgebra::BooleanAlgebra(std::vector<std::vector<Label>> atom_labels) : labels_(std::move(atom_labels)) {
  if (labels_.empty()) throw InvalidModel("a Boolean algebra needs at least one atom");
  if (labels_.size() > max_atoms) throw InvalidModel("too many atoms for one context");
}

BooleanAlgebra BooleanAlgebra::with_atom_names(const std::vector<std::string>& names) {
  std::vector<std::vector<Label>> labels;
  for (std::size_t i = 0; i < names.size(); ++i) labels.push_back({Label{i, names[i]}});
  return BooleanAlgebra(std::move(labels));
}

std::string BooleanAlgebra::element_name(Mask m) const {
  if (!contains(m)) throw ElementNotInContext("mask outside the algebra");
  if (m == 0) return "0";
  if (m == top()) return "1";
  std::vector<const Label*> parts;
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (m >> i & 1) {
      for (const auto& l : labels_[i]) parts.push_back(&l);
    }
  }
  std::sort(parts.begin(), parts.end(), [](const Label* a, const Label* b) { return a->key < b->key; });
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i]->text;
  }
  return out;
}

std::vector<Mask> BooleanAlgebra::elements() const {
  if (atom_count() > 20) throw LimitExceeded(std::size_t{1} << 20);
  std::vector<Mask> out(std::size_t{1} << atom_count());
  for (Mask m = 0; m < out.size(); ++m) out[m] = m;
  return out;
}

ContextPoset ContextPoset::from_blocks(const BlockStructure& b) {
  b.validate();
  const std::size_t u = b.universe.size();

  // Distinct blocks as sorted atom lists.
  std::vector<std::vector<std::size_t>> blocks;
  {
    std::set<std::vector<std::size_t>> seen;
    for (auto blk : b.blocks) {
      std::sort(blk.begin(), blk.end());
      if (seen.insert(blk).second) blocks.push_back(std::move(blk));
    }
  }

  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::vector<std::size_t> shared;
      std::set_intersection(blocks[i].begin(), blocks[i].end(), blocks[j].begin(), blocks[j].end(),
                            std::back_inserter(shared));
      if (shared.empty()) continue;
      const auto a = shared.front();
      const std::string bi = describe_block(b, blocks[i]);
      const std::string bj = describe_block(b, blocks[j]);
      if (blocks[i].size() == 1 || blocks[j].size() == 1) {
        throw InconsistentIdentification("atom '" + b.universe[a] + "' is the unit of one of blocks " + bi +
                                         " and " + bj + " but a proper element of the other");
      }
      auto complement = [&](const std::vector<std::size_t>& blk) {
        std::vector<std::size_t> rest;
        for (auto x : blk) {
          if (x != a) rest.push_back(x);
        }
        return describe_block(b, rest);
      };
      throw InconsistentIdentification("blocks " + bi + " and " + bj + " disagree on the complement of '" +
                                       b.universe[a] + "': " + complement(blocks[i]) + " versus " +
                                       complement(blocks[j]));
    }
  }

  std::vector<RawContext> raw;
  raw.push_back(RawContext{"bot", std::nullopt, {ElementSet(u)}});
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const auto& blk = blocks[bi];
    for_each_partition(blk.size(), [&](const std::vector<std::size_t>& rgs) {
      const std::size_t parts = *std::max_element(rgs.begin(), rgs.end()) + 1;
      if (parts < 2) return;
      RawContext c{"", bi, std::vector<ElementSet>(parts, ElementSet(u))};
      // Restricted growth labels number parts by their least atom.
      for (std::size_t k = 0; k < blk.size(); ++k) c.atom_sets[rgs[k]].set(blk[k]);
      std::vector<std::string> part_names;
      for (const auto& s : c.atom_sets) {
        std::vector<std::string> names;
        for (auto a : members(s)) names.push_back(b.universe[a]);
        part_names.push_back(join(names, ","));
      }
      c.name = join(part_names, "|");
      raw.push_back(std::move(c));
    });
  }

  auto included = [&](const RawContext& c, const RawContext& d) {
    if (!c.block) return true;
    if (c.block != d.block) return false;
    for (const auto& part : c.atom_sets) {
      ElementSet covered(u);
      for (const auto& q : d.atom_sets) {
        if (q.is_subset_of(part)) covered |= q;
      }
      if (covered != part) return false;
    }
    return true;
  };

  std::vector<std::string> names;
  for (const auto& c : raw) names.push_back(c.name);
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    for (std::size_t j = 0; j < raw.size(); ++j) {
      if (i != j && included(raw[i], raw[j])) pairs.emplace_back(i, j);
    }
  }

  ContextPoset cp;
  cp.poset_ = FinitePoset::build_indexed(names, pairs);
  std::vector<const RawContext*> by_index(raw.size());
  for (const auto& c : raw) by_index[cp.poset_.at(c.name)] = &c;

  for (const RawContext* c : by_index) {
    std::vector<std::vector<BooleanAlgebra::Label>> labels;
    if (!c->block) {
      labels.push_back({BooleanAlgebra::Label{0, "1"}});
    } else {
      for (const auto& s : c->atom_sets) {
        std::vector<BooleanAlgebra::Label> ls;
        for (auto a : members(s)) ls.push_back(BooleanAlgebra::Label{a, b.universe[a]});
        labels.push_back(std::move(ls));
      }
    }
    cp.algebras_.emplace_back(std::move(labels));
  }

  const std::size_t n = raw.size();
  cp.embeddings_.assign(n, std::vector<std::vector<Mask>>(n));
  for (Context ci = 0; ci < n; ++ci) {
    for (auto di : members(cp.poset_.up(ci))) {
      const RawContext& c = *by_index[ci];
      const RawContext& d = *by_index[di];
      auto& images = cp.embeddings_[ci][di];
      for (const auto& part : c.atom_sets) {
        Mask m = 0;
        for (std::size_t q = 0; q < d.atom_sets.size(); ++q) {
          if (!c.block || d.atom_sets[q].is_subset_of(part)) m |= Mask{1} << q;
        }
        images.push_back(m);
      }
    }
  }
  cp.block_model_ = b;
  cp.finish();
  return cp;
}

ContextPoset ContextPoset::from_embeddings(std::vector<std::string> names,
                                           std::vector<std::vector<std::string>> atom_names,
                                           const std::vector<Inclusion>& inclusions) {
  if (names.size() != atom_names.size()) throw InvalidModel("one atom list per context is required");
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& inc : inclusions) pairs.emplace_back(inc.smaller, inc.larger);
  std::map<std::string, std::vector<std::string>> atoms_by_name;
  for (std::size_t i = 0; i < names.size(); ++i) atoms_by_name[names[i]] = atom_names[i];

  ContextPoset cp;
  cp.poset_ = FinitePoset::build(std::move(names), pairs);
  const std::size_t n = cp.poset_.size();
  for (Context c = 0; c < n; ++c) {
    cp.algebras_.push_back(BooleanAlgebra::with_atom_names(atoms_by_name.at(cp.poset_.id(c))));
  }

  cp.embeddings_.assign(n, std::vector<std::vector<Mask>>(n));
  for (Context c = 0; c < n; ++c) {
    auto& id = cp.embeddings_[c][c];
    for (std::size_t a = 0; a < cp.algebras_[c].atom_count(); ++a) id.push_back(Mask{1} << a);
  }
  for (const auto& inc : inclusions) {
    const Context c = cp.poset_.at(inc.smaller);
    const Context d = cp.poset_.at(inc.larger);
    if (inc.atom_images.size() != cp.algebras_[c].atom_count()) {
      throw InvalidModel("embedding " + inc.smaller + " -> " + inc.larger + " has the wrong number of images");
    }
    cp.embeddings_[c][d] = inc.atom_images;
  }
  // Fill in composites along chains.
  for (bool changed = true; changed;) {
    changed = false;
    for (Context c = 0; c < n; ++c) {
      for (auto d : members(cp.poset_.up(c))) {
        if (!cp.embeddings_[c][d].empty()) continue;
        for (auto e : members(cp.poset_.up(c) & cp.poset_.down(d))) {
          if (e == c || e == d || cp.embeddings_[c][e].empty() || cp.embeddings_[e][d].empty()) continue;
          std::vector<Mask> images;
          for (Mask m : cp.embeddings_[c][e]) {
            Mask out = 0;
            for (std::size_t a = 0; a < 64; ++a) {
              if (m >> a & 1) out |= cp.embeddings_[e][d][a];
            }
            images.push_back(out);
          }
          cp.embeddings_[c][d] = std::move(images);
          changed = true;
          break;
        }
      }
    }
  }
  for (Context c = 0; c < n; ++c) {
    for (auto d : members(cp.poset_.up(c))) {
      if (cp.embeddings_[c][d].empty()) {
        throw InvalidModel("no embedding given for " + cp.poset_.id(c) + " -> " + cp.poset_.id(d));
      }
    }
  }
  cp.finish();
  return cp;
}

void ContextPoset::finish() {
  const std::size_t n = size();
  const ElementSet minimal = minimal_elements(poset_);
  if (minimal.count() != 1) throw InvalidModel("context poset has no bottom context");
  bottom_ = minimal.find_first();
  if (algebras_[bottom_].atom_count() != 1) throw InvalidModel("bottom context must be the two-element algebra");

  for (Context c = 0; c < n; ++c) {
    for (auto d : members(poset_.up(c))) {
      const auto& images = embeddings_[c][d];
      Mask seen = 0;
      for (Mask m : images) {
        if (m == 0 || (m & seen) != 0 || !algebras_[d].contains(m)) {
          throw InvalidModel("embedding " + name(c) + " -> " + name(d) + " is not an injective Boolean map");
        }
        seen |= m;
      }
      if (seen != algebras_[d].top()) {
        throw InvalidModel("embedding " + name(c) + " -> " + name(d) + " does not preserve the unit");
      }
    }
  }
  for (Context c = 0; c < n; ++c) {
    for (auto e : members(poset_.up(c))) {
      for (auto d : members(poset_.up(e))) {
        for (std::size_t a = 0; a < algebras_[c].atom_count(); ++a) {
          if (embed(e, d, embeddings_[c][e][a]) != embeddings_[c][d][a]) {
            throw InvalidModel("embeddings " + name(c) + " -> " + name(e) + " -> " + name(d) + " do not compose");
          }
        }
      }
    }
  }
}

Mask ContextPoset::embed(Context c, Context d, Mask m) const {
  if (!included(c, d)) throw ElementNotInContext("'" + name(c) + "' is not included in '" + name(d) + "'");
  if (!algebra(c).contains(m)) throw ElementNotInContext("element outside context '" + name(c) + "'");
  const auto& images = embeddings_[c][d];
  Mask out = 0;
  for (std::size_t a = 0; a < images.size(); ++a) {
    if (m >> a & 1) out |= images[a];
  }
  return out;
}

std::size_t ContextPoset::restrict_atom(Context d, Context c, std::size_t atom) const {
  if (!included(c, d)) throw ElementNotInContext("'" + name(c) + "' is not included in '" + name(d) + "'");
  const auto& images = embeddings_[c][d];
  for (std::size_t a = 0; a < images.size(); ++a) {
    if (images[a] >> atom & 1) return a;
  }
  throw ElementNotInContext("atom outside context '" + name(d) + "'");
}

const BlockStructure& ContextPoset::blocks() const {
  if (!block_model_) throw RequiresBlockRepresentation("context poset has no shared universe of atoms");
  return *block_model_;
}

Site gelfand_site(const BooleanAlgebra& algebra) {
  const auto elements = algebra.elements();
  std::vector<std::string> ids;
  for (Mask m : elements) ids.push_back(algebra.element_name(m));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (Mask m : elements) {
    for (std::size_t a = 0; a < algebra.atom_count(); ++a) {
      if (!(m >> a & 1)) pairs.emplace_back(m, m | Mask{1} << a);
    }
  }
  FinitePoset poset = FinitePoset::build_indexed(ids, pairs);
  std::vector<BasicCover> covers;
  for (Mask m : elements) {
    ElementSet family(poset.size());
    for (std::size_t a = 0; a < algebra.atom_count(); ++a) {
      if (m >> a & 1) family.set(poset.at(algebra.atom_name(a)));
    }
    covers.push_back(BasicCover{poset.at(ids[m]), std::move(family)});
  }
  return Site(std::move(poset), Order::inclusion, std::move(covers));
}

Presheaf spectral_presheaf(const ContextPoset& cp) {
  std::vector<std::vector<std::string>> values(cp.size());
  for (ContextPoset::Context c = 0; c < cp.size(); ++c) {
    for (std::size_t a = 0; a < cp.algebra(c).atom_count(); ++a) values[c].push_back(cp.algebra(c).atom_name(a));
  }
  return Presheaf(cp.poset(), Order::inclusion, std::move(values),
                  [&](Element from, Element to, std::size_t atom) { return cp.restrict_atom(from, to, atom); });
}

}  // namespace bohr
