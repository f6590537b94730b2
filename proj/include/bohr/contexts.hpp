#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bohr/coverage.hpp"
#include "bohr/order.hpp"
#include "bohr/presheaf.hpp"

namespace bohr {

/// Finite orthogonality hypergraph: a universe of atoms and blocks, each
/// block a partition of unity.
struct BlockStructure {
  std::vector<std::string> universe;
  std::vector<std::vector<std::size_t>> blocks;  // indices into universe

  /// Throws InvalidModel on empty blocks, out-of-range or repeated atoms,
  /// and universe atoms that no block mentions.
  void validate() const;
};

/// Element of a finite Boolean algebra, as a set of atoms.
using Mask = std::uint64_t;

/// Finite Boolean algebra 2^k with named atoms.
///
/// Each atom carries a list of labels ordered by a sort key; an element is
/// named by the merged labels of its atoms ("0" and "1" for the bounds).
/// Block-derived algebras label atoms by the universe atoms they contain,
/// which makes names comparable across contexts.
class BooleanAlgebra {
 public:
  struct Label {
    std::size_t key;
    std::string text;
  };

  static constexpr std::size_t max_atoms = 63;

  explicit BooleanAlgebra(std::vector<std::vector<Label>> atom_labels);
  /// Abstract algebra whose atoms are labelled by the given names.
  static BooleanAlgebra with_atom_names(const std::vector<std::string>& names);

  std::size_t atom_count() const noexcept { return labels_.size(); }
  Mask top() const noexcept { return atom_count() == 64 ? ~Mask{0} : (Mask{1} << atom_count()) - 1; }
  bool contains(Mask m) const noexcept { return (m & ~top()) == 0; }
  std::string element_name(Mask m) const;
  std::string atom_name(std::size_t atom) const { return element_name(Mask{1} << atom); }
  /// Every element, in increasing mask order. Guarded against huge algebras.
  std::vector<Mask> elements() const;

 private:
  std::vector<std::vector<Label>> labels_;
};

/// Finite model of the poset of commutative subalgebras: contexts ordered
/// by inclusion, each with a finite Boolean algebra and embeddings along
/// inclusions.
class ContextPoset {
 public:
  using Context = Element;

  /// Trivial context plus every coarsening of a single block.
  /// Throws InconsistentIdentification when two blocks disagree about a
  /// shared element.
  static ContextPoset from_blocks(const BlockStructure& blocks);

  struct Inclusion {
    std::string smaller;
    std::string larger;
    std::vector<Mask> atom_images;  // one image in the larger algebra per atom of the smaller
  };

  /// Context poset without a shared universe. Embeddings are given for the
  /// listed inclusions and composed along paths for the rest; functoriality
  /// and the Boolean homomorphism laws are checked.
  static ContextPoset from_embeddings(std::vector<std::string> names,
                                      std::vector<std::vector<std::string>> atom_names,
                                      const std::vector<Inclusion>& inclusions);

  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  const std::string& name(Context c) const { return poset_.id(c); }
  Context at(std::string_view name) const { return poset_.at(name); }
  const BooleanAlgebra& algebra(Context c) const { return algebras_.at(c); }
  Context bottom() const noexcept { return bottom_; }
  ElementSet maximal() const { return maximal_elements(poset_, Order::inclusion); }

  bool included(Context c, Context d) const { return poset_.leq(c, d); }
  /// Image of `m` under the embedding B_c -> B_d; requires c ⊆ d.
  Mask embed(Context c, Context d, Mask m) const;
  /// The atom of B_c lying above atom `atom` of B_d; requires c ⊆ d.
  std::size_t restrict_atom(Context d, Context c, std::size_t atom) const;
  std::string element_name(Context c, Mask m) const { return algebra(c).element_name(m); }

  /// Block-derived posets name elements by universe atom sets.
  bool has_universe() const noexcept { return block_model_.has_value(); }
  const BlockStructure& blocks() const;

 private:
  ContextPoset() = default;
  void finish();

  FinitePoset poset_ = FinitePoset::build({}, {});
  std::vector<BooleanAlgebra> algebras_;
  // embeddings_[c][d][atom of c] for c ⊆ d; empty otherwise.
  std::vector<std::vector<std::vector<Mask>>> embeddings_;
  Context bottom_ = 0;
  std::optional<BlockStructure> block_model_;
};

/// Gelfand site of a finite Boolean algebra: u ◁ {atoms below u} for every
/// element u, which includes 0 ◁ ∅. Elements are named by element_name().
Site gelfand_site(const BooleanAlgebra& algebra);

/// Spectral presheaf: atoms of each context, restricted to smaller contexts.
/// The presheaf is read in inclusion order.
Presheaf spectral_presheaf(const ContextPoset& cp);

}  // namespace bohr
