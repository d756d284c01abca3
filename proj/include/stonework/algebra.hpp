#pragma once

/// @file algebra.hpp
/// Distributive lattices enriched with pseudo-complement operations.
///
/// An AlgebraStructure is a finite bounded lattice together with up to two
/// unary tables: `pseudo_neg` sends a to the largest c with a meet c = 0,
/// `dual_neg` to the least c with a join c = 1.  Both tables are always
/// derived from the order; constructions that also know a closed formula for
/// them (interval powers, rough-set algebras) verify the formula against the
/// order-derived table instead of trusting it.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stonework/errors.hpp"
#include "stonework/lattice.hpp"
#include "stonework/roughset.hpp"

namespace stonework {

inline constexpr int kMaxBooleanAtoms = 20;

/// The Boolean algebra of subsets of a finite atom set, carried as bitmasks.
/// Elements are masks 0 .. 2^k - 1; operations never materialize tables.
class BooleanAlgebra {
 public:
  explicit BooleanAlgebra(int atoms);

  int atoms() const { return atoms_; }
  std::uint32_t size() const { return std::uint32_t{1} << atoms_; }
  std::uint32_t atom(int i) const { return std::uint32_t{1} << i; }
  std::uint32_t full() const { return size() - 1; }
  std::uint32_t complement(std::uint32_t a) const { return ~a & full(); }
  bool leq(std::uint32_t a, std::uint32_t b) const { return (a & ~b) == 0; }

  std::string name(std::uint32_t mask) const;

  /// Materialized lattice view, elements in mask order.
  FiniteLattice lattice() const;

 private:
  int atoms_;
};

struct IntervalPowerMeta {
  int atoms = 0;
  int arity = 0;
  /// Element index -> component bitmasks (unused trailing entries are 0).
  std::vector<std::array<std::uint32_t, 3>> tuples;
};

struct RoughSetMeta {
  ApproximationSpace space;
  std::vector<RoughPair> pairs;
};

struct AlgebraStructure {
  FiniteLattice lattice;
  std::optional<std::vector<int>> pseudo_neg;
  std::optional<std::vector<int>> dual_neg;
  bool is_stone = false;
  bool is_dual_stone = false;
  bool is_double_stone = false;

  std::optional<IntervalPowerMeta> interval_meta;
  std::optional<RoughSetMeta> rough_meta;

  bool has_pseudo() const { return pseudo_neg.has_value(); }
  bool has_dual() const { return dual_neg.has_value(); }
  int pseudo(int a) const;
  int dual(int a) const;
};

/// The subset algebra on k atoms as a classified structure (both negations
/// are Boolean complement).
AlgebraStructure boolean_algebra(int k);

/// Largest c with a meet c = bottom; throws NoPseudoComplement when the
/// annihilators of a have no greatest member.
int pseudo_complement(const FiniteLattice& L, int a);

/// Least c with a join c = top; throws NoDualPseudoComplement.
int dual_pseudo_complement(const FiniteLattice& L, int a);

/// Computes both negation tables where total and the three classification
/// flags.  A lattice that fails distributivity or has a partial table simply
/// gets the corresponding flags cleared; classification never throws.
AlgebraStructure classify(const FiniteLattice& L);

/// Keeps or drops the negation tables, clearing flags that no longer apply.
AlgebraStructure restrict_signature(AlgebraStructure a, bool keep_pseudo, bool keep_dual);

// Named chain algebras.  Element order is bottom to top.
AlgebraStructure one_element();           // {a}
AlgebraStructure two_chain();             // {0,1}, both negations
AlgebraStructure three_chain();           // {0,a,1}, both negations
AlgebraStructure three_pseudo();          // {0,a,1}, pseudo-complement only
AlgebraStructure three_dual();            // {0,a,1}, dual negation only
AlgebraStructure four_chain();            // {f,u2,u1,t}, both negations
AlgebraStructure chain_algebra(int n);    // generic chain, classified

/// Monotone n-tuples over the subset algebra on k atoms, ordered
/// lexicographically by component bitmask.  n must be 2 or 3.  Attaches both
/// negation tables; their closed forms (componentwise complement of the last
/// respectively first coordinate) are verified against the order.
AlgebraStructure interval_power(const BooleanAlgebra& B, int arity);

/// Direct power with componentwise tables lifted from the base and verified
/// against the order-derived ones.
AlgebraStructure power_algebra(const AlgebraStructure& base, int exponent);

/// All maps preserving meet, join, bounds and every negation present in the
/// (identical) signatures of A and Bt, in lexicographic order of their
/// assignment vectors.  Throws SignatureMismatch when the signatures differ.
std::vector<std::vector<int>> enumerate_homomorphisms(const AlgebraStructure& A,
                                                      const AlgebraStructure& Bt);

enum class GeneratorKind { ThreePseudo, ThreeDual, FourChain };

struct SubdirectEmbedding {
  OrderMap map;                          // A -> generator^I
  int index_count = 0;                   // I
  GeneratorKind generator = GeneratorKind::FourChain;
  std::vector<std::vector<int>> homs;    // the chosen separating family
};

/// Embeds a classified algebra into a power of its generating chain: 3 with
/// pseudo-complement for Stone signature, 3 with dual negation for dual Stone,
/// the 4-chain for double Stone.  The index set is the lexicographically
/// least minimum-size point-separating family of homomorphisms into the
/// generator.  Throws NotClassified when the flags do not support the
/// signature, EmbeddingFailed when no separating family exists.
SubdirectEmbedding subdirect_embedding(const AlgebraStructure& A);

/// The canonical isomorphism from the I-fold power of the 3-chain (arity 2)
/// or 4-chain (arity 3) onto the matching interval power of the subset
/// algebra on I atoms.  Built by extending the standard bijection between
/// join-irreducibles; commutes with both negations (verified).
OrderMap canonical_iso(int index_count, int arity);

/// Composition of subdirect_embedding and canonical_iso: an embedding of A
/// into interval_power(boolean_algebra(I), arity).
OrderMap subdirect_interval_embedding(const AlgebraStructure& A);

// ---- rough-set algebras ----

enum class RsVariant { Pseudo, Dual };

/// The distributive lattice of rough pairs under componentwise order, with
/// the negation selected by `variant`: (D1,D2) -> (~D2,~D2) for Pseudo,
/// (D1,D2) -> (~D1,~D1) for Dual (complements in the universe).  The closed
/// form is verified against the order-derived table; classification flags are
/// computed from the order.
AlgebraStructure rs_algebra(const ApproximationSpace& space, RsVariant variant);

struct RepresentationSpace {
  ApproximationSpace space;
  /// Isomorphism from interval_power(boolean_algebra(n), 2) onto the rough
  /// pair lattice of `space`; commutes with both negations.
  OrderMap iso;
};

/// Doubles every point of the given base set (u and u') and partitions the
/// result into two-point blocks, so that rough pairs over it realize every
/// monotone pair of subsets of the base set.
RepresentationSpace representation_space(const std::vector<std::string>& base_points);

}  // namespace stonework
