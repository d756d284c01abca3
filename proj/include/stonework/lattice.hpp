#pragma once

/// @file lattice.hpp
/// Finite bounded lattices with explicit operation tables.
///
/// Elements are integer indices into a name table.  The partial order, meet
/// and join are stored as dense n-by-n tables, which keeps every query O(1)
/// and every verification loop simple.  Lattices are immutable once built:
/// all constructors validate their input and the operation tables are derived
/// from the order relation, never accepted from outside unchecked.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "stonework/errors.hpp"

namespace stonework {

/// Largest carrier for which dense n-by-n tables are materialized.
inline constexpr int kMaxTableElements = 2048;

/// Largest carrier accepted for enumerated product constructions.
inline constexpr long long kMaxProductElements = 1'000'000;

class FiniteLattice {
 public:
  /// Builds a lattice from validated tables.  Intended for constructions
  /// (products, interval powers, rough-set algebras) that can fill the
  /// tables directly; `build_lattice` is the validating front door for
  /// arbitrary cover input.
  static FiniteLattice from_tables(std::vector<std::string> names,
                                   std::vector<std::uint8_t> leq,
                                   std::vector<int> meet,
                                   std::vector<int> join,
                                   int bottom, int top);

  /// Derives meet/join tables and bounds from a reflexive-transitive order
  /// matrix.  Throws Unbounded or NotALattice when the order does not carry
  /// a bounded lattice structure.
  static FiniteLattice from_order(std::vector<std::string> names,
                                  std::vector<std::uint8_t> leq);

  int size() const { return n_; }
  const std::string& name(int a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Index of the element with the given name; throws InvalidInput when absent.
  int index_of(const std::string& name) const;

  bool leq(int a, int b) const { return leq_[a * n_ + b] != 0; }
  bool lt(int a, int b) const { return a != b && leq(a, b); }
  int meet(int a, int b) const { return meet_[a * n_ + b]; }
  int join(int a, int b) const { return join_[a * n_ + b]; }
  int bottom() const { return bottom_; }
  int top() const { return top_; }

  /// Join of an arbitrary set; the empty join is the bottom element.
  int join_all(std::span<const int> xs) const;
  /// Meet of an arbitrary set; the empty meet is the top element.
  int meet_all(std::span<const int> xs) const;

  /// Cover pairs (a, b) with a covered by b, in index order.
  std::vector<std::pair<int, int>> covers() const;

  bool same_order_as(const FiniteLattice& other) const;

  /// An empty lattice; only meaningful as a placeholder before assignment.
  FiniteLattice() = default;

 private:
  int n_ = 0;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> leq_;
  std::vector<int> meet_;
  std::vector<int> join_;
  int bottom_ = 0;
  int top_ = 0;
};

/// Builds a lattice from element names and cover pairs (lower, upper).
/// Throws CyclicCovers, Unbounded or NotALattice on bad input.
FiniteLattice build_lattice(const std::vector<std::string>& names,
                            const std::vector<std::pair<std::string, std::string>>& covers);

bool is_bounded_distributive(const FiniteLattice& L);

/// Elements a with a != join of everything strictly below a.  The bottom
/// element never qualifies (the empty join is bottom itself).
std::vector<int> join_irreducibles(const FiniteLattice& L);

/// Join-irreducible elements below or equal to x, ascending.
std::vector<int> irreducibles_below(const FiniteLattice& L, int x);

/// True when every element is the join of the members of S below it.
bool is_join_dense(const FiniteLattice& L, std::span<const int> S);

/// A (possibly partial) map between two lattices.  assignment[a] is the image
/// of source element a, or -1 where the map is undefined.
struct OrderMap {
  FiniteLattice source;
  FiniteLattice target;
  std::vector<int> assignment;

  bool total() const;
  int apply(int a) const;
};

/// Extends an order isomorphism between the join-irreducibles of two bounded
/// distributive lattices to a full isomorphism via x -> join of the images of
/// the irreducibles below x.  Throws NotAnOrderIso when phi is not an
/// isomorphism between the irreducible posets, ExtensionNotIso when the
/// preconditions fail or the extension does not verify.
OrderMap extend_order_iso(const OrderMap& phi);

/// Composition: apply `first`, then `then`.  The lattices must agree in the
/// middle (same names and order).
OrderMap compose(const OrderMap& first, const OrderMap& then);

/// The I-fold direct power of a lattice, with componentwise order.  Element
/// indices encode tuples in mixed radix, first coordinate most significant,
/// so enumeration order is lexicographic over component indices.
struct ProductPower {
  FiniteLattice lattice;
  int base_size = 0;
  int exponent = 0;
  int base_bottom = 0;

  /// The tuple that is x at coordinate i and bottom elsewhere.
  int f(int i, int x) const;
  std::vector<int> tuple_of(int index) const;
  int index_of(std::span<const int> tuple) const;
};

ProductPower product_power(const FiniteLattice& L, int exponent);

}  // namespace stonework
