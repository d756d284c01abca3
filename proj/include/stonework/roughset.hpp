#pragma once

/// @file roughset.hpp
/// Approximation spaces and rough sets over finite universes.
///
/// A universe of up to 20 named points is carried as a bitmask, one bit per
/// point in universe order.  An approximation space partitions the universe
/// into equivalence blocks; lower and upper approximations, and the set of
/// rough pairs they generate, are computed blockwise.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stonework/errors.hpp"

namespace stonework {

inline constexpr int kMaxUniverse = 20;
inline constexpr int kMaxGeneralizedBlocks = 16;

using PointSet = std::uint32_t;

class ApproximationSpace {
 public:
  /// Builds a space from point names and a partition into blocks (given by
  /// point names).  Blocks must be non-empty, disjoint and cover the universe.
  ApproximationSpace(std::vector<std::string> universe,
                     const std::vector<std::vector<std::string>>& blocks);

  /// Builds a space from an equivalence relation given as related pairs; the
  /// partition is the reflexive-symmetric-transitive closure of the pairs.
  static ApproximationSpace from_pairs(std::vector<std::string> universe,
                                       const std::vector<std::pair<std::string, std::string>>& pairs);

  int size() const { return static_cast<int>(universe_.size()); }
  const std::vector<std::string>& universe() const { return universe_; }
  const std::vector<PointSet>& blocks() const { return blocks_; }
  PointSet full() const { return size() == 32 ? ~PointSet{0} : (PointSet{1} << size()) - 1; }

  int point_index(const std::string& name) const;
  /// The block containing the given point.
  PointSet block_of(int point) const;

  std::string set_name(PointSet s) const;

 private:
  std::vector<std::string> universe_;
  std::vector<PointSet> blocks_;
};

/// A lower/upper approximation pair.
struct RoughPair {
  PointSet lower = 0;
  PointSet upper = 0;

  friend auto operator<=>(const RoughPair&, const RoughPair&) = default;
};

/// Lower and upper approximations of a subset of the universe.  Throws
/// NotASubset when `subset` has bits outside the universe.
RoughPair approximate(const ApproximationSpace& space, PointSet subset);

/// All distinct approximation pairs, ordered by (lower, upper) bitmask.
std::vector<RoughPair> rough_sets(const ApproximationSpace& space);

/// The same set computed from its characterization: pairs of definable sets
/// D1 subset-of D2 where D2 minus D1 contains no singleton block.
std::vector<RoughPair> rough_sets_characterized(const ApproximationSpace& space);

/// All pairs of definable sets D1 subset-of D2, ordered by (D1, D2).
std::vector<RoughPair> generalized_rough_sets(const ApproximationSpace& space);

std::string rough_pair_name(const ApproximationSpace& space, const RoughPair& p);

}  // namespace stonework
