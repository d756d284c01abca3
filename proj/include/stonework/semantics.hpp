#pragma once

#include <map>
#include <string>
#include <vector>

#include "stonework/algebra.hpp"
#include "stonework/formula.hpp"

namespace stonework {

// Valuations are checked exhaustively; refuse jobs above this many valuations
// unless the caller forces them through.
constexpr long long kMaxValuationCount = 1'000'000;

// Variable assignment by element index.
using Assignment = std::map<std::string, int>;

// Evaluates a formula in an algebra. Throws UnboundVariable for a variable
// missing from the assignment and MissingConnective when the formula uses a
// negation the algebra does not carry.
int evaluate(const Formula& f, const AlgebraStructure& alg, const Assignment& val);

struct Verdict {
  bool valid = true;
  Assignment countermodel;  // first failing assignment, empty when valid
};

// A sequent holds under the order reading when every valuation sends the left
// side below or equal to the right side. Valuations are scanned with the
// variables in sorted order, earlier variables most significant, so the
// reported countermodel is the lexicographically least one.
Verdict order_valid(const Sequent& s, const AlgebraStructure& alg, bool force = false);

// Alternative consequence readings over the small chain algebras: Truth keeps
// the top value from left to right, Falsity propagates the bottom value from
// right to left, Both requires both directions.
enum class PreserveMode { Truth, Falsity, Both };
Verdict preserve_valid(const Sequent& s, const AlgebraStructure& alg, PreserveMode mode,
                       bool force = false);

// Recognizes the three chain algebras the consequence relations are defined
// over; throws UnsupportedAlgebra for anything else.
GeneratorKind generator_kind(const AlgebraStructure& alg);

// v* with v*(p) = ~~v(p) (Pseudo) or !!v(p) (Dual). The interesting fact,
// covered by tests rather than assumed here, is that evaluating any formula
// of the matching signature under v* equals the double negation of its value
// under v.
Assignment double_neg_transform(const AlgebraStructure& alg, const Assignment& val,
                                RsVariant which);

// The band of `point` in an interval-power element: how many of the
// element's components contain the point, counting from the last component.
// This is an element index of the three-element chain for pairs and of the
// four-element chain for triples.
int point_band(const AlgebraStructure& alg, int element, int point);

// Restriction of an interval-power valuation to a single point: every
// variable is sent to its band at that point. The result is a valuation into
// the matching chain (with both negation tables), and evaluation commutes
// with the restriction, which is the tested decomposition property.
struct PointwiseValuation {
  AlgebraStructure chain;  // three- or four-element chain
  Assignment assignment;
};
PointwiseValuation pointwise_decompose(const AlgebraStructure& alg, const Assignment& val,
                                       int point);

// Status of one point of the universe under a rough valuation of a formula.
enum class RoughStatus { Certain, Boundary, Impossible };

// Evaluates a formula in a rough-set algebra and reports whether the given
// point certainly satisfies the result (in its lower approximation), cannot
// satisfy it (outside the upper), or sits in the boundary.
RoughStatus rs_pointwise(const Formula& f, const AlgebraStructure& alg,
                         const std::map<std::string, RoughPair>& val, int point);

struct RsVerdict {
  bool valid = true;
  std::map<std::string, PointSet> countermodel;  // witness subsets of the universe
};

// Validity over all rough valuations of an approximation space, read
// pointwise: the Pseudo variant demands that every certain point of the left
// side stays certain on the right (lower containment); the Dual variant
// demands that impossibility propagates right to left (upper containment).
// Every rough pair arises as the approximation of some subset, so a
// countermodel is reported as one concrete subset per variable.
RsVerdict rs_valid(const Sequent& s, const ApproximationSpace& space, RsVariant variant,
                   bool force = false);

}  // namespace stonework
