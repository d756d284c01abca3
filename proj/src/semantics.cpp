#include "stonework/semantics.hpp"

#include <algorithm>
#include <set>

namespace stonework {

namespace {

int eval_slots(const Formula& f, const AlgebraStructure& alg,
               const std::map<std::string, int>& slot_of, const std::vector<int>& slots) {
  switch (f.kind()) {
    case Kind::Var: {
      auto it = slot_of.find(f.var_name());
      if (it == slot_of.end()) throw UnboundVariable("variable '" + f.var_name() + "' is unbound");
      return slots[it->second];
    }
    case Kind::Top:
      return alg.lattice.top();
    case Kind::Bot:
      return alg.lattice.bottom();
    case Kind::PseudoNeg:
      return alg.pseudo(eval_slots(f.child(), alg, slot_of, slots));
    case Kind::DualNeg:
      return alg.dual(eval_slots(f.child(), alg, slot_of, slots));
    case Kind::And:
      return alg.lattice.meet(eval_slots(f.left(), alg, slot_of, slots),
                              eval_slots(f.right(), alg, slot_of, slots));
    default:
      return alg.lattice.join(eval_slots(f.left(), alg, slot_of, slots),
                              eval_slots(f.right(), alg, slot_of, slots));
  }
}

std::vector<std::string> sequent_variables(const Sequent& s) {
  std::set<std::string> vars;
  for (const auto& v : s.lhs.variables()) vars.insert(v);
  for (const auto& v : s.rhs.variables()) vars.insert(v);
  return {vars.begin(), vars.end()};
}

void check_valuation_budget(long long domain, std::size_t vars, bool force) {
  if (force) return;
  long long count = 1;
  for (std::size_t i = 0; i < vars; ++i) {
    count *= domain;
    if (count > kMaxValuationCount)
      throw TooLarge("valuation scan exceeds " + std::to_string(kMaxValuationCount) +
                     " assignments; pass force to run it anyway");
  }
}

// Scans assignments with the first variable most significant, values in
// element-index order, and returns the first one failing `holds`.
template <typename Holds>
Verdict scan_valuations(const Sequent& s, const AlgebraStructure& alg, bool force, Holds holds) {
  const auto vars = sequent_variables(s);
  check_valuation_budget(alg.lattice.size(), vars.size(), force);

  std::map<std::string, int> slot_of;
  for (std::size_t i = 0; i < vars.size(); ++i) slot_of.emplace(vars[i], static_cast<int>(i));

  std::vector<int> slots(vars.size(), 0);
  while (true) {
    const int l = eval_slots(s.lhs, alg, slot_of, slots);
    const int r = eval_slots(s.rhs, alg, slot_of, slots);
    if (!holds(l, r)) {
      Verdict v;
      v.valid = false;
      for (std::size_t i = 0; i < vars.size(); ++i) v.countermodel[vars[i]] = slots[i];
      return v;
    }
    int i = static_cast<int>(slots.size()) - 1;
    while (i >= 0 && slots[i] == alg.lattice.size() - 1) slots[i--] = 0;
    if (i < 0) break;
    ++slots[i];
  }
  return Verdict{};
}

}  // namespace

int evaluate(const Formula& f, const AlgebraStructure& alg, const Assignment& val) {
  std::map<std::string, int> slot_of;
  std::vector<int> slots;
  for (const auto& [name, value] : val) {
    if (value < 0 || value >= alg.lattice.size())
      throw InvalidInput("assignment for '" + name + "' is out of range");
    slot_of.emplace(name, static_cast<int>(slots.size()));
    slots.push_back(value);
  }
  return eval_slots(f, alg, slot_of, slots);
}

Verdict order_valid(const Sequent& s, const AlgebraStructure& alg, bool force) {
  return scan_valuations(s, alg, force,
                         [&](int l, int r) { return alg.lattice.leq(l, r); });
}

GeneratorKind generator_kind(const AlgebraStructure& alg) {
  const FiniteLattice& L = alg.lattice;
  for (int a = 0; a < L.size(); ++a)
    for (int b = 0; b < L.size(); ++b)
      if (!L.leq(a, b) && !L.leq(b, a))
        throw UnsupportedAlgebra("consequence relations are defined over chains only");
  if (L.size() == 3 && alg.has_pseudo() && !alg.has_dual()) return GeneratorKind::ThreePseudo;
  if (L.size() == 3 && !alg.has_pseudo() && alg.has_dual()) return GeneratorKind::ThreeDual;
  if (L.size() == 4 && alg.has_pseudo() && alg.has_dual()) return GeneratorKind::FourChain;
  throw UnsupportedAlgebra(
      "expected the three-element chain with one negation or the four-element chain with both");
}

Verdict preserve_valid(const Sequent& s, const AlgebraStructure& alg, PreserveMode mode,
                       bool force) {
  generator_kind(alg);
  const int top = alg.lattice.top();
  const int bottom = alg.lattice.bottom();
  return scan_valuations(s, alg, force, [&](int l, int r) {
    const bool truth = (l != top) || (r == top);
    const bool falsity = (r != bottom) || (l == bottom);
    switch (mode) {
      case PreserveMode::Truth:
        return truth;
      case PreserveMode::Falsity:
        return falsity;
      default:
        return truth && falsity;
    }
  });
}

Assignment double_neg_transform(const AlgebraStructure& alg, const Assignment& val,
                                RsVariant which) {
  Assignment out;
  for (const auto& [name, value] : val) {
    if (value < 0 || value >= alg.lattice.size())
      throw InvalidInput("assignment for '" + name + "' is out of range");
    out[name] = which == RsVariant::Pseudo ? alg.pseudo(alg.pseudo(value))
                                           : alg.dual(alg.dual(value));
  }
  return out;
}

int point_band(const AlgebraStructure& alg, int element, int point) {
  if (!alg.interval_meta) throw WrongTarget("band decomposition needs an interval power");
  const auto& meta = *alg.interval_meta;
  if (element < 0 || element >= alg.lattice.size())
    throw InvalidInput("element index out of range");
  if (point < 0 || point >= meta.atoms)
    throw PointNotInUniverse("point " + std::to_string(point) + " is not an atom index");

  const std::uint32_t bit = std::uint32_t{1} << point;
  int band = 0;
  for (int c = meta.arity - 1; c >= 0; --c) {
    if (meta.tuples[element][c] & bit)
      ++band;
    else
      break;
  }
  return band;
}

PointwiseValuation pointwise_decompose(const AlgebraStructure& alg, const Assignment& val,
                                       int point) {
  if (!alg.interval_meta)
    throw WrongTarget("pointwise decomposition needs an interval power");
  PointwiseValuation out{alg.interval_meta->arity == 2 ? three_chain() : four_chain(), {}};
  for (const auto& [name, element] : val) out.assignment[name] = point_band(alg, element, point);
  return out;
}

namespace {

int rough_index(const AlgebraStructure& alg, const RoughPair& p, const std::string& what) {
  const auto& pairs = alg.rough_meta->pairs;
  auto it = std::lower_bound(pairs.begin(), pairs.end(), p);
  if (it == pairs.end() || !(*it == p))
    throw InvalidInput(what + " is not a rough pair of this algebra");
  return static_cast<int>(it - pairs.begin());
}

PointSet witness_subset(const ApproximationSpace& space, const RoughPair& p) {
  PointSet w = p.lower;
  for (PointSet block : space.blocks())
    if ((block & p.lower) == 0 && (block & ~p.upper) == 0) w |= block & (~block + 1);
  return w;
}

}  // namespace

RoughStatus rs_pointwise(const Formula& f, const AlgebraStructure& alg,
                         const std::map<std::string, RoughPair>& val, int point) {
  if (!alg.rough_meta) throw WrongTarget("pointwise status needs a rough-set algebra");
  const auto& meta = *alg.rough_meta;
  if (point < 0 || point >= meta.space.size())
    throw PointNotInUniverse("point " + std::to_string(point) + " is outside the universe");

  Assignment indices;
  for (const auto& [name, pair] : val)
    indices[name] = rough_index(alg, pair, "value of '" + name + "'");
  const RoughPair result = meta.pairs[evaluate(f, alg, indices)];

  const PointSet bit = PointSet{1} << point;
  if (result.lower & bit) return RoughStatus::Certain;
  if (result.upper & bit) return RoughStatus::Boundary;
  return RoughStatus::Impossible;
}

RsVerdict rs_valid(const Sequent& s, const ApproximationSpace& space, RsVariant variant,
                   bool force) {
  const AlgebraStructure alg = rs_algebra(space, variant);
  const auto& pairs = alg.rough_meta->pairs;

  // Pointwise reading: lower containment for Pseudo, upper for Dual.
  Verdict v = scan_valuations(s, alg, force, [&](int l, int r) {
    if (variant == RsVariant::Pseudo) return (pairs[l].lower & ~pairs[r].lower) == 0;
    return (pairs[l].upper & ~pairs[r].upper) == 0;
  });

  RsVerdict out;
  out.valid = v.valid;
  for (const auto& [var, index] : v.countermodel) {
    const RoughPair& pair = pairs[index];
    const PointSet witness = witness_subset(space, pair);
    if (!(approximate(space, witness) == pair))
      throw Error("witness subset does not realize its rough pair");
    out.countermodel[var] = witness;
  }
  return out;
}

}  // namespace stonework
