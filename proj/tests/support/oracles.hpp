#pragma once

// Definitional reference implementations the test suite cross-checks the
// library against, plus the value-table machinery the consequence-relation
// tests are built on. Everything here is deliberately brute force.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stonework/algebra.hpp"
#include "stonework/formula.hpp"
#include "stonework/roughset.hpp"
#include "stonework/semantics.hpp"

namespace oracle {

// First defect of the lattice's stored tables, or nullopt when leq is a
// bounded partial order and meet/join are its greatest lower / least upper
// bounds. O(n^3), fine for every carrier the tests use.
inline std::optional<std::string> lattice_defect(const stonework::FiniteLattice& L) {
  const int n = L.size();
  for (int a = 0; a < n; ++a) {
    if (!L.leq(a, a)) return "leq not reflexive at " + L.name(a);
    if (!L.leq(L.bottom(), a)) return "bottom not below " + L.name(a);
    if (!L.leq(a, L.top())) return "top not above " + L.name(a);
    for (int b = 0; b < n; ++b) {
      if (a != b && L.leq(a, b) && L.leq(b, a))
        return "leq not antisymmetric on " + L.name(a) + ", " + L.name(b);
      for (int c = 0; c < n; ++c)
        if (L.leq(a, b) && L.leq(b, c) && !L.leq(a, c))
          return "leq not transitive through " + L.name(b);
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int m = L.meet(a, b);
      const int j = L.join(a, b);
      if (!L.leq(m, a) || !L.leq(m, b)) return "meet of " + L.name(a) + ", " + L.name(b);
      if (!L.leq(a, j) || !L.leq(b, j)) return "join of " + L.name(a) + ", " + L.name(b);
      for (int c = 0; c < n; ++c) {
        if (L.leq(c, a) && L.leq(c, b) && !L.leq(c, m))
          return "meet of " + L.name(a) + ", " + L.name(b) + " not greatest";
        if (L.leq(a, c) && L.leq(b, c) && !L.leq(j, c))
          return "join of " + L.name(a) + ", " + L.name(b) + " not least";
      }
    }
  return std::nullopt;
}

// x is join-irreducible iff x != bottom and x = a v b forces x = a or x = b.
inline std::vector<int> definitional_join_irreducibles(const stonework::FiniteLattice& L) {
  const int n = L.size();
  std::vector<int> out;
  for (int x = 0; x < n; ++x) {
    if (x == L.bottom()) continue;
    bool irreducible = true;
    for (int a = 0; a < n && irreducible; ++a)
      for (int b = 0; b < n; ++b)
        if (L.join(a, b) == x && a != x && b != x) {
          irreducible = false;
          break;
        }
    if (irreducible) out.push_back(x);
  }
  return out;
}

// Distinct approximation pairs over all 2^|U| subsets.
inline std::vector<stonework::RoughPair> brute_rough_pairs(
    const stonework::ApproximationSpace& space) {
  std::vector<stonework::RoughPair> out;
  const stonework::PointSet full = space.full();
  for (stonework::PointSet s = 0;; ++s) {
    out.push_back(stonework::approximate(space, s));
    if (s == full) break;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// Every assignment of the (sorted) variables into an algebra of the given
// size, ordered with the first variable most significant. Matches the scan
// order the library uses for countermodels.
inline std::vector<stonework::Assignment> all_assignments(std::vector<std::string> vars,
                                                          int size) {
  std::sort(vars.begin(), vars.end());
  long long count = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) count *= size;
  std::vector<stonework::Assignment> out;
  out.reserve(static_cast<std::size_t>(count));
  for (long long idx = 0; idx < count; ++idx) {
    stonework::Assignment a;
    long long rest = idx;
    for (int i = static_cast<int>(vars.size()) - 1; i >= 0; --i) {
      a[vars[i]] = static_cast<int>(rest % size);
      rest /= size;
    }
    out.push_back(std::move(a));
  }
  return out;
}

inline std::vector<int> value_table(const stonework::Formula& f,
                                    const stonework::AlgebraStructure& alg,
                                    const std::vector<stonework::Assignment>& assignments) {
  std::vector<int> t;
  t.reserve(assignments.size());
  for (const auto& a : assignments) t.push_back(stonework::evaluate(f, alg, a));
  return t;
}

// Formulas of depth <= d over the given variables, one representative per
// distinct value table in the algebra. Two formulas with the same table are
// interchangeable in every consequence relation the tests consider, so
// quantifying over representatives is exhaustive over all formulas of that
// depth. Representatives are first-found: each one's own depth stays within
// the round that discovered its table.
struct ClassSet {
  std::vector<stonework::Formula> reps;
  std::vector<std::vector<int>> tables;  // parallel to reps
  std::vector<stonework::Assignment> assignments;
};

inline ClassSet semantic_classes(const stonework::AlgebraStructure& alg,
                                 const std::vector<std::string>& vars, int depth) {
  namespace sw = stonework;
  ClassSet out;
  out.assignments = all_assignments(vars, alg.lattice.size());
  const std::size_t rows = out.assignments.size();

  std::map<std::vector<int>, int> seen;
  auto add = [&](sw::Formula f, std::vector<int> table) {
    if (seen.emplace(table, static_cast<int>(out.reps.size())).second) {
      out.reps.push_back(std::move(f));
      out.tables.push_back(std::move(table));
    }
  };

  add(sw::Formula::top(), std::vector<int>(rows, alg.lattice.top()));
  add(sw::Formula::bot(), std::vector<int>(rows, alg.lattice.bottom()));
  for (const auto& v : vars) {
    std::vector<int> t(rows);
    for (std::size_t r = 0; r < rows; ++r) t[r] = out.assignments[r].at(v);
    add(sw::Formula::var(v), std::move(t));
  }

  for (int d = 1; d <= depth; ++d) {
    const std::size_t snapshot = out.reps.size();
    for (std::size_t i = 0; i < snapshot; ++i) {
      if (alg.has_pseudo()) {
        std::vector<int> t(rows);
        for (std::size_t r = 0; r < rows; ++r) t[r] = alg.pseudo(out.tables[i][r]);
        add(sw::Formula::pseudo_neg(out.reps[i]), std::move(t));
      }
      if (alg.has_dual()) {
        std::vector<int> t(rows);
        for (std::size_t r = 0; r < rows; ++r) t[r] = alg.dual(out.tables[i][r]);
        add(sw::Formula::dual_neg(out.reps[i]), std::move(t));
      }
    }
    for (std::size_t i = 0; i < snapshot; ++i)
      for (std::size_t j = 0; j < snapshot; ++j) {
        std::vector<int> m(rows), jn(rows);
        for (std::size_t r = 0; r < rows; ++r) {
          m[r] = alg.lattice.meet(out.tables[i][r], out.tables[j][r]);
          jn[r] = alg.lattice.join(out.tables[i][r], out.tables[j][r]);
        }
        add(sw::Formula::conj(out.reps[i], out.reps[j]), std::move(m));
        add(sw::Formula::disj(out.reps[i], out.reps[j]), std::move(jn));
      }
  }
  return out;
}

// Validity readings of a sequent class, decided on value tables.
inline bool table_order_valid(const stonework::FiniteLattice& L, const std::vector<int>& lhs,
                              const std::vector<int>& rhs) {
  for (std::size_t r = 0; r < lhs.size(); ++r)
    if (!L.leq(lhs[r], rhs[r])) return false;
  return true;
}

inline bool table_truth_valid(const stonework::FiniteLattice& L, const std::vector<int>& lhs,
                              const std::vector<int>& rhs) {
  for (std::size_t r = 0; r < lhs.size(); ++r)
    if (lhs[r] == L.top() && rhs[r] != L.top()) return false;
  return true;
}

inline bool table_falsity_valid(const stonework::FiniteLattice& L, const std::vector<int>& lhs,
                                const std::vector<int>& rhs) {
  for (std::size_t r = 0; r < lhs.size(); ++r)
    if (rhs[r] == L.bottom() && lhs[r] != L.bottom()) return false;
  return true;
}

}  // namespace oracle
