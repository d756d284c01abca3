#include "stonework/algebra.hpp"

#include <algorithm>
#include <map>

namespace stonework {

namespace {

constexpr const char* kAtomLetters = "xyzuvw";

std::optional<std::vector<int>> try_pseudo_table(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<int> table(n);
  std::vector<int> annihilators;
  for (int a = 0; a < n; ++a) {
    annihilators.clear();
    for (int c = 0; c < n; ++c)
      if (L.meet(a, c) == L.bottom()) annihilators.push_back(c);
    int best = -1;
    for (int c : annihilators) {
      bool greatest = true;
      for (int d : annihilators) {
        if (!L.leq(d, c)) {
          greatest = false;
          break;
        }
      }
      if (greatest) {
        best = c;
        break;
      }
    }
    if (best < 0) return std::nullopt;
    table[a] = best;
  }
  return table;
}

std::optional<std::vector<int>> try_dual_table(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<int> table(n);
  std::vector<int> candidates;
  for (int a = 0; a < n; ++a) {
    candidates.clear();
    for (int c = 0; c < n; ++c)
      if (L.join(a, c) == L.top()) candidates.push_back(c);
    int best = -1;
    for (int c : candidates) {
      bool least = true;
      for (int d : candidates) {
        if (!L.leq(c, d)) {
          least = false;
          break;
        }
      }
      if (least) {
        best = c;
        break;
      }
    }
    if (best < 0) return std::nullopt;
    table[a] = best;
  }
  return table;
}

std::vector<std::string> chain_names(int n) {
  if (n == 1) return {"a"};
  if (n == 2) return {"0", "1"};
  if (n == 3) return {"0", "a", "1"};
  std::vector<std::string> names;
  names.push_back("0");
  for (int i = n - 2; i >= 1; --i) names.push_back("u" + std::to_string(i));
  names.push_back("1");
  return names;
}

FiniteLattice chain_lattice(const std::vector<std::string>& names) {
  const int n = static_cast<int>(names.size());
  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) leq[i * n + j] = 1;
  return FiniteLattice::from_order(names, std::move(leq));
}

void verify_table(const std::optional<std::vector<int>>& derived, const std::vector<int>& formula,
                  const char* what) {
  if (!derived || *derived != formula)
    throw NegationMismatch(std::string("closed form for ") + what +
                           " disagrees with the order-derived table");
}

}  // namespace

// ---- Boolean algebras ----

BooleanAlgebra::BooleanAlgebra(int atoms) : atoms_(atoms) {
  if (atoms < 0 || atoms > kMaxBooleanAtoms)
    throw TooLarge("atom count must be between 0 and " + std::to_string(kMaxBooleanAtoms));
}

std::string BooleanAlgebra::name(std::uint32_t mask) const {
  if (mask == 0) return "0";
  if (mask == full()) return "1";
  std::string out;
  if (atoms_ <= 6) {
    for (int i = 0; i < atoms_; ++i)
      if (mask & atom(i)) out += kAtomLetters[i];
  } else {
    out = "{";
    bool first = true;
    for (int i = 0; i < atoms_; ++i) {
      if (mask & atom(i)) {
        if (!first) out += ',';
        out += std::to_string(i);
        first = false;
      }
    }
    out += '}';
  }
  return out;
}

FiniteLattice BooleanAlgebra::lattice() const {
  const long long n = size();
  if (n > kMaxTableElements)
    throw TooLarge("subset lattice on " + std::to_string(atoms_) +
                   " atoms exceeds the dense-table limit");
  std::vector<std::string> names(n);
  for (std::uint32_t m = 0; m < size(); ++m) names[m] = name(m);
  std::vector<std::uint8_t> le(static_cast<std::size_t>(n) * n);
  std::vector<int> meet(static_cast<std::size_t>(n) * n);
  std::vector<int> join(static_cast<std::size_t>(n) * n);
  for (std::uint32_t a = 0; a < size(); ++a) {
    for (std::uint32_t b = 0; b < size(); ++b) {
      le[a * n + b] = leq(a, b) ? 1 : 0;
      meet[a * n + b] = static_cast<int>(a & b);
      join[a * n + b] = static_cast<int>(a | b);
    }
  }
  return FiniteLattice::from_tables(std::move(names), std::move(le), std::move(meet),
                                    std::move(join), 0, static_cast<int>(full()));
}

// ---- classified structures ----

int AlgebraStructure::pseudo(int a) const {
  if (!pseudo_neg) throw MissingConnective("algebra carries no pseudo-complement table");
  return (*pseudo_neg)[a];
}

int AlgebraStructure::dual(int a) const {
  if (!dual_neg) throw MissingConnective("algebra carries no dual negation table");
  return (*dual_neg)[a];
}

int pseudo_complement(const FiniteLattice& L, int a) {
  auto table = try_pseudo_table(L);
  if (table) return (*table)[a];
  // Recompute just for a to give a precise error.
  std::vector<int> annihilators;
  for (int c = 0; c < L.size(); ++c)
    if (L.meet(a, c) == L.bottom()) annihilators.push_back(c);
  for (int c : annihilators) {
    bool greatest = true;
    for (int d : annihilators)
      if (!L.leq(d, c)) greatest = false;
    if (greatest) return c;
  }
  throw NoPseudoComplement("element '" + L.name(a) + "' has no pseudo-complement");
}

int dual_pseudo_complement(const FiniteLattice& L, int a) {
  std::vector<int> candidates;
  for (int c = 0; c < L.size(); ++c)
    if (L.join(a, c) == L.top()) candidates.push_back(c);
  for (int c : candidates) {
    bool least = true;
    for (int d : candidates)
      if (!L.leq(c, d)) least = false;
    if (least) return c;
  }
  throw NoDualPseudoComplement("element '" + L.name(a) + "' has no dual pseudo-complement");
}

AlgebraStructure classify(const FiniteLattice& L) {
  AlgebraStructure alg;
  alg.lattice = L;
  const bool distributive = is_bounded_distributive(L);
  alg.pseudo_neg = try_pseudo_table(L);
  alg.dual_neg = try_dual_table(L);

  if (distributive && alg.pseudo_neg) {
    const auto& p = *alg.pseudo_neg;
    alg.is_stone = true;
    for (int a = 0; a < L.size(); ++a)
      if (L.join(p[a], p[p[a]]) != L.top()) alg.is_stone = false;
  }
  if (distributive && alg.dual_neg) {
    const auto& d = *alg.dual_neg;
    alg.is_dual_stone = true;
    for (int a = 0; a < L.size(); ++a)
      if (L.meet(d[a], d[d[a]]) != L.bottom()) alg.is_dual_stone = false;
  }
  alg.is_double_stone = alg.is_stone && alg.is_dual_stone;
  return alg;
}

AlgebraStructure restrict_signature(AlgebraStructure a, bool keep_pseudo, bool keep_dual) {
  if (!keep_pseudo) {
    a.pseudo_neg.reset();
    a.is_stone = false;
    a.is_double_stone = false;
  }
  if (!keep_dual) {
    a.dual_neg.reset();
    a.is_dual_stone = false;
    a.is_double_stone = false;
  }
  return a;
}

AlgebraStructure boolean_algebra(int k) {
  BooleanAlgebra B(k);
  return classify(B.lattice());
}

AlgebraStructure chain_algebra(int n) {
  if (n < 1) throw InvalidInput("a chain needs at least one element");
  return classify(chain_lattice(chain_names(n)));
}

AlgebraStructure one_element() { return chain_algebra(1); }
AlgebraStructure two_chain() { return chain_algebra(2); }
AlgebraStructure three_chain() { return chain_algebra(3); }
AlgebraStructure three_pseudo() { return restrict_signature(three_chain(), true, false); }
AlgebraStructure three_dual() { return restrict_signature(three_chain(), false, true); }

AlgebraStructure four_chain() {
  return classify(chain_lattice({"f", "u2", "u1", "t"}));
}

// ---- interval powers ----

AlgebraStructure interval_power(const BooleanAlgebra& B, int arity) {
  if (arity != 2 && arity != 3) throw UnsupportedArity("interval power arity must be 2 or 3");

  long long count = 1;
  for (int i = 0; i < B.atoms(); ++i) {
    count *= arity + 1;
    if (count > kMaxProductElements)
      throw TooLarge("interval power would exceed " + std::to_string(kMaxProductElements) +
                     " elements");
  }
  if (count > kMaxTableElements)
    throw TooLarge("interval power of " + std::to_string(count) +
                   " elements exceeds the dense-table limit");

  std::vector<std::array<std::uint32_t, 3>> tuples;
  for (std::uint32_t a = 0; a < B.size(); ++a) {
    for (std::uint32_t b = 0; b < B.size(); ++b) {
      if (!B.leq(a, b)) continue;
      if (arity == 2) {
        tuples.push_back({a, b, 0});
      } else {
        for (std::uint32_t c = 0; c < B.size(); ++c)
          if (B.leq(b, c)) tuples.push_back({a, b, c});
      }
    }
  }
  std::sort(tuples.begin(), tuples.end());

  const int n = static_cast<int>(tuples.size());
  std::map<std::array<std::uint32_t, 3>, int> index;
  for (int i = 0; i < n; ++i) index.emplace(tuples[i], i);

  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) {
    std::string name = "(" + B.name(tuples[i][0]) + "," + B.name(tuples[i][1]);
    if (arity == 3) name += "," + B.name(tuples[i][2]);
    name += ")";
    names[i] = std::move(name);
  }

  std::vector<std::uint8_t> le(static_cast<std::size_t>(n) * n);
  std::vector<int> meet(static_cast<std::size_t>(n) * n);
  std::vector<int> join(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      bool leval = true;
      std::array<std::uint32_t, 3> m{0, 0, 0}, j{0, 0, 0};
      for (int c = 0; c < arity; ++c) {
        leval = leval && B.leq(tuples[x][c], tuples[y][c]);
        m[c] = tuples[x][c] & tuples[y][c];
        j[c] = tuples[x][c] | tuples[y][c];
      }
      le[static_cast<std::size_t>(x) * n + y] = leval ? 1 : 0;
      meet[static_cast<std::size_t>(x) * n + y] = index.at(m);
      join[static_cast<std::size_t>(x) * n + y] = index.at(j);
    }
  }

  std::array<std::uint32_t, 3> bot{0, 0, 0}, top{B.full(), B.full(), 0};
  if (arity == 3) top[2] = B.full();
  FiniteLattice L = FiniteLattice::from_tables(std::move(names), std::move(le), std::move(meet),
                                               std::move(join), index.at(bot), index.at(top));

  AlgebraStructure alg = classify(L);

  // Closed forms: both negations are constant tuples built from a component
  // complement (last component for the pseudo-complement, first for the dual).
  std::vector<int> pseudo(n), dual(n);
  for (int i = 0; i < n; ++i) {
    std::uint32_t pc = B.complement(tuples[i][arity - 1]);
    std::uint32_t dc = B.complement(tuples[i][0]);
    std::array<std::uint32_t, 3> pt{pc, pc, 0}, dt{dc, dc, 0};
    if (arity == 3) {
      pt[2] = pc;
      dt[2] = dc;
    }
    pseudo[i] = index.at(pt);
    dual[i] = index.at(dt);
  }
  verify_table(alg.pseudo_neg, pseudo, "the pseudo-complement");
  verify_table(alg.dual_neg, dual, "the dual negation");

  alg.interval_meta = IntervalPowerMeta{B.atoms(), arity, std::move(tuples)};
  return alg;
}

AlgebraStructure power_algebra(const AlgebraStructure& base, int exponent) {
  ProductPower power = product_power(base.lattice, exponent);
  AlgebraStructure alg = classify(power.lattice);

  const int n = power.lattice.size();
  if (base.has_pseudo()) {
    std::vector<int> lifted(n);
    for (int x = 0; x < n; ++x) {
      auto tuple = power.tuple_of(x);
      for (int& c : tuple) c = base.pseudo(c);
      lifted[x] = power.index_of(tuple);
    }
    verify_table(alg.pseudo_neg, lifted, "the componentwise pseudo-complement");
  }
  if (base.has_dual()) {
    std::vector<int> lifted(n);
    for (int x = 0; x < n; ++x) {
      auto tuple = power.tuple_of(x);
      for (int& c : tuple) c = base.dual(c);
      lifted[x] = power.index_of(tuple);
    }
    verify_table(alg.dual_neg, lifted, "the componentwise dual negation");
  }
  return restrict_signature(std::move(alg), base.has_pseudo(), base.has_dual());
}

// ---- homomorphisms and subdirect embeddings ----

namespace {

struct HomSearch {
  const AlgebraStructure& A;
  const AlgebraStructure& B;
  std::vector<int> h;
  std::vector<std::vector<int>>& out;

  bool consistent(int i) const {
    const FiniteLattice& LA = A.lattice;
    const FiniteLattice& LB = B.lattice;
    for (int x = 0; x <= i; ++x) {
      for (int y = 0; y <= x; ++y) {
        int m = LA.meet(x, y);
        int j = LA.join(x, y);
        if (m <= i && (x == i || y == i || m == i) && LB.meet(h[x], h[y]) != h[m]) return false;
        if (j <= i && (x == i || y == i || j == i) && LB.join(h[x], h[y]) != h[j]) return false;
      }
      if (A.has_pseudo()) {
        int p = A.pseudo(x);
        if (p <= i && (x == i || p == i) && B.pseudo(h[x]) != h[p]) return false;
      }
      if (A.has_dual()) {
        int d = A.dual(x);
        if (d <= i && (x == i || d == i) && B.dual(h[x]) != h[d]) return false;
      }
    }
    return true;
  }

  void search(int i) {
    if (i == A.lattice.size()) {
      out.push_back(h);
      return;
    }
    for (int v = 0; v < B.lattice.size(); ++v) {
      if (i == A.lattice.bottom() && v != B.lattice.bottom()) continue;
      if (i == A.lattice.top() && v != B.lattice.top()) continue;
      h[i] = v;
      if (consistent(i)) search(i + 1);
    }
    h[i] = -1;
  }
};

bool separates(const std::vector<std::vector<int>>& homs, const std::vector<int>& family, int n) {
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      bool split = false;
      for (int f : family) {
        if (homs[f][a] != homs[f][b]) {
          split = true;
          break;
        }
      }
      if (!split) return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::vector<int>> enumerate_homomorphisms(const AlgebraStructure& A,
                                                      const AlgebraStructure& Bt) {
  if (A.has_pseudo() != Bt.has_pseudo() || A.has_dual() != Bt.has_dual())
    throw SignatureMismatch("the two algebras carry different negation signatures");
  std::vector<std::vector<int>> out;
  HomSearch search{A, Bt, std::vector<int>(A.lattice.size(), -1), out};
  search.search(0);
  return out;
}

SubdirectEmbedding subdirect_embedding(const AlgebraStructure& A) {
  AlgebraStructure gen;
  GeneratorKind kind;
  if (A.has_pseudo() && A.has_dual()) {
    if (!A.is_double_stone) throw NotClassified("algebra is not classified as double Stone");
    gen = four_chain();
    kind = GeneratorKind::FourChain;
  } else if (A.has_pseudo()) {
    if (!A.is_stone) throw NotClassified("algebra is not classified as Stone");
    gen = three_pseudo();
    kind = GeneratorKind::ThreePseudo;
  } else if (A.has_dual()) {
    if (!A.is_dual_stone) throw NotClassified("algebra is not classified as dual Stone");
    gen = three_dual();
    kind = GeneratorKind::ThreeDual;
  } else {
    throw NotClassified("algebra carries no negation table");
  }

  const int n = A.lattice.size();
  auto homs = enumerate_homomorphisms(A, gen);

  std::vector<int> family;
  if (n > 1) {
    const int h = static_cast<int>(homs.size());
    bool found = false;
    long long budget = 200'000;
    for (int k = 1; k <= h && !found && budget > 0; ++k) {
      // k-combinations in lexicographic order.
      std::vector<int> combo(k);
      for (int i = 0; i < k; ++i) combo[i] = i;
      while (true) {
        if (--budget < 0) break;
        if (separates(homs, combo, n)) {
          family = combo;
          found = true;
          break;
        }
        int i = k - 1;
        while (i >= 0 && combo[i] == h - k + i) --i;
        if (i < 0) break;
        ++combo[i];
        for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
      }
    }
    if (!found) {
      std::vector<int> all(homs.size());
      for (int i = 0; i < h; ++i) all[i] = i;
      if (!homs.empty() && separates(homs, all, n)) {
        family = all;
      } else {
        throw EmbeddingFailed("no point-separating family of homomorphisms exists");
      }
    }
  }

  const int I = static_cast<int>(family.size());
  AlgebraStructure target = power_algebra(gen, I);
  ProductPower power = product_power(gen.lattice, I);

  OrderMap map{A.lattice, target.lattice, std::vector<int>(n, -1)};
  std::vector<int> tuple(I);
  for (int a = 0; a < n; ++a) {
    for (int i = 0; i < I; ++i) tuple[i] = homs[family[i]][a];
    map.assignment[a] = power.index_of(tuple);
  }

  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      if (a < b && map.assignment[a] == map.assignment[b])
        throw EmbeddingFailed("product map is not injective");
      if (target.lattice.meet(map.assignment[a], map.assignment[b]) !=
              map.assignment[A.lattice.meet(a, b)] ||
          target.lattice.join(map.assignment[a], map.assignment[b]) !=
              map.assignment[A.lattice.join(a, b)])
        throw EmbeddingFailed("product map does not preserve meet and join");
    }
    if (A.has_pseudo() && target.pseudo(map.assignment[a]) != map.assignment[A.pseudo(a)])
      throw EmbeddingFailed("product map does not preserve the pseudo-complement");
    if (A.has_dual() && target.dual(map.assignment[a]) != map.assignment[A.dual(a)])
      throw EmbeddingFailed("product map does not preserve the dual negation");
  }

  std::vector<std::vector<int>> chosen;
  for (int f : family) chosen.push_back(homs[f]);
  return SubdirectEmbedding{std::move(map), I, kind, std::move(chosen)};
}

OrderMap canonical_iso(int index_count, int arity) {
  if (arity != 2 && arity != 3) throw UnsupportedArity("canonical isomorphism arity must be 2 or 3");
  if (index_count < 0) throw InvalidInput("index count must be non-negative");

  AlgebraStructure base = (arity == 2) ? three_chain() : four_chain();
  AlgebraStructure source = power_algebra(base, index_count);
  ProductPower power = product_power(base.lattice, index_count);

  BooleanAlgebra B(index_count);
  AlgebraStructure target = interval_power(B, arity);
  const auto& tuples = target.interval_meta->tuples;
  std::map<std::array<std::uint32_t, 3>, int> target_index;
  for (int i = 0; i < static_cast<int>(tuples.size()); ++i) target_index.emplace(tuples[i], i);

  OrderMap phi{source.lattice, target.lattice,
               std::vector<int>(source.lattice.size(), -1)};
  for (int j : join_irreducibles(source.lattice)) {
    auto tuple = power.tuple_of(j);
    int coord = -1, height = -1;
    for (int i = 0; i < index_count; ++i) {
      if (tuple[i] != base.lattice.bottom()) {
        coord = i;
        height = tuple[i];  // chains are indexed bottom to top
      }
    }
    // A chain element of height h maps to the tuple whose last h components
    // are the atom and whose earlier components are empty.
    std::uint32_t g = B.atom(coord);
    std::array<std::uint32_t, 3> image{0, 0, 0};
    for (int c = 0; c < arity; ++c) image[c] = (arity - c <= height) ? g : 0;
    phi.assignment[j] = target_index.at(image);
  }

  OrderMap full = extend_order_iso(phi);
  for (int x = 0; x < source.lattice.size(); ++x) {
    if (full.assignment[source.pseudo(x)] != target.pseudo(full.assignment[x]) ||
        full.assignment[source.dual(x)] != target.dual(full.assignment[x]))
      throw ExtensionNotIso("canonical map does not commute with the negations");
  }
  return full;
}

OrderMap subdirect_interval_embedding(const AlgebraStructure& A) {
  SubdirectEmbedding emb = subdirect_embedding(A);
  const int arity = (emb.generator == GeneratorKind::FourChain) ? 3 : 2;
  OrderMap iso = canonical_iso(emb.index_count, arity);
  OrderMap composed = compose(emb.map, iso);

  AlgebraStructure target = interval_power(BooleanAlgebra(emb.index_count), arity);
  for (int a = 0; a < A.lattice.size(); ++a) {
    if (A.has_pseudo() &&
        target.pseudo(composed.assignment[a]) != composed.assignment[A.pseudo(a)])
      throw EmbeddingFailed("composite embedding does not preserve the pseudo-complement");
    if (A.has_dual() && target.dual(composed.assignment[a]) != composed.assignment[A.dual(a)])
      throw EmbeddingFailed("composite embedding does not preserve the dual negation");
  }
  return composed;
}

// ---- rough-set algebras ----

AlgebraStructure rs_algebra(const ApproximationSpace& space, RsVariant variant) {
  std::vector<RoughPair> pairs = rough_sets(space);
  const int n = static_cast<int>(pairs.size());
  if (n > kMaxTableElements)
    throw TooLarge("rough pair lattice exceeds the dense-table limit");

  std::map<RoughPair, int> index;
  for (int i = 0; i < n; ++i) index.emplace(pairs[i], i);

  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[i] = rough_pair_name(space, pairs[i]);

  std::vector<std::uint8_t> le(static_cast<std::size_t>(n) * n);
  std::vector<int> meet(static_cast<std::size_t>(n) * n);
  std::vector<int> join(static_cast<std::size_t>(n) * n);
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      const RoughPair &p = pairs[x], &q = pairs[y];
      le[static_cast<std::size_t>(x) * n + y] =
          ((p.lower & ~q.lower) == 0 && (p.upper & ~q.upper) == 0) ? 1 : 0;
      RoughPair m{p.lower & q.lower, p.upper & q.upper};
      RoughPair j{p.lower | q.lower, p.upper | q.upper};
      auto mi = index.find(m);
      auto ji = index.find(j);
      if (mi == index.end() || ji == index.end())
        throw NotClosed("rough pairs are not closed under componentwise meet and join");
      meet[static_cast<std::size_t>(x) * n + y] = mi->second;
      join[static_cast<std::size_t>(x) * n + y] = ji->second;
    }
  }

  PointSet full = space.full();
  FiniteLattice L =
      FiniteLattice::from_tables(std::move(names), std::move(le), std::move(meet), std::move(join),
                                 index.at(RoughPair{0, 0}), index.at(RoughPair{full, full}));

  AlgebraStructure alg = classify(L);
  std::vector<int> formula(n);
  if (variant == RsVariant::Pseudo) {
    for (int i = 0; i < n; ++i) {
      PointSet c = ~pairs[i].upper & full;
      formula[i] = index.at(RoughPair{c, c});
    }
    verify_table(alg.pseudo_neg, formula, "the rough pseudo-complement");
    alg = restrict_signature(std::move(alg), true, false);
  } else {
    for (int i = 0; i < n; ++i) {
      PointSet c = ~pairs[i].lower & full;
      formula[i] = index.at(RoughPair{c, c});
    }
    verify_table(alg.dual_neg, formula, "the rough dual negation");
    alg = restrict_signature(std::move(alg), false, true);
  }
  alg.rough_meta = RoughSetMeta{space, std::move(pairs)};
  return alg;
}

RepresentationSpace representation_space(const std::vector<std::string>& base_points) {
  const int n = static_cast<int>(base_points.size());
  std::vector<std::string> universe;
  std::vector<std::vector<std::string>> blocks;
  for (const auto& p : base_points) {
    universe.push_back(p);
    universe.push_back(p + "'");
    blocks.push_back({p, p + "'"});
  }
  ApproximationSpace space(std::move(universe), blocks);

  AlgebraStructure rs_pseudo = rs_algebra(space, RsVariant::Pseudo);
  AlgebraStructure rs_dual = rs_algebra(space, RsVariant::Dual);

  BooleanAlgebra B(n);
  AlgebraStructure P = interval_power(B, 2);

  std::map<RoughPair, int> rs_index;
  for (int i = 0; i < static_cast<int>(rs_pseudo.rough_meta->pairs.size()); ++i)
    rs_index.emplace(rs_pseudo.rough_meta->pairs[i], i);

  auto doubled = [&](std::uint32_t mask) {
    PointSet out = 0;
    for (int i = 0; i < n; ++i)
      if (mask & B.atom(i)) out |= PointSet{3} << (2 * i);
    return out;
  };

  const auto& tuples = P.interval_meta->tuples;
  OrderMap iso{P.lattice, rs_pseudo.lattice, std::vector<int>(P.lattice.size(), -1)};
  for (int x = 0; x < P.lattice.size(); ++x) {
    RoughPair image{doubled(tuples[x][0]), doubled(tuples[x][1])};
    auto it = rs_index.find(image);
    if (it == rs_index.end()) throw EmbeddingFailed("monotone pair has no rough counterpart");
    iso.assignment[x] = it->second;
  }

  if (P.lattice.size() != rs_pseudo.lattice.size())
    throw EmbeddingFailed("representation map is not a bijection");
  std::vector<bool> hit(rs_pseudo.lattice.size(), false);
  for (int v : iso.assignment) {
    if (hit[v]) throw EmbeddingFailed("representation map is not a bijection");
    hit[v] = true;
  }
  for (int x = 0; x < P.lattice.size(); ++x) {
    for (int y = 0; y < P.lattice.size(); ++y) {
      if (iso.assignment[P.lattice.meet(x, y)] !=
              rs_pseudo.lattice.meet(iso.assignment[x], iso.assignment[y]) ||
          iso.assignment[P.lattice.join(x, y)] !=
              rs_pseudo.lattice.join(iso.assignment[x], iso.assignment[y]))
        throw EmbeddingFailed("representation map does not preserve meet and join");
    }
    if (iso.assignment[P.pseudo(x)] != rs_pseudo.pseudo(iso.assignment[x]) ||
        iso.assignment[P.dual(x)] != rs_dual.dual(iso.assignment[x]))
      throw EmbeddingFailed("representation map does not commute with the negations");
  }
  return RepresentationSpace{std::move(space), std::move(iso)};
}

}  // namespace stonework
