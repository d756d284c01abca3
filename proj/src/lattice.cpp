#include "stonework/lattice.hpp"

#include <algorithm>
#include <map>
#include <queue>

namespace stonework {

namespace {

// Greatest element of `candidates` under L-order, or -1 when there is none.
int greatest_of(const std::vector<std::uint8_t>& leq, int n, const std::vector<int>& candidates) {
  for (int c : candidates) {
    bool dominates = true;
    for (int d : candidates) {
      if (!leq[d * n + c]) {
        dominates = false;
        break;
      }
    }
    if (dominates) return c;
  }
  return -1;
}

void check_table_budget(long long n) {
  if (n > kMaxTableElements)
    throw TooLarge("carrier of " + std::to_string(n) + " elements exceeds the dense-table limit of " +
                   std::to_string(kMaxTableElements));
}

}  // namespace

FiniteLattice FiniteLattice::from_tables(std::vector<std::string> names,
                                         std::vector<std::uint8_t> leq,
                                         std::vector<int> meet,
                                         std::vector<int> join,
                                         int bottom, int top) {
  FiniteLattice L;
  L.n_ = static_cast<int>(names.size());
  L.names_ = std::move(names);
  L.leq_ = std::move(leq);
  L.meet_ = std::move(meet);
  L.join_ = std::move(join);
  L.bottom_ = bottom;
  L.top_ = top;
  return L;
}

FiniteLattice FiniteLattice::from_order(std::vector<std::string> names,
                                        std::vector<std::uint8_t> leq) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw InvalidInput("a lattice needs at least one element");
  check_table_budget(n);

  int bottom = -1, top = -1;
  for (int a = 0; a < n; ++a) {
    bool below_all = true, above_all = true;
    for (int b = 0; b < n; ++b) {
      below_all = below_all && leq[a * n + b];
      above_all = above_all && leq[b * n + a];
    }
    if (below_all) bottom = a;
    if (above_all) top = a;
  }
  if (bottom < 0 || top < 0) throw Unbounded("order has no least or no greatest element");

  std::vector<int> meet(static_cast<std::size_t>(n) * n);
  std::vector<int> join(static_cast<std::size_t>(n) * n);
  std::vector<int> bounds;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      bounds.clear();
      for (int c = 0; c < n; ++c)
        if (leq[c * n + a] && leq[c * n + b]) bounds.push_back(c);
      int m = greatest_of(leq, n, bounds);
      if (m < 0)
        throw NotALattice("elements '" + names[a] + "' and '" + names[b] +
                          "' have no greatest lower bound");
      meet[a * n + b] = meet[b * n + a] = m;

      bounds.clear();
      for (int c = 0; c < n; ++c)
        if (leq[a * n + c] && leq[b * n + c]) bounds.push_back(c);
      // Least upper bound = greatest under the reversed order.
      int j = -1;
      for (int c : bounds) {
        bool below_all = true;
        for (int d : bounds) {
          if (!leq[c * n + d]) {
            below_all = false;
            break;
          }
        }
        if (below_all) {
          j = c;
          break;
        }
      }
      if (j < 0)
        throw NotALattice("elements '" + names[a] + "' and '" + names[b] +
                          "' have no least upper bound");
      join[a * n + b] = join[b * n + a] = j;
    }
  }
  return from_tables(std::move(names), std::move(leq), std::move(meet), std::move(join), bottom, top);
}

int FiniteLattice::index_of(const std::string& name) const {
  for (int i = 0; i < n_; ++i)
    if (names_[i] == name) return i;
  throw InvalidInput("unknown element name '" + name + "'");
}

int FiniteLattice::join_all(std::span<const int> xs) const {
  int acc = bottom_;
  for (int x : xs) acc = join(acc, x);
  return acc;
}

int FiniteLattice::meet_all(std::span<const int> xs) const {
  int acc = top_;
  for (int x : xs) acc = meet(acc, x);
  return acc;
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
  std::vector<std::pair<int, int>> result;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (!lt(a, b)) continue;
      bool covered = true;
      for (int c = 0; c < n_; ++c) {
        if (lt(a, c) && lt(c, b)) {
          covered = false;
          break;
        }
      }
      if (covered) result.emplace_back(a, b);
    }
  }
  return result;
}

bool FiniteLattice::same_order_as(const FiniteLattice& other) const {
  return n_ == other.n_ && names_ == other.names_ && leq_ == other.leq_;
}

FiniteLattice build_lattice(const std::vector<std::string>& names,
                            const std::vector<std::pair<std::string, std::string>>& covers) {
  const int n = static_cast<int>(names.size());
  if (n == 0) throw InvalidInput("a lattice needs at least one element");
  check_table_budget(n);

  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (!index.emplace(names[i], i).second)
      throw InvalidInput("duplicate element name '" + names[i] + "'");
  }

  std::vector<std::vector<int>> up(n);
  std::vector<int> indegree(n, 0);
  for (const auto& [lo, hi] : covers) {
    auto l = index.find(lo);
    auto h = index.find(hi);
    if (l == index.end()) throw InvalidInput("unknown element name '" + lo + "' in covers");
    if (h == index.end()) throw InvalidInput("unknown element name '" + hi + "' in covers");
    if (l->second == h->second) throw CyclicCovers("cover pair relates '" + lo + "' to itself");
    up[l->second].push_back(h->second);
    ++indegree[h->second];
  }

  // Kahn's algorithm; leftover nodes witness a cycle.
  std::queue<int> ready;
  for (int i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(i);
  int seen = 0;
  std::vector<int> order;
  while (!ready.empty()) {
    int a = ready.front();
    ready.pop();
    ++seen;
    order.push_back(a);
    for (int b : up[a])
      if (--indegree[b] == 0) ready.push(b);
  }
  if (seen != n) throw CyclicCovers("cover relation contains a cycle");

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) leq[i * n + i] = 1;
  // Process in reverse topological order so reachability accumulates.
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int a = *it;
    for (int b : up[a])
      for (int c = 0; c < n; ++c)
        if (leq[b * n + c]) leq[a * n + c] = 1;
  }

  return FiniteLattice::from_order(names, std::move(leq));
}

bool is_bounded_distributive(const FiniteLattice& L) {
  const int n = L.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return false;
  return true;
}

std::vector<int> join_irreducibles(const FiniteLattice& L) {
  const int n = L.size();
  std::vector<int> result;
  for (int a = 0; a < n; ++a) {
    int acc = L.bottom();
    for (int x = 0; x < n; ++x)
      if (L.lt(x, a)) acc = L.join(acc, x);
    if (acc != a) result.push_back(a);
  }
  return result;
}

std::vector<int> irreducibles_below(const FiniteLattice& L, int x) {
  std::vector<int> result;
  for (int j : join_irreducibles(L))
    if (L.leq(j, x)) result.push_back(j);
  return result;
}

bool is_join_dense(const FiniteLattice& L, std::span<const int> S) {
  const int n = L.size();
  for (int a = 0; a < n; ++a) {
    int acc = L.bottom();
    for (int s : S)
      if (L.leq(s, a)) acc = L.join(acc, s);
    if (acc != a) return false;
  }
  return true;
}

bool OrderMap::total() const {
  for (int v : assignment)
    if (v < 0) return false;
  return true;
}

int OrderMap::apply(int a) const {
  int v = assignment[a];
  if (v < 0) throw InvalidInput("map undefined on element '" + source.name(a) + "'");
  return v;
}

OrderMap extend_order_iso(const OrderMap& phi) {
  const FiniteLattice& S = phi.source;
  const FiniteLattice& T = phi.target;

  std::vector<int> js = join_irreducibles(S);
  std::vector<int> jt = join_irreducibles(T);

  std::vector<bool> in_js(S.size(), false);
  for (int j : js) in_js[j] = true;
  for (int a = 0; a < S.size(); ++a) {
    bool defined = phi.assignment[a] >= 0;
    if (defined != in_js[a])
      throw NotAnOrderIso("map must be defined exactly on the join-irreducibles");
  }

  std::vector<bool> in_jt(T.size(), false);
  for (int j : jt) in_jt[j] = true;
  std::vector<bool> hit(T.size(), false);
  for (int j : js) {
    int img = phi.assignment[j];
    if (!in_jt[img]) throw NotAnOrderIso("image of '" + S.name(j) + "' is not join-irreducible");
    if (hit[img]) throw NotAnOrderIso("map is not injective on the join-irreducibles");
    hit[img] = true;
  }
  if (js.size() != jt.size())
    throw NotAnOrderIso("the lattices have different numbers of join-irreducibles");
  for (int a : js)
    for (int b : js)
      if (S.leq(a, b) != T.leq(phi.assignment[a], phi.assignment[b]))
        throw NotAnOrderIso("map does not preserve and reflect order on the join-irreducibles");

  if (!is_bounded_distributive(S) || !is_bounded_distributive(T))
    throw ExtensionNotIso("both lattices must be distributive");
  if (!is_join_dense(S, js) || !is_join_dense(T, jt))
    throw ExtensionNotIso("join-irreducibles must be join-dense in both lattices");

  OrderMap full{S, T, std::vector<int>(S.size(), -1)};
  std::vector<int> images;
  for (int x = 0; x < S.size(); ++x) {
    images.clear();
    for (int j : js)
      if (S.leq(j, x)) images.push_back(phi.assignment[j]);
    full.assignment[x] = T.join_all(images);
  }

  if (S.size() != T.size()) throw ExtensionNotIso("the lattices have different sizes");
  std::vector<bool> covered(T.size(), false);
  for (int v : full.assignment) {
    if (covered[v]) throw ExtensionNotIso("extension is not a bijection");
    covered[v] = true;
  }
  for (int a = 0; a < S.size(); ++a) {
    for (int b = 0; b < S.size(); ++b) {
      if (full.assignment[S.meet(a, b)] != T.meet(full.assignment[a], full.assignment[b]) ||
          full.assignment[S.join(a, b)] != T.join(full.assignment[a], full.assignment[b]))
        throw ExtensionNotIso("extension does not preserve meet and join");
    }
  }
  return full;
}

OrderMap compose(const OrderMap& first, const OrderMap& then) {
  if (!first.target.same_order_as(then.source))
    throw InvalidInput("maps do not compose: middle lattices differ");
  OrderMap result{first.source, then.target, std::vector<int>(first.source.size(), -1)};
  for (int a = 0; a < first.source.size(); ++a) {
    int mid = first.assignment[a];
    if (mid >= 0) result.assignment[a] = then.assignment[mid];
  }
  return result;
}

int ProductPower::f(int i, int x) const {
  std::vector<int> tuple(exponent, base_bottom);
  tuple[i] = x;
  return index_of(tuple);
}

std::vector<int> ProductPower::tuple_of(int index) const {
  std::vector<int> tuple(exponent);
  for (int i = exponent - 1; i >= 0; --i) {
    tuple[i] = index % base_size;
    index /= base_size;
  }
  return tuple;
}

int ProductPower::index_of(std::span<const int> tuple) const {
  int index = 0;
  for (int i = 0; i < exponent; ++i) index = index * base_size + tuple[i];
  return index;
}

ProductPower product_power(const FiniteLattice& L, int exponent) {
  if (exponent < 0) throw InvalidInput("exponent must be non-negative");
  const int b = L.size();
  long long count = 1;
  for (int i = 0; i < exponent; ++i) {
    count *= b;
    if (count > kMaxProductElements)
      throw TooLarge("product would exceed " + std::to_string(kMaxProductElements) + " elements");
  }
  check_table_budget(count);

  const int n = static_cast<int>(count);
  std::vector<std::string> names(n);
  std::vector<int> tuple(exponent);
  for (int idx = 0; idx < n; ++idx) {
    int rem = idx;
    for (int i = exponent - 1; i >= 0; --i) {
      tuple[i] = rem % b;
      rem /= b;
    }
    std::string name = "(";
    for (int i = 0; i < exponent; ++i) {
      if (i) name += ',';
      name += L.name(tuple[i]);
    }
    name += ')';
    names[idx] = std::move(name);
  }

  std::vector<std::uint8_t> leq(static_cast<std::size_t>(n) * n);
  std::vector<int> meet(static_cast<std::size_t>(n) * n);
  std::vector<int> join(static_cast<std::size_t>(n) * n);
  std::vector<int> ta(exponent), tb(exponent);
  for (int x = 0; x < n; ++x) {
    int rem = x;
    for (int i = exponent - 1; i >= 0; --i) {
      ta[i] = rem % b;
      rem /= b;
    }
    for (int y = 0; y < n; ++y) {
      rem = y;
      for (int i = exponent - 1; i >= 0; --i) {
        tb[i] = rem % b;
        rem /= b;
      }
      bool le = true;
      int m = 0, j = 0;
      for (int i = 0; i < exponent; ++i) {
        le = le && L.leq(ta[i], tb[i]);
        m = m * b + L.meet(ta[i], tb[i]);
        j = j * b + L.join(ta[i], tb[i]);
      }
      leq[static_cast<std::size_t>(x) * n + y] = le ? 1 : 0;
      meet[static_cast<std::size_t>(x) * n + y] = m;
      join[static_cast<std::size_t>(x) * n + y] = j;
    }
  }

  int bottom = 0, top = 0;
  for (int i = 0; i < exponent; ++i) {
    bottom = bottom * b + L.bottom();
    top = top * b + L.top();
  }

  ProductPower power;
  power.lattice = FiniteLattice::from_tables(std::move(names), std::move(leq), std::move(meet),
                                             std::move(join), bottom, top);
  power.base_size = b;
  power.exponent = exponent;
  power.base_bottom = L.bottom();
  return power;
}

}  // namespace stonework
