#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "stonework/semantics.hpp"

using namespace stonework;

namespace {

Assignment cm(const AlgebraStructure& alg, std::initializer_list<std::pair<const char*, const char*>> vs) {
  Assignment a;
  for (const auto& [var, name] : vs) a[var] = alg.lattice.index_of(name);
  return a;
}

}  // namespace

TEST_CASE("evaluation in the pseudo chain") {
  AlgebraStructure alg = three_pseudo();
  const int a = alg.lattice.index_of("a");
  Assignment v{{"p", a}};
  CHECK(evaluate(parse_formula("~p"), alg, v) == alg.lattice.bottom());
  CHECK(evaluate(parse_formula("~~p"), alg, v) == alg.lattice.top());
  CHECK(evaluate(parse_formula("p | ~p"), alg, v) == a);
  CHECK(evaluate(parse_formula("T & p"), alg, v) == a);
  CHECK_THROWS_AS(evaluate(parse_formula("q"), alg, v), UnboundVariable);
  CHECK_THROWS_AS(evaluate(parse_formula("!p"), alg, v), MissingConnective);
}

TEST_CASE("order validity and least countermodels") {
  AlgebraStructure s3 = three_pseudo();
  CHECK(order_valid(parse_sequent("p |- ~~p"), s3).valid);
  CHECK(order_valid(parse_sequent("~(p | q) |- ~p & ~q"), s3).valid);
  CHECK(order_valid(parse_sequent("~p & ~q |- ~(p | q)"), s3).valid);

  Verdict v = order_valid(parse_sequent("~~p |- p"), s3);
  CHECK(!v.valid);
  CHECK(v.countermodel == cm(s3, {{"p", "a"}}));

  AlgebraStructure c4 = four_chain();
  v = order_valid(parse_sequent("p & !p |- q | ~q"), c4);
  CHECK(!v.valid);
  CHECK(v.countermodel == cm(c4, {{"p", "u1"}, {"q", "u2"}}));

  // Lexicographically least countermodel: earlier variables count more.
  AlgebraStructure d3 = three_dual();
  v = order_valid(parse_sequent("p |- !!p | q"), d3);
  CHECK(!v.valid);
  CHECK(v.countermodel == cm(d3, {{"p", "a"}, {"q", "0"}}));
}

TEST_CASE("double negation identities hold across Stone algebras") {
  std::vector<AlgebraStructure> stones = {three_pseudo(), interval_power(BooleanAlgebra(1), 2),
                                          interval_power(BooleanAlgebra(2), 2),
                                          interval_power(BooleanAlgebra(2), 3),
                                          rs_algebra(ApproximationSpace({"a", "b", "c"},
                                                                        {{"a", "b"}, {"c"}}),
                                                     RsVariant::Pseudo)};
  for (const auto& alg : stones) {
    CAPTURE(alg.lattice.size());
    for (const char* text : {"~~(p | q) |- ~~p | ~~q", "~~p | ~~q |- ~~(p | q)",
                             "~~(p & q) |- ~~p & ~~q", "~~p & ~~q |- ~~(p & q)",
                             "~(p | q) |- ~p & ~q", "~p & ~q |- ~(p | q)"}) {
      CAPTURE(text);
      CHECK(order_valid(parse_sequent(text), alg).valid);
    }
  }

  std::vector<AlgebraStructure> duals = {three_dual(), interval_power(BooleanAlgebra(2), 2),
                                         interval_power(BooleanAlgebra(2), 3),
                                         rs_algebra(ApproximationSpace({"a", "b", "c"},
                                                                       {{"a", "b"}, {"c"}}),
                                                    RsVariant::Dual)};
  for (const auto& alg : duals) {
    CAPTURE(alg.lattice.size());
    for (const char* text : {"!!(p & q) |- !!p & !!q", "!!p & !!q |- !!(p & q)",
                             "!!(p | q) |- !!p | !!q", "!!p | !!q |- !!(p | q)",
                             "!p & !q |- !(p | q)", "!(p & q) |- !p | !q"}) {
      CAPTURE(text);
      CHECK(order_valid(parse_sequent(text), alg).valid);
    }
  }
}

TEST_CASE("preservation modes differ from order validity") {
  AlgebraStructure s3 = three_pseudo();
  const Sequent dn = parse_sequent("~~p |- p");
  CHECK(!preserve_valid(dn, s3, PreserveMode::Truth).valid);
  CHECK(preserve_valid(dn, s3, PreserveMode::Truth).countermodel == cm(s3, {{"p", "a"}}));
  CHECK(preserve_valid(dn, s3, PreserveMode::Falsity).valid);
  CHECK(!preserve_valid(dn, s3, PreserveMode::Both).valid);

  AlgebraStructure d3 = three_dual();
  const Sequent dni = parse_sequent("p |- !!p");
  CHECK(preserve_valid(dni, d3, PreserveMode::Truth).valid);
  CHECK(!preserve_valid(dni, d3, PreserveMode::Falsity).valid);
  CHECK(preserve_valid(dni, d3, PreserveMode::Falsity).countermodel == cm(d3, {{"p", "a"}}));

  AlgebraStructure c4 = four_chain();
  const Sequent mixed = parse_sequent("p & !p |- q | ~q");
  CHECK(preserve_valid(mixed, c4, PreserveMode::Truth).valid);
  CHECK(preserve_valid(mixed, c4, PreserveMode::Falsity).valid);
  CHECK(preserve_valid(mixed, c4, PreserveMode::Both).valid);
  CHECK(!order_valid(mixed, c4).valid);

  // Truth and falsity preservation also come apart on the four-element
  // chain, in both directions.
  CHECK(!preserve_valid(dn, c4, PreserveMode::Truth).valid);
  CHECK(preserve_valid(dn, c4, PreserveMode::Falsity).valid);
  CHECK(preserve_valid(dni, c4, PreserveMode::Truth).valid);
  CHECK(!preserve_valid(dni, c4, PreserveMode::Falsity).valid);

  CHECK_THROWS_AS(preserve_valid(dn, boolean_algebra(2), PreserveMode::Truth),
                  UnsupportedAlgebra);
}

TEST_CASE("generator recognition") {
  CHECK(generator_kind(three_pseudo()) == GeneratorKind::ThreePseudo);
  CHECK(generator_kind(three_dual()) == GeneratorKind::ThreeDual);
  CHECK(generator_kind(four_chain()) == GeneratorKind::FourChain);
  CHECK_THROWS_AS(generator_kind(boolean_algebra(2)), UnsupportedAlgebra);
  CHECK_THROWS_AS(generator_kind(chain_algebra(5)), UnsupportedAlgebra);
}

TEST_CASE("double negation transform commutes with evaluation") {
  SUBCASE("pseudo side") {
    for (AlgebraStructure alg : {three_pseudo(), interval_power(BooleanAlgebra(2), 2)}) {
      auto assignments = oracle::all_assignments({"p", "q"}, alg.lattice.size());
      auto formulas = enumerate_formulas(2, {"p", "q"}, Signature{true, true, false}, 500000);
      for (std::size_t fi = 0; fi < formulas.size(); fi += 17) {
        const Formula& f = formulas[fi];
        for (const auto& v : assignments) {
          Assignment star = double_neg_transform(alg, v, RsVariant::Pseudo);
          CHECK(evaluate(f, alg, star) == alg.pseudo(alg.pseudo(evaluate(f, alg, v))));
        }
      }
    }
  }
  SUBCASE("dual side") {
    AlgebraStructure alg = three_dual();
    auto assignments = oracle::all_assignments({"p", "q"}, alg.lattice.size());
    auto formulas = enumerate_formulas(2, {"p", "q"}, Signature{true, false, true}, 500000);
    for (std::size_t fi = 0; fi < formulas.size(); fi += 17) {
      const Formula& f = formulas[fi];
      for (const auto& v : assignments) {
        Assignment star = double_neg_transform(alg, v, RsVariant::Dual);
        CHECK(evaluate(f, alg, star) == alg.dual(alg.dual(evaluate(f, alg, v))));
      }
    }
  }
}

TEST_CASE("point bands read off suffix membership") {
  BooleanAlgebra B(2);
  AlgebraStructure p3 = interval_power(B, 3);
  const int x = 0, y = 1;  // atom indices
  const int el = p3.lattice.index_of("(0,y,1)");
  CHECK(point_band(p3, el, y) == 2);
  CHECK(point_band(p3, el, x) == 1);
  CHECK(point_band(p3, p3.lattice.bottom(), x) == 0);
  CHECK(point_band(p3, p3.lattice.top(), x) == 3);
  CHECK_THROWS_AS(point_band(p3, el, 2), PointNotInUniverse);
  CHECK_THROWS_AS(point_band(three_pseudo(), 0, 0), WrongTarget);
}

TEST_CASE("pointwise decomposition commutes with evaluation") {
  BooleanAlgebra B(2);
  for (int arity : {2, 3}) {
    CAPTURE(arity);
    AlgebraStructure alg = interval_power(B, arity);
    auto assignments = oracle::all_assignments({"p", "q"}, alg.lattice.size());
    auto formulas = enumerate_formulas(2, {"p", "q"}, Signature{true, true, true}, 500000);
    for (std::size_t fi = 0; fi < formulas.size(); fi += 29) {
      const Formula& f = formulas[fi];
      for (std::size_t vi = 0; vi < assignments.size(); vi += 3) {
        const Assignment& v = assignments[vi];
        const int value = evaluate(f, alg, v);
        for (int pt = 0; pt < 2; ++pt) {
          PointwiseValuation pw = pointwise_decompose(alg, v, pt);
          CHECK(pw.chain.lattice.size() == arity + 1);
          CHECK(evaluate(f, pw.chain, pw.assignment) == point_band(alg, value, pt));
        }
      }
    }
  }
}

TEST_CASE("rough status of individual points") {
  ApproximationSpace space({"1", "2", "3"}, {{"1", "2"}, {"3"}});
  AlgebraStructure alg = rs_algebra(space, RsVariant::Pseudo);
  const PointSet block12 = 0b011, three = 0b100;
  std::map<std::string, RoughPair> val{{"p", RoughPair{0, block12}},
                                       {"q", RoughPair{three, three}}};
  CHECK(rs_pointwise(parse_formula("p | q"), alg, val, space.point_index("3")) ==
        RoughStatus::Certain);
  CHECK(rs_pointwise(parse_formula("p | q"), alg, val, space.point_index("1")) ==
        RoughStatus::Boundary);
  CHECK(rs_pointwise(parse_formula("p & q"), alg, val, space.point_index("1")) ==
        RoughStatus::Impossible);
  CHECK(rs_pointwise(parse_formula("~p"), alg, val, space.point_index("2")) ==
        RoughStatus::Impossible);
}

TEST_CASE("rough validity matches order validity over the pair algebra") {
  std::vector<ApproximationSpace> spaces = {
      ApproximationSpace({"u", "u'"}, {{"u", "u'"}}),
      ApproximationSpace({"a", "b", "c"}, {{"a", "b"}, {"c"}}),
      ApproximationSpace({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}),
  };
  std::vector<const char*> pseudo_sequents = {
      "p |- ~~p",       "~~p |- p",           "~(p | q) |- ~p & ~q", "p & ~p |- F",
      "T |- ~p | ~~p",  "p & (q | r) |- (p & q) | (p & r)",          "p | q |- p",
      "~~(p & q) |- ~~p & ~~q", "T |- ~F", "~p |- ~~~p", "p |- q",
  };
  for (const auto& space : spaces) {
    AlgebraStructure alg = rs_algebra(space, RsVariant::Pseudo);
    for (const char* text : pseudo_sequents) {
      CAPTURE(space.size());
      CAPTURE(text);
      const Sequent s = parse_sequent(text);
      CHECK(rs_valid(s, space, RsVariant::Pseudo).valid == order_valid(s, alg).valid);
    }
  }
  std::vector<const char*> dual_sequents = {
      "!!p |- p", "p |- !!p", "!(p & q) |- !p | !q", "T |- p | !p",
      "!p & !!p |- F", "!T |- F", "!!!p |- !p", "q |- p | q", "p & q |- q | r",
  };
  for (const auto& space : spaces) {
    AlgebraStructure alg = rs_algebra(space, RsVariant::Dual);
    for (const char* text : dual_sequents) {
      CAPTURE(space.size());
      CAPTURE(text);
      const Sequent s = parse_sequent(text);
      CHECK(rs_valid(s, space, RsVariant::Dual).valid == order_valid(s, alg).valid);
    }
  }
}

TEST_CASE("rough countermodels are concrete subsets that reproduce the failure") {
  ApproximationSpace space({"a", "b", "c"}, {{"a", "b"}, {"c"}});
  RsVerdict v = rs_valid(parse_sequent("~~p |- p"), space, RsVariant::Pseudo);
  REQUIRE(!v.valid);
  REQUIRE(v.countermodel.count("p"));
  // Re-evaluate through the pair algebra: the lower containment must fail.
  AlgebraStructure alg = rs_algebra(space, RsVariant::Pseudo);
  const auto& pairs = alg.rough_meta->pairs;
  RoughPair pv = approximate(space, v.countermodel.at("p"));
  int idx = -1;
  for (int i = 0; i < alg.lattice.size(); ++i)
    if (pairs[i] == pv) idx = i;
  REQUIRE(idx >= 0);
  Assignment val{{"p", idx}};
  RoughPair lhs = pairs[evaluate(parse_formula("~~p"), alg, val)];
  RoughPair rhs = pairs[evaluate(parse_formula("p"), alg, val)];
  CHECK((lhs.lower & ~rhs.lower) != 0);

  RsVerdict dual = rs_valid(parse_sequent("p |- !!p"), space, RsVariant::Dual);
  REQUIRE(!dual.valid);
  AlgebraStructure dalg = rs_algebra(space, RsVariant::Dual);
  RoughPair dpv = approximate(space, dual.countermodel.at("p"));
  int didx = -1;
  for (int i = 0; i < dalg.lattice.size(); ++i)
    if (dalg.rough_meta->pairs[i] == dpv) didx = i;
  REQUIRE(didx >= 0);
  Assignment dval{{"p", didx}};
  RoughPair dlhs = dalg.rough_meta->pairs[evaluate(parse_formula("p"), dalg, dval)];
  RoughPair drhs = dalg.rough_meta->pairs[evaluate(parse_formula("!!p"), dalg, dval)];
  CHECK((dlhs.upper & ~drhs.upper) != 0);
}

TEST_CASE("valuation scans refuse oversized jobs unless forced") {
  AlgebraStructure big = interval_power(BooleanAlgebra(3), 3);  // 64 elements
  // Four variables give 64^4 > 1e6 valuations.
  const Sequent s = parse_sequent("p & q & r & s |- p");
  CHECK_THROWS_AS(order_valid(s, big), TooLarge);
  AlgebraStructure small = three_pseudo();
  CHECK(order_valid(parse_sequent("p & q & r & s |- p"), small).valid);
}
