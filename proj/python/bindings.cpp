#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "stonework/algebra.hpp"
#include "stonework/calculus.hpp"
#include "stonework/errors.hpp"
#include "stonework/formula.hpp"
#include "stonework/lattice.hpp"
#include "stonework/roughset.hpp"
#include "stonework/semantics.hpp"

namespace py = pybind11;
namespace sw = stonework;

namespace {

sw::RsVariant rs_variant(const std::string& name) {
  if (name == "pseudo") return sw::RsVariant::Pseudo;
  if (name == "dual") return sw::RsVariant::Dual;
  throw sw::InvalidInput("unknown rough-set variant '" + name + "' (expected pseudo or dual)");
}

sw::PreserveMode preserve_mode(const std::string& name) {
  if (name == "truth") return sw::PreserveMode::Truth;
  if (name == "falsity") return sw::PreserveMode::Falsity;
  if (name == "both") return sw::PreserveMode::Both;
  throw sw::InvalidInput("unknown preservation mode '" + name +
                         "' (expected truth, falsity or both)");
}

sw::RuleVariant rule_variant(const std::string& name) {
  if (name == "corrected") return sw::RuleVariant::Corrected;
  if (name == "as-written") return sw::RuleVariant::AsWritten;
  throw sw::InvalidInput("unknown rule variant '" + name + "' (expected corrected or as-written)");
}

std::vector<std::string> point_names(const sw::ApproximationSpace& space, sw::PointSet s) {
  std::vector<std::string> out;
  for (int i = 0; i < space.size(); ++i)
    if (s & (sw::PointSet{1} << i)) out.push_back(space.universe()[i]);
  return out;
}

std::map<std::string, std::string> named_assignment(const sw::AlgebraStructure& alg,
                                                    const sw::Assignment& val) {
  std::map<std::string, std::string> out;
  for (const auto& [var, value] : val) out[var] = alg.lattice.name(value);
  return out;
}

py::tuple verdict_tuple(const sw::AlgebraStructure& alg, const sw::Verdict& v) {
  return py::make_tuple(v.valid, named_assignment(alg, v.countermodel));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Finite-lattice workbench: Stone and double Stone algebras, rough "
            "sets and the matching multi-valued logics";

  py::register_exception<sw::Error>(m, "StoneworkError");

  py::class_<sw::AlgebraStructure>(m, "Algebra")
      .def_property_readonly("size",
                             [](const sw::AlgebraStructure& a) { return a.lattice.size(); })
      .def_property_readonly("names",
                             [](const sw::AlgebraStructure& a) { return a.lattice.names(); })
      .def_property_readonly("has_pseudo", &sw::AlgebraStructure::has_pseudo)
      .def_property_readonly("has_dual", &sw::AlgebraStructure::has_dual)
      .def_readonly("is_stone", &sw::AlgebraStructure::is_stone)
      .def_readonly("is_dual_stone", &sw::AlgebraStructure::is_dual_stone)
      .def_readonly("is_double_stone", &sw::AlgebraStructure::is_double_stone)
      .def_property_readonly("bottom",
                             [](const sw::AlgebraStructure& a) { return a.lattice.bottom(); })
      .def_property_readonly("top", [](const sw::AlgebraStructure& a) { return a.lattice.top(); })
      .def("name", [](const sw::AlgebraStructure& a, int x) { return a.lattice.name(x); },
           py::arg("element"))
      .def("index_of",
           [](const sw::AlgebraStructure& a, const std::string& name) {
             return a.lattice.index_of(name);
           },
           py::arg("name"))
      .def("leq", [](const sw::AlgebraStructure& a, int x, int y) { return a.lattice.leq(x, y); })
      .def("meet",
           [](const sw::AlgebraStructure& a, int x, int y) { return a.lattice.meet(x, y); })
      .def("join",
           [](const sw::AlgebraStructure& a, int x, int y) { return a.lattice.join(x, y); })
      .def("pseudo", [](const sw::AlgebraStructure& a, int x) { return a.pseudo(x); },
           py::arg("element"))
      .def("dual", [](const sw::AlgebraStructure& a, int x) { return a.dual(x); },
           py::arg("element"))
      .def("__len__", [](const sw::AlgebraStructure& a) { return a.lattice.size(); })
      .def("__repr__", [](const sw::AlgebraStructure& a) {
        return "<Algebra of " + std::to_string(a.lattice.size()) + " elements>";
      });

  py::class_<sw::Formula>(m, "Formula")
      .def_property_readonly("variables", &sw::Formula::variables)
      .def_property_readonly("depth", &sw::Formula::depth)
      .def("__eq__", [](const sw::Formula& a, const sw::Formula& b) { return a == b; },
           py::is_operator())
      .def("__str__", &sw::Formula::to_string)
      .def("__repr__",
           [](const sw::Formula& f) { return "<Formula " + f.to_string() + ">"; });

  py::class_<sw::Sequent>(m, "Sequent")
      .def_property_readonly("lhs", [](const sw::Sequent& s) { return s.lhs; })
      .def_property_readonly("rhs", [](const sw::Sequent& s) { return s.rhs; })
      .def("__eq__", [](const sw::Sequent& a, const sw::Sequent& b) { return a == b; },
           py::is_operator())
      .def("__str__", &sw::Sequent::to_string)
      .def("__repr__",
           [](const sw::Sequent& s) { return "<Sequent " + s.to_string() + ">"; });

  m.def("parse_formula", &sw::parse_formula, py::arg("text"));
  m.def("parse_sequent", &sw::parse_sequent, py::arg("text"));

  m.def("boolean_algebra", &sw::boolean_algebra, py::arg("atoms"),
        "Subset algebra on the given number of atoms, with both negations.");
  m.def("three_pseudo", &sw::three_pseudo,
        "Three-element chain carrying only the pseudo-complement.");
  m.def("three_dual", &sw::three_dual,
        "Three-element chain carrying only the dual negation.");
  m.def("four_chain", &sw::four_chain, "Four-element double Stone chain.");
  m.def(
      "interval_power",
      [](int atoms, int arity) { return sw::interval_power(sw::BooleanAlgebra(atoms), arity); },
      py::arg("atoms"), py::arg("arity"),
      "Monotone `arity`-tuples over the Boolean algebra on `atoms` atoms.");
  m.def(
      "rs_algebra",
      [](const std::vector<std::string>& universe,
         const std::vector<std::vector<std::string>>& blocks, const std::string& variant) {
        return sw::rs_algebra(sw::ApproximationSpace(universe, blocks), rs_variant(variant));
      },
      py::arg("universe"), py::arg("blocks"), py::arg("variant"),
      "Rough-set algebra of an approximation space; variant is 'pseudo' or 'dual'.");

  m.def(
      "rough_sets",
      [](const std::vector<std::string>& universe,
         const std::vector<std::vector<std::string>>& blocks) {
        const sw::ApproximationSpace space(universe, blocks);
        std::vector<std::pair<std::vector<std::string>, std::vector<std::string>>> out;
        for (const sw::RoughPair& p : sw::rough_sets(space))
          out.emplace_back(point_names(space, p.lower), point_names(space, p.upper));
        return out;
      },
      py::arg("universe"), py::arg("blocks"),
      "All (lower, upper) approximation pairs of the space, as point-name lists.");

  m.def(
      "order_valid",
      [](const sw::Sequent& s, const sw::AlgebraStructure& alg) {
        return verdict_tuple(alg, sw::order_valid(s, alg));
      },
      py::arg("sequent"), py::arg("algebra"));
  m.def(
      "order_valid",
      [](const std::string& s, const sw::AlgebraStructure& alg) {
        return verdict_tuple(alg, sw::order_valid(sw::parse_sequent(s), alg));
      },
      py::arg("sequent"), py::arg("algebra"),
      "Whether every valuation sends the left side below the right side; "
      "returns (valid, countermodel).");

  m.def(
      "preserve_valid",
      [](const sw::Sequent& s, const sw::AlgebraStructure& alg, const std::string& mode) {
        return verdict_tuple(alg, sw::preserve_valid(s, alg, preserve_mode(mode)));
      },
      py::arg("sequent"), py::arg("algebra"), py::arg("mode"));
  m.def(
      "preserve_valid",
      [](const std::string& s, const sw::AlgebraStructure& alg, const std::string& mode) {
        return verdict_tuple(alg, sw::preserve_valid(sw::parse_sequent(s), alg,
                                                     preserve_mode(mode)));
      },
      py::arg("sequent"), py::arg("algebra"), py::arg("mode"),
      "Truth or falsity preservation (or both) over a chain algebra; "
      "returns (valid, countermodel).");

  m.def(
      "rs_valid",
      [](const std::string& s, const std::vector<std::string>& universe,
         const std::vector<std::vector<std::string>>& blocks, const std::string& variant) {
        const sw::ApproximationSpace space(universe, blocks);
        const sw::RsVerdict v = sw::rs_valid(sw::parse_sequent(s), space, rs_variant(variant));
        std::map<std::string, std::vector<std::string>> witness;
        for (const auto& [var, subset] : v.countermodel)
          witness[var] = point_names(space, subset);
        return py::make_tuple(v.valid, witness);
      },
      py::arg("sequent"), py::arg("universe"), py::arg("blocks"), py::arg("variant"),
      "Pointwise rough-set validity over all rough valuations of the space; "
      "returns (valid, countermodel-subsets).");

  m.def(
      "audit",
      [](const std::string& logic, const sw::AlgebraStructure& alg, int depth, int vars,
         const std::string& variant) {
        const sw::AuditReport report =
            sw::soundness_audit(sw::calculus(logic, rule_variant(variant)), alg, depth, vars);
        return py::make_tuple(report.clean(), report.to_text());
      },
      py::arg("logic"), py::arg("algebra"), py::arg("depth") = 2, py::arg("vars") = 2,
      py::arg("variant") = "corrected",
      "Audits every rule schema of the named calculus against the algebra; "
      "returns (clean, report-text).");

  m.def(
      "check_derivation",
      [](const std::string& logic, const std::string& text, const std::string& variant) {
        const sw::CheckResult r = sw::check_derivation(
            sw::calculus(logic, rule_variant(variant)), sw::parse_derivation(text));
        return py::make_tuple(r.ok, r.failed_step, r.reason);
      },
      py::arg("logic"), py::arg("text"), py::arg("variant") = "corrected",
      "Checks a step-per-line derivation; returns (ok, failed-step, reason).");

  m.def(
      "canonical_iso",
      [](int index_count, int arity) {
        const sw::OrderMap iso = sw::canonical_iso(index_count, arity);
        std::vector<std::pair<std::string, std::string>> out;
        for (int a = 0; a < iso.source.size(); ++a)
          out.emplace_back(iso.source.name(a), iso.target.name(iso.assignment[a]));
        return out;
      },
      py::arg("index_count"), py::arg("arity"),
      "Element map of the canonical isomorphism from a chain power onto the "
      "matching interval power.");
}
