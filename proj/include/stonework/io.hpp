#pragma once

#include <string>

#include "json.hpp"
#include "stonework/algebra.hpp"

namespace stonework {

// Algebra file format (JSON):
//
//   {
//     "elements": ["0", "a", "1"],
//     "covers":   [["0", "a"], ["a", "1"]],
//     "neg_pseudo": {"0": "1", "a": "0", "1": "0"},   // optional
//     "neg_dual":   {"0": "1", "a": "1", "1": "0"}    // optional
//   }
//
// The lattice is rebuilt from elements and covers. A negation table given in
// the file is cross-checked against the table derived from the order; any
// disagreement raises NegationMismatch. When a table is present the loaded
// algebra carries that negation; tables that are absent from the file are
// dropped even if the order would support them, so the file controls the
// signature. A file with no negation keys keeps everything the order offers.
AlgebraStructure read_algebra_json(const nlohmann::json& j);
nlohmann::json write_algebra_json(const AlgebraStructure& a);

AlgebraStructure load_algebra(const std::string& path);
void save_algebra(const AlgebraStructure& a, const std::string& path);

// Approximation space file format (JSON):
//
//   {"universe": ["u", "u'"], "blocks": [["u", "u'"]]}
ApproximationSpace read_space_json(const nlohmann::json& j);
nlohmann::json write_space_json(const ApproximationSpace& s);

ApproximationSpace load_space(const std::string& path);

// Graphviz view of the order diagram: one node per element, one edge per
// cover pair pointing upward, negation values in the node tooltips.
std::string to_dot(const AlgebraStructure& a);

}  // namespace stonework
