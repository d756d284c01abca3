#include "stonework/io.hpp"

#include <fstream>

namespace stonework {

namespace {

std::vector<std::string> string_list(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_array())
    throw InvalidInput(std::string("expected an array under '") + key + "'");
  std::vector<std::string> out;
  for (const auto& item : j[key]) {
    if (!item.is_string()) throw InvalidInput(std::string("'") + key + "' must contain strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<int> negation_table(const nlohmann::json& j, const FiniteLattice& L) {
  if (!j.is_object()) throw InvalidInput("a negation table must be an object");
  if (static_cast<int>(j.size()) != L.size())
    throw InvalidInput("negation table must list every element exactly once");
  std::vector<int> table(L.size(), -1);
  for (const auto& [from, to] : j.items()) {
    if (!to.is_string()) throw InvalidInput("negation values must be element names");
    table[L.index_of(from)] = L.index_of(to.get<std::string>());
  }
  return table;
}

}  // namespace

AlgebraStructure read_algebra_json(const nlohmann::json& j) {
  const auto elements = string_list(j, "elements");

  if (!j.contains("covers") || !j["covers"].is_array())
    throw InvalidInput("expected an array under 'covers'");
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& pair : j["covers"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_string() || !pair[1].is_string())
      throw InvalidInput("each cover must be a [lower, upper] pair of element names");
    covers.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
  }

  AlgebraStructure alg = classify(build_lattice(elements, covers));

  const bool has_pseudo_key = j.contains("neg_pseudo");
  const bool has_dual_key = j.contains("neg_dual");
  if (has_pseudo_key) {
    const auto table = negation_table(j["neg_pseudo"], alg.lattice);
    if (!alg.pseudo_neg || *alg.pseudo_neg != table)
      throw NegationMismatch("neg_pseudo disagrees with the pseudo-complement of the order");
  }
  if (has_dual_key) {
    const auto table = negation_table(j["neg_dual"], alg.lattice);
    if (!alg.dual_neg || *alg.dual_neg != table)
      throw NegationMismatch("neg_dual disagrees with the dual negation of the order");
  }
  if (has_pseudo_key || has_dual_key)
    alg = restrict_signature(std::move(alg), has_pseudo_key, has_dual_key);
  return alg;
}

nlohmann::json write_algebra_json(const AlgebraStructure& a) {
  nlohmann::json j;
  j["elements"] = a.lattice.names();

  nlohmann::json covers = nlohmann::json::array();
  for (const auto& [lo, hi] : a.lattice.covers())
    covers.push_back({a.lattice.name(lo), a.lattice.name(hi)});
  j["covers"] = std::move(covers);

  if (a.has_pseudo()) {
    nlohmann::json table;
    for (int x = 0; x < a.lattice.size(); ++x)
      table[a.lattice.name(x)] = a.lattice.name(a.pseudo(x));
    j["neg_pseudo"] = std::move(table);
  }
  if (a.has_dual()) {
    nlohmann::json table;
    for (int x = 0; x < a.lattice.size(); ++x)
      table[a.lattice.name(x)] = a.lattice.name(a.dual(x));
    j["neg_dual"] = std::move(table);
  }
  return j;
}

namespace {

nlohmann::json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput("cannot parse '" + path + "': " + e.what());
  }
  return j;
}

}  // namespace

AlgebraStructure load_algebra(const std::string& path) {
  return read_algebra_json(load_json(path));
}

void save_algebra(const AlgebraStructure& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << write_algebra_json(a).dump(2) << '\n';
}

ApproximationSpace read_space_json(const nlohmann::json& j) {
  const auto universe = string_list(j, "universe");

  if (!j.contains("blocks") || !j["blocks"].is_array())
    throw InvalidInput("expected an array under 'blocks'");
  std::vector<std::vector<std::string>> blocks;
  for (const auto& block : j["blocks"]) {
    if (!block.is_array()) throw InvalidInput("each block must be an array of point names");
    std::vector<std::string> points;
    for (const auto& p : block) {
      if (!p.is_string()) throw InvalidInput("block entries must be point names");
      points.push_back(p.get<std::string>());
    }
    blocks.push_back(std::move(points));
  }
  return ApproximationSpace(universe, blocks);
}

nlohmann::json write_space_json(const ApproximationSpace& s) {
  nlohmann::json j;
  j["universe"] = s.universe();

  nlohmann::json blocks = nlohmann::json::array();
  for (PointSet block : s.blocks()) {
    nlohmann::json points = nlohmann::json::array();
    for (int i = 0; i < s.size(); ++i)
      if (block & (PointSet{1} << i)) points.push_back(s.universe()[i]);
    blocks.push_back(std::move(points));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

ApproximationSpace load_space(const std::string& path) {
  return read_space_json(load_json(path));
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const AlgebraStructure& a) {
  std::string out = "digraph lattice {\n  rankdir=BT;\n  node [shape=box];\n";
  for (int x = 0; x < a.lattice.size(); ++x) {
    std::string tooltip;
    if (a.has_pseudo()) tooltip += "~ = " + a.lattice.name(a.pseudo(x));
    if (a.has_dual()) {
      if (!tooltip.empty()) tooltip += ", ";
      tooltip += "! = " + a.lattice.name(a.dual(x));
    }
    out += "  n" + std::to_string(x) + " [label=\"" + dot_escape(a.lattice.name(x)) + "\"";
    if (!tooltip.empty()) out += ", tooltip=\"" + dot_escape(tooltip) + "\"";
    out += "];\n";
  }
  for (const auto& [lo, hi] : a.lattice.covers())
    out += "  n" + std::to_string(lo) + " -> n" + std::to_string(hi) + ";\n";
  out += "}\n";
  return out;
}

}  // namespace stonework
