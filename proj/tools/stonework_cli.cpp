// Command-line front end: sequent checking, algebra construction and
// classification, canonical isomorphisms, rough sets, soundness audits and
// derivation checking. Exit codes: 0 = success/valid, 1 = invalid or
// violation found, 2 = usage or input error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "stonework/calculus.hpp"
#include "stonework/io.hpp"
#include "stonework/semantics.hpp"

namespace sw = stonework;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

sw::AlgebraStructure logic_algebra(const std::string& logic) {
  if (logic == "LS") return sw::three_pseudo();
  if (logic == "LDS") return sw::three_dual();
  if (logic == "LDBS") return sw::four_chain();
  throw sw::InvalidInput("unknown logic '" + logic + "' (expected LS, LDS or LDBS)");
}

std::string format_countermodel(const sw::Verdict& v, const sw::FiniteLattice& L) {
  std::string out = "countermodel:";
  for (const auto& [var, value] : v.countermodel) out += " " + var + "=" + L.name(value);
  return out;
}

std::string format_countermodel(const sw::RsVerdict& v, const sw::ApproximationSpace& space) {
  std::string out = "countermodel:";
  for (const auto& [var, subset] : v.countermodel)
    out += " " + var + "=" + space.set_name(subset);
  return out;
}

struct CheckOptions {
  std::string logic;
  std::string semantics = "order";
  std::string sequent;
  std::string space_file;
  bool force = false;
};

int run_check(const CheckOptions& opt, bool verdict_line) {
  const sw::Sequent sequent = sw::parse_sequent(opt.sequent);

  if (opt.semantics == "roughset") {
    if (opt.logic == "LDBS") {
      std::cerr << "roughset semantics covers LS and LDS only\n";
      return kExitUsage;
    }
    const sw::RsVariant variant =
        opt.logic == "LS" ? sw::RsVariant::Pseudo : sw::RsVariant::Dual;
    logic_algebra(opt.logic);  // validates the name
    const sw::ApproximationSpace space =
        opt.space_file.empty() ? sw::representation_space({"u"}).space
                               : sw::load_space(opt.space_file);
    const sw::RsVerdict verdict = sw::rs_valid(sequent, space, variant, opt.force);
    if (verdict.valid) {
      std::cout << "VALID\n";
      return kExitValid;
    }
    if (verdict_line) std::cout << "INVALID\n";
    std::cout << format_countermodel(verdict, space) << "\n";
    return kExitInvalid;
  }

  const sw::AlgebraStructure alg = logic_algebra(opt.logic);
  sw::Verdict verdict;
  if (opt.semantics == "order") {
    verdict = sw::order_valid(sequent, alg, opt.force);
  } else {
    sw::PreserveMode mode;
    if (opt.semantics == "truth")
      mode = sw::PreserveMode::Truth;
    else if (opt.semantics == "falsity")
      mode = sw::PreserveMode::Falsity;
    else if (opt.semantics == "both")
      mode = sw::PreserveMode::Both;
    else
      throw sw::InvalidInput("unknown semantics '" + opt.semantics + "'");
    verdict = sw::preserve_valid(sequent, alg, mode, opt.force);
  }

  if (verdict.valid) {
    std::cout << "VALID\n";
    return kExitValid;
  }
  if (verdict_line) std::cout << "INVALID\n";
  std::cout << format_countermodel(verdict, alg.lattice) << "\n";
  return kExitInvalid;
}

int run_algebra_build(const std::string& kind, int n, const std::string& dot_file) {
  sw::AlgebraStructure alg;
  if (kind == "boolean")
    alg = sw::boolean_algebra(n);
  else if (kind == "b2")
    alg = sw::interval_power(sw::BooleanAlgebra(n), 2);
  else if (kind == "b3")
    alg = sw::interval_power(sw::BooleanAlgebra(n), 3);
  else if (kind == "chain")
    alg = sw::chain_algebra(n);
  else
    throw sw::InvalidInput("unknown algebra kind '" + kind +
                           "' (expected boolean, b2, b3 or chain)");

  std::cout << sw::write_algebra_json(alg).dump(2) << "\n";
  if (!dot_file.empty()) {
    std::ofstream out(dot_file);
    if (!out) throw sw::InvalidInput("cannot write '" + dot_file + "'");
    out << sw::to_dot(alg);
  }
  return kExitValid;
}

int run_algebra_classify(const std::string& file) {
  const sw::AlgebraStructure alg = sw::load_algebra(file);
  auto yesno = [](bool b) { return b ? "yes" : "no"; };
  std::cout << "elements: " << alg.lattice.size() << "\n"
            << "bounded distributive: " << yesno(sw::is_bounded_distributive(alg.lattice)) << "\n"
            << "pseudo-complement: " << (alg.has_pseudo() ? "total" : "absent") << "\n"
            << "dual negation: " << (alg.has_dual() ? "total" : "absent") << "\n"
            << "stone: " << yesno(alg.is_stone) << "\n"
            << "dual stone: " << yesno(alg.is_dual_stone) << "\n"
            << "double stone: " << yesno(alg.is_double_stone) << "\n";
  return kExitValid;
}

int run_iso(const std::string& kind, int index_count) {
  const int arity = kind == "three-two" ? 2 : 3;
  sw::OrderMap iso;
  try {
    iso = sw::canonical_iso(index_count, arity);
  } catch (const sw::ExtensionNotIso& e) {
    std::cout << "INVALID ISO: " << e.what() << "\n";
    return kExitInvalid;
  }
  std::cout << "VALID ISO (" << iso.source.size() << " elements)\n";
  for (int x = 0; x < iso.source.size(); ++x)
    std::cout << iso.source.name(x) << " -> " << iso.target.name(iso.assignment[x]) << "\n";
  return kExitValid;
}

int run_roughset_list(const std::string& space_file) {
  const sw::ApproximationSpace space = sw::load_space(space_file);
  const auto pairs = sw::rough_sets(space);
  std::cout << "rough sets: " << pairs.size() << "\n";
  for (const auto& p : pairs) std::cout << sw::rough_pair_name(space, p) << "\n";
  return kExitValid;
}

int run_roughset_algebra(const std::string& space_file, const std::string& variant) {
  const sw::ApproximationSpace space = sw::load_space(space_file);
  const sw::RsVariant v = variant == "pseudo" ? sw::RsVariant::Pseudo : sw::RsVariant::Dual;
  std::cout << sw::write_algebra_json(sw::rs_algebra(space, v)).dump(2) << "\n";
  return kExitValid;
}

int run_audit(const std::string& logic, const std::string& variant, const std::string& algebra,
              int depth, int vars) {
  const sw::RuleVariant rule_variant =
      variant == "as-written" ? sw::RuleVariant::AsWritten : sw::RuleVariant::Corrected;
  const sw::Calculus c = sw::calculus(logic, rule_variant);

  sw::AlgebraStructure alg;
  if (algebra == "3s")
    alg = sw::three_pseudo();
  else if (algebra == "3d")
    alg = sw::three_dual();
  else if (algebra == "4")
    alg = sw::four_chain();
  else
    throw sw::InvalidInput("unknown algebra '" + algebra + "' (expected 3s, 3d or 4)");

  const sw::AuditReport report = sw::soundness_audit(c, alg, depth, vars);
  std::cout << report.to_text();
  return report.clean() ? kExitValid : kExitInvalid;
}

int run_prove_check(const std::string& logic, const std::string& variant,
                    const std::string& file) {
  const sw::RuleVariant rule_variant =
      variant == "as-written" ? sw::RuleVariant::AsWritten : sw::RuleVariant::Corrected;
  const sw::Calculus c = sw::calculus(logic, rule_variant);

  std::ifstream in(file);
  if (!in) throw sw::InvalidInput("cannot open '" + file + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();

  const sw::Derivation d = sw::parse_derivation(buffer.str());
  const sw::CheckResult result = sw::check_derivation(c, d);
  if (result.ok) {
    std::cout << "OK (" << d.steps.size() << " steps)\n";
    return kExitValid;
  }
  std::cout << "FAIL step " << result.failed_step << ": " << result.reason << "\n";
  return kExitInvalid;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Stone / dual Stone / double Stone algebra workbench"};
  app.require_subcommand(1);

  CheckOptions check_opt;
  auto add_check_options = [&](CLI::App* cmd) {
    cmd->add_option("--logic", check_opt.logic, "LS, LDS or LDBS")->required();
    cmd->add_option("--semantics", check_opt.semantics,
                    "order, truth, falsity, both or roughset (default order)");
    cmd->add_option("--space", check_opt.space_file,
                    "approximation space file for roughset semantics");
    cmd->add_flag("--force", check_opt.force, "run very large valuation scans anyway");
    cmd->add_option("sequent", check_opt.sequent, "sequent, e.g. \"~~p |- p\"")->required();
  };
  CLI::App* check = app.add_subcommand("check", "decide a sequent and print a countermodel");
  add_check_options(check);
  CLI::App* countermodel =
      app.add_subcommand("countermodel", "like check, but print only the countermodel");
  add_check_options(countermodel);

  CLI::App* algebra = app.add_subcommand("algebra", "build or classify algebras");
  algebra->require_subcommand(1);
  std::string build_kind;
  int build_n = 0;
  std::string dot_file;
  CLI::App* build = algebra->add_subcommand("build", "construct a named algebra as JSON");
  build->add_option("kind", build_kind, "boolean, b2, b3 or chain")->required();
  build->add_option("n", build_n, "atom count (boolean/b2/b3) or chain length")->required();
  build->add_option("--dot", dot_file, "also write a Graphviz file");
  std::string classify_file;
  CLI::App* classify_cmd = algebra->add_subcommand("classify", "classify an algebra file");
  classify_cmd->add_option("file", classify_file, "algebra JSON file")->required();

  std::string iso_kind;
  int iso_n = 0;
  CLI::App* iso = app.add_subcommand("iso", "verify a canonical isomorphism");
  iso->add_option("kind", iso_kind, "three-two or four-three")
      ->required()
      ->check(CLI::IsMember({"three-two", "four-three"}));
  iso->add_option("n", iso_n, "index count")->required();

  CLI::App* roughset = app.add_subcommand("roughset", "rough sets of an approximation space");
  roughset->require_subcommand(1);
  std::string space_file;
  roughset->add_option("--space", space_file, "approximation space JSON file")->required();
  roughset->add_subcommand("list", "list all rough pairs");
  std::string rs_variant;
  CLI::App* rs_algebra_cmd = roughset->add_subcommand("algebra", "emit the rough-set algebra");
  rs_algebra_cmd->add_option("variant", rs_variant, "pseudo or dual")
      ->required()
      ->check(CLI::IsMember({"pseudo", "dual"}));

  std::string audit_logic, audit_variant = "corrected", audit_algebra;
  int audit_depth = 2, audit_vars = 2;
  CLI::App* audit = app.add_subcommand("audit", "soundness audit of a calculus");
  audit->add_option("--logic", audit_logic, "DLL, BDLL, LS, LDS or LDBS")->required();
  audit->add_option("--variant", audit_variant, "as-written or corrected (default corrected)")
      ->check(CLI::IsMember({"as-written", "corrected"}));
  audit->add_option("--algebra", audit_algebra, "3s, 3d or 4")->required();
  audit->add_option("--depth", audit_depth, "witness search depth (default 2)");
  audit->add_option("--vars", audit_vars, "witness search variable count (default 2)");

  std::string prove_logic, prove_variant = "corrected", prove_file;
  CLI::App* prove = app.add_subcommand("prove-check", "check a derivation file");
  prove->add_option("--logic", prove_logic, "DLL, BDLL, LS, LDS or LDBS")->required();
  prove->add_option("--variant", prove_variant, "as-written or corrected (default corrected)")
      ->check(CLI::IsMember({"as-written", "corrected"}));
  prove->add_option("file", prove_file, "derivation file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) return run_check(check_opt, true);
    if (countermodel->parsed()) return run_check(check_opt, false);
    if (build->parsed()) return run_algebra_build(build_kind, build_n, dot_file);
    if (classify_cmd->parsed()) return run_algebra_classify(classify_file);
    if (iso->parsed()) return run_iso(iso_kind, iso_n);
    if (roughset->parsed()) {
      if (rs_algebra_cmd->parsed()) return run_roughset_algebra(space_file, rs_variant);
      return run_roughset_list(space_file);
    }
    if (audit->parsed())
      return run_audit(audit_logic, audit_variant, audit_algebra, audit_depth, audit_vars);
    if (prove->parsed()) return run_prove_check(prove_logic, prove_variant, prove_file);
  } catch (const sw::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
