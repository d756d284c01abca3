#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stonework/formula.hpp"
#include "stonework/semantics.hpp"

namespace stonework {

// A rule schema: zero or more premise patterns and a conclusion pattern.
// Patterns are ordinary sequents whose variables A, B, C, D act as
// metavariables. A schema without premises is an axiom schema.
struct RuleSchema {
  std::string name;
  std::vector<Sequent> premises;
  Sequent conclusion;
};

// One calculus ships in two variants: Corrected is the default everywhere;
// AsWritten changes a single LDBS schema (see `calculus`).
enum class RuleVariant { Corrected, AsWritten };

struct Calculus {
  std::string name;
  Signature signature;
  std::vector<RuleSchema> schemas;

  // All schemas with the given name; elimination/introduction rules come in
  // same-named pairs, so a justification may match either one.
  std::vector<const RuleSchema*> find(const std::string& rule) const;
  // Distinct schema names in first-appearance order.
  std::vector<std::string> schema_names() const;
};

// Builds one of the calculi DLL, BDLL, LS, LDS, LDBS (case-insensitive,
// underscores ignored, so "L_S" works too):
//
//   DLL    lattice rules: reflexivity, transitivity, introduction and
//          elimination for & and |, distributivity
//   BDLL   DLL plus the constant axioms A |- T and F |- A
//   LS     BDLL plus six rules for ~
//   LDS    BDLL plus six rules for !
//   LDBS   BDLL plus seven rule pairs for ~ and !
//
// The AsWritten variant of LDBS keeps the axiom A | !A |- F; the Corrected
// variant replaces it with T |- A | !A (the only difference between the two).
// The variant flag is ignored by the other calculi.
Calculus calculus(const std::string& name, RuleVariant variant = RuleVariant::Corrected);

struct DerivationStep {
  Sequent sequent;
  std::string rule;
  std::vector<int> premises;                     // 1-based indices of earlier steps
  std::map<std::string, Formula> substitution;   // empty = infer by matching
};

struct Derivation {
  std::vector<DerivationStep> steps;
};

// One step per line:  index: <sequent> ; <rule>(<premise indices>) ; A=<formula>,...
// The third field is optional; '#' starts a comment line. Indices are
// sequential from 1. Throws InvalidInput or SyntaxError on malformed text.
Derivation parse_derivation(const std::string& text);

struct CheckResult {
  bool ok = true;
  int failed_step = 0;  // 1-based; 0 when ok
  std::string reason;
};

// Verifies every step against the calculus: the step's sequent must be the
// schema conclusion under a substitution whose premise instances equal the
// referenced earlier steps, and all formulas must stay inside the calculus
// signature. Reports the first failing step.
CheckResult check_derivation(const Calculus& c, const Derivation& d);

struct AuditViolation {
  std::string schema;
  std::map<std::string, Formula> instance;  // metavariable instantiation
  Assignment countermodel;                  // valuation over the instance's variables
};

struct AuditEntry {
  std::string schema;
  // True when the schema was proved sound for every instantiation (of any
  // depth) by checking it pointwise over the algebra's elements.
  bool pattern_sound = false;
  std::optional<AuditViolation> violation;
};

struct AuditReport {
  std::vector<AuditEntry> entries;         // sorted by schema name
  std::vector<std::string> element_names;  // of the audited algebra, for printing
  bool clean() const;
  std::string to_text() const;
};

// Checks every schema of the calculus against an algebra. A schema passes
// outright when it is pointwise sound over the algebra's elements (which
// covers all instantiations); otherwise instantiations by formulas of the
// given depth over `var_count` variables are scanned for a concrete
// violation: an invalid axiom instance, or a rule instance whose premises
// are all valid while its conclusion is not. Violations carry the first
// (in enumeration order) failing instantiation and its least countermodel.
AuditReport soundness_audit(const Calculus& c, const AlgebraStructure& A, int depth,
                            int var_count);

}  // namespace stonework
