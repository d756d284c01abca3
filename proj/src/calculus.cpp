#include "stonework/calculus.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace stonework {

namespace {

RuleSchema axiom(std::string name, const std::string& conclusion) {
  return RuleSchema{std::move(name), {}, parse_sequent(conclusion)};
}

RuleSchema rule(std::string name, const std::vector<std::string>& premises,
                const std::string& conclusion) {
  RuleSchema schema{std::move(name), {}, parse_sequent(conclusion)};
  for (const auto& p : premises) schema.premises.push_back(parse_sequent(p));
  return schema;
}

void append_dll(std::vector<RuleSchema>& out) {
  out.push_back(axiom("Reflexivity", "A |- A"));
  out.push_back(rule("Transitivity", {"A |- B", "B |- C"}, "A |- C"));
  out.push_back(axiom("Conj-Elim", "A & B |- A"));
  out.push_back(axiom("Conj-Elim", "A & B |- B"));
  out.push_back(rule("Conj-Intro", {"A |- B", "A |- C"}, "A |- B & C"));
  out.push_back(axiom("Disj-Intro", "A |- A | B"));
  out.push_back(axiom("Disj-Intro", "B |- A | B"));
  out.push_back(rule("Disj-Elim", {"A |- C", "B |- C"}, "A | B |- C"));
  out.push_back(axiom("Distributivity", "A & (B | C) |- (A & B) | (A & C)"));
}

void append_bounds(std::vector<RuleSchema>& out) {
  out.push_back(axiom("Top", "A |- T"));
  out.push_back(axiom("Bottom", "F |- A"));
}

void append_pseudo_rules(std::vector<RuleSchema>& out) {
  out.push_back(rule("S-Contraposition", {"A |- B"}, "~B |- ~A"));
  out.push_back(axiom("Or-Linearity", "~A & ~B |- ~(A | B)"));
  out.push_back(axiom("Nor", "T |- ~F"));
  out.push_back(rule("S-Transposition", {"A & B |- C"}, "A & ~C |- ~B"));
  out.push_back(axiom("S-NonContradiction", "A & ~A |- F"));
  out.push_back(axiom("Stone-Law", "T |- ~A | ~~A"));
}

void append_dual_rules(std::vector<RuleSchema>& out, bool excluded_middle_as_written) {
  out.push_back(rule("DS-Contraposition", {"A |- B"}, "!B |- !A"));
  out.push_back(axiom("And-Linearity", "!(A & B) |- !A | !B"));
  out.push_back(axiom("Neg-Top", "!T |- F"));
  out.push_back(rule("DS-Transposition", {"C |- A | B"}, "!B |- A | !C"));
  out.push_back(excluded_middle_as_written ? axiom("Excluded-Middle", "A | !A |- F")
                                           : axiom("Excluded-Middle", "T |- A | !A"));
  out.push_back(axiom("Dual-Stone-Law", "!A & !!A |- F"));
}

std::string normalize_name(const std::string& name) {
  std::string out;
  for (char c : name)
    if (c != '_') out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

std::vector<const RuleSchema*> Calculus::find(const std::string& rule) const {
  std::vector<const RuleSchema*> out;
  for (const auto& s : schemas)
    if (s.name == rule) out.push_back(&s);
  return out;
}

std::vector<std::string> Calculus::schema_names() const {
  std::vector<std::string> out;
  for (const auto& s : schemas)
    if (std::find(out.begin(), out.end(), s.name) == out.end()) out.push_back(s.name);
  return out;
}

Calculus calculus(const std::string& name, RuleVariant variant) {
  const std::string key = normalize_name(name);
  Calculus c;
  c.name = key;
  if (key == "DLL") {
    c.signature = Signature{false, false, false};
    append_dll(c.schemas);
    return c;
  }
  if (key == "BDLL") {
    c.signature = Signature{true, false, false};
    append_dll(c.schemas);
    append_bounds(c.schemas);
    return c;
  }
  if (key == "LS") {
    c.signature = Signature{true, true, false};
    append_dll(c.schemas);
    append_bounds(c.schemas);
    append_pseudo_rules(c.schemas);
    return c;
  }
  if (key == "LDS") {
    c.signature = Signature{true, false, true};
    append_dll(c.schemas);
    append_bounds(c.schemas);
    append_dual_rules(c.schemas, false);
    return c;
  }
  if (key == "LDBS") {
    c.signature = Signature{true, true, true};
    append_dll(c.schemas);
    append_bounds(c.schemas);
    append_pseudo_rules(c.schemas);
    append_dual_rules(c.schemas, variant == RuleVariant::AsWritten);
    c.schemas.push_back(axiom("Mixed-Or-Linearity", "~A & !B |- !(A | B)"));
    c.schemas.push_back(axiom("Mixed-And-Linearity", "~(A & B) |- ~A | !B"));
    return c;
  }
  throw UnknownCalculus("unknown calculus '" + name + "'");
}

// ---- derivation parsing ----

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

[[noreturn]] void line_error(int line, const std::string& what) {
  throw InvalidInput("line " + std::to_string(line) + ": " + what);
}

}  // namespace

Derivation parse_derivation(const std::string& text) {
  Derivation d;
  int line_no = 0;
  int expected = 1;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    const std::string line = trim(raw);
    if (line.empty()) continue;

    const auto colon = line.find(':');
    if (colon == std::string::npos) line_error(line_no, "missing ':' after the step index");
    const std::string index_text = trim(line.substr(0, colon));
    int index = 0;
    try {
      std::size_t used = 0;
      index = std::stoi(index_text, &used);
      if (used != index_text.size()) line_error(line_no, "malformed step index");
    } catch (const InvalidInput&) {
      throw;
    } catch (const std::exception&) {
      line_error(line_no, "malformed step index");
    }
    if (index != expected)
      line_error(line_no, "step index " + std::to_string(index) + ", expected " +
                              std::to_string(expected));

    const auto fields = split(line.substr(colon + 1), ';');
    if (fields.size() < 2 || fields.size() > 3)
      line_error(line_no, "expected '<sequent> ; <rule>(<premises>) [; <substitution>]'");

    DerivationStep step{parse_sequent(trim(fields[0])), "", {}, {}};

    const std::string rule_field = trim(fields[1]);
    const auto paren = rule_field.find('(');
    if (paren == std::string::npos) {
      step.rule = rule_field;
    } else {
      if (rule_field.back() != ')') line_error(line_no, "unbalanced '(' in the rule field");
      step.rule = trim(rule_field.substr(0, paren));
      const std::string inside = trim(rule_field.substr(paren + 1, rule_field.size() - paren - 2));
      if (!inside.empty()) {
        for (const auto& part : split(inside, ',')) {
          try {
            const int premise = std::stoi(trim(part));
            if (premise < 1 || premise >= index) line_error(line_no, "premise index out of range");
            step.premises.push_back(premise);
          } catch (const InvalidInput&) {
            throw;
          } catch (const std::exception&) {
            line_error(line_no, "malformed premise index '" + trim(part) + "'");
          }
        }
      }
    }
    if (step.rule.empty()) line_error(line_no, "missing rule name");

    if (fields.size() == 3) {
      for (const auto& part : split(fields[2], ',')) {
        const auto eq = part.find('=');
        if (eq == std::string::npos) line_error(line_no, "substitution entries look like A=formula");
        const std::string metavar = trim(part.substr(0, eq));
        if (metavar.empty()) line_error(line_no, "empty metavariable name");
        if (!step.substitution.emplace(metavar, parse_formula(trim(part.substr(eq + 1)))).second)
          line_error(line_no, "metavariable '" + metavar + "' bound twice");
      }
    }

    d.steps.push_back(std::move(step));
    ++expected;
  }
  return d;
}

// ---- derivation checking ----

namespace {

bool in_signature(const Formula& f, const Signature& sig) {
  return (!f.uses_pseudo() || sig.pseudo) && (!f.uses_dual() || sig.dual) &&
         (!f.uses_constants() || sig.constants);
}

bool match(const Formula& pattern, const Formula& instance,
           std::map<std::string, Formula>& bindings) {
  if (pattern.kind() == Kind::Var) {
    auto [it, inserted] = bindings.try_emplace(pattern.var_name(), instance);
    return inserted || it->second == instance;
  }
  if (pattern.kind() != instance.kind()) return false;
  switch (pattern.kind()) {
    case Kind::Top:
    case Kind::Bot:
      return true;
    case Kind::PseudoNeg:
    case Kind::DualNeg:
      return match(pattern.child(), instance.child(), bindings);
    default:
      return match(pattern.left(), instance.left(), bindings) &&
             match(pattern.right(), instance.right(), bindings);
  }
}

bool match_sequent(const Sequent& pattern, const Sequent& instance,
                   std::map<std::string, Formula>& bindings) {
  return match(pattern.lhs, instance.lhs, bindings) && match(pattern.rhs, instance.rhs, bindings);
}

Sequent apply_bindings(const Sequent& pattern, const std::map<std::string, Formula>& bindings) {
  return Sequent{substitute(pattern.lhs, bindings), substitute(pattern.rhs, bindings)};
}

}  // namespace

CheckResult check_derivation(const Calculus& c, const Derivation& d) {
  auto fail = [](int step, std::string reason) {
    return CheckResult{false, step, std::move(reason)};
  };

  for (int i = 1; i <= static_cast<int>(d.steps.size()); ++i) {
    const DerivationStep& step = d.steps[i - 1];

    if (!in_signature(step.sequent.lhs, c.signature) ||
        !in_signature(step.sequent.rhs, c.signature))
      return fail(i, "formula outside the calculus signature");
    for (const auto& [metavar, formula] : step.substitution)
      if (!in_signature(formula, c.signature))
        return fail(i, "substitution for '" + metavar + "' outside the calculus signature");
    for (int p : step.premises)
      if (p < 1 || p >= i) return fail(i, "premise index out of range");

    const auto schemas = c.find(step.rule);
    if (schemas.empty()) return fail(i, "unknown rule '" + step.rule + "'");

    bool justified = false;
    std::string why = "no applicable schema";
    for (const RuleSchema* schema : schemas) {
      if (schema->premises.size() != step.premises.size()) {
        why = "rule '" + step.rule + "' takes " + std::to_string(schema->premises.size()) +
              " premise(s), " + std::to_string(step.premises.size()) + " given";
        continue;
      }

      std::map<std::string, Formula> bindings = step.substitution;
      if (!step.substitution.empty()) {
        if (!(apply_bindings(schema->conclusion, bindings) == step.sequent)) {
          why = "conclusion does not match the schema under the given substitution";
          continue;
        }
      } else if (!match_sequent(schema->conclusion, step.sequent, bindings)) {
        why = "conclusion does not match the schema pattern";
        continue;
      }

      bool premises_ok = true;
      for (std::size_t k = 0; k < schema->premises.size(); ++k) {
        const Sequent& given = d.steps[step.premises[k] - 1].sequent;
        if (!step.substitution.empty()) {
          if (!(apply_bindings(schema->premises[k], bindings) == given)) {
            why = "premise " + std::to_string(k + 1) + " does not match step " +
                  std::to_string(step.premises[k]);
            premises_ok = false;
            break;
          }
        } else if (!match_sequent(schema->premises[k], given, bindings)) {
          why = "premise " + std::to_string(k + 1) + " does not match step " +
                std::to_string(step.premises[k]);
          premises_ok = false;
          break;
        }
      }
      if (premises_ok) {
        justified = true;
        break;
      }
    }
    if (!justified) return fail(i, why);
  }
  return CheckResult{};
}

// ---- soundness audit ----

namespace {

std::vector<std::string> schema_metavars(const RuleSchema& s) {
  std::set<std::string> vars;
  auto add = [&](const Sequent& seq) {
    for (const auto& v : seq.lhs.variables()) vars.insert(v);
    for (const auto& v : seq.rhs.variables()) vars.insert(v);
  };
  for (const auto& p : s.premises) add(p);
  add(s.conclusion);
  return {vars.begin(), vars.end()};
}

// Checks the schema pointwise: metavariables range over the algebra's
// elements directly. If the pointwise implication holds everywhere, every
// instantiation of the schema by formulas is sound, whatever its depth.
bool pattern_sound(const RuleSchema& s, const AlgebraStructure& A) {
  const auto mv = schema_metavars(s);
  std::map<std::string, int> vals;
  for (const auto& v : mv) vals[v] = 0;

  while (true) {
    bool premises_hold = true;
    for (const auto& p : s.premises) {
      if (!A.lattice.leq(evaluate(p.lhs, A, vals), evaluate(p.rhs, A, vals))) {
        premises_hold = false;
        break;
      }
    }
    if (premises_hold &&
        !A.lattice.leq(evaluate(s.conclusion.lhs, A, vals),
                       evaluate(s.conclusion.rhs, A, vals)))
      return false;

    auto it = vals.rbegin();
    while (it != vals.rend() && it->second == A.lattice.size() - 1) (it++)->second = 0;
    if (it == vals.rend()) break;
    ++it->second;
  }
  return true;
}

struct WitnessSpace {
  std::vector<Formula> reps;             // one formula per distinct value table
  std::vector<std::vector<int>> tables;  // reps[i]'s value over every assignment
  std::vector<std::string> vars;         // enumeration variables, most significant first
  long long assignments = 0;
};

WitnessSpace build_witness_space(const Signature& sig, const AlgebraStructure& A, int depth,
                                 int var_count) {
  static const char* kVarNames[] = {"p", "q", "r", "s", "v", "w"};
  if (var_count < 0 || var_count > 6) throw InvalidInput("var count must be between 0 and 6");

  WitnessSpace w;
  for (int i = 0; i < var_count; ++i) w.vars.push_back(kVarNames[i]);

  w.assignments = 1;
  for (int i = 0; i < var_count; ++i) {
    w.assignments *= A.lattice.size();
    if (w.assignments > kMaxValuationCount)
      throw TooLarge("audit valuation space exceeds " + std::to_string(kMaxValuationCount));
  }

  std::map<std::vector<int>, int> seen;
  for (const auto& f : enumerate_formulas(depth, w.vars, sig)) {
    std::vector<int> table(w.assignments);
    Assignment val;
    for (long long t = 0; t < w.assignments; ++t) {
      long long rest = t;
      for (int i = var_count - 1; i >= 0; --i) {
        val[w.vars[i]] = static_cast<int>(rest % A.lattice.size());
        rest /= A.lattice.size();
      }
      table[t] = evaluate(f, A, val);
    }
    if (seen.emplace(table, static_cast<int>(w.reps.size())).second) {
      w.reps.push_back(f);
      w.tables.push_back(std::move(table));
    }
  }
  return w;
}

// Value of a pattern at assignment t when each metavariable is instantiated
// by the representative whose table is given.
int eval_with_tables(const Formula& pattern, const AlgebraStructure& A,
                     const std::map<std::string, const std::vector<int>*>& tables, long long t) {
  switch (pattern.kind()) {
    case Kind::Var:
      return (*tables.at(pattern.var_name()))[t];
    case Kind::Top:
      return A.lattice.top();
    case Kind::Bot:
      return A.lattice.bottom();
    case Kind::PseudoNeg:
      return A.pseudo(eval_with_tables(pattern.child(), A, tables, t));
    case Kind::DualNeg:
      return A.dual(eval_with_tables(pattern.child(), A, tables, t));
    case Kind::And:
      return A.lattice.meet(eval_with_tables(pattern.left(), A, tables, t),
                            eval_with_tables(pattern.right(), A, tables, t));
    default:
      return A.lattice.join(eval_with_tables(pattern.left(), A, tables, t),
                            eval_with_tables(pattern.right(), A, tables, t));
  }
}

std::optional<AuditViolation> find_violation(const RuleSchema& s, const AlgebraStructure& A,
                                             const WitnessSpace& w) {
  const auto mv = schema_metavars(s);
  const std::size_t m = mv.size();

  long long combos = 1;
  for (std::size_t i = 0; i < m; ++i) {
    combos *= static_cast<long long>(w.reps.size());
    if (combos > 5'000'000)
      throw TooLarge("audit instantiation space is too large for a witness search");
  }

  std::vector<int> choice(m, 0);
  while (true) {
    std::map<std::string, const std::vector<int>*> tables;
    for (std::size_t i = 0; i < m; ++i) tables[mv[i]] = &w.tables[choice[i]];

    bool premises_valid = true;
    for (const auto& p : s.premises) {
      for (long long t = 0; t < w.assignments && premises_valid; ++t)
        premises_valid = A.lattice.leq(eval_with_tables(p.lhs, A, tables, t),
                                       eval_with_tables(p.rhs, A, tables, t));
      if (!premises_valid) break;
    }
    if (premises_valid) {
      for (long long t = 0; t < w.assignments; ++t) {
        if (!A.lattice.leq(eval_with_tables(s.conclusion.lhs, A, tables, t),
                           eval_with_tables(s.conclusion.rhs, A, tables, t))) {
          AuditViolation violation;
          violation.schema = s.name;
          for (std::size_t i = 0; i < m; ++i)
            violation.instance.emplace(mv[i], w.reps[choice[i]]);

          const Sequent instance = apply_bindings(s.conclusion, violation.instance);
          std::set<std::string> used;
          for (const auto& v : instance.lhs.variables()) used.insert(v);
          for (const auto& v : instance.rhs.variables()) used.insert(v);
          long long rest = t;
          for (int i = static_cast<int>(w.vars.size()) - 1; i >= 0; --i) {
            const int value = static_cast<int>(rest % A.lattice.size());
            rest /= A.lattice.size();
            if (used.count(w.vars[i])) violation.countermodel[w.vars[i]] = value;
          }
          return violation;
        }
      }
    }

    int i = static_cast<int>(m) - 1;
    while (i >= 0 && choice[i] == static_cast<int>(w.reps.size()) - 1) choice[i--] = 0;
    if (i < 0) break;
    ++choice[i];
  }
  return std::nullopt;
}

}  // namespace

bool AuditReport::clean() const {
  for (const auto& e : entries)
    if (e.violation) return false;
  return true;
}

std::string AuditReport::to_text() const {
  std::size_t width = 6;
  for (const auto& e : entries) width = std::max(width, e.schema.size());

  std::string out;
  for (const auto& e : entries) {
    out += e.schema;
    out.append(width + 2 - e.schema.size(), ' ');
    if (e.violation) {
      out += "FAIL  ";
      bool first = true;
      for (const auto& [metavar, formula] : e.violation->instance) {
        if (!first) out += ", ";
        out += metavar + "=" + formula.to_string();
        first = false;
      }
      if (!e.violation->countermodel.empty()) {
        out += "; countermodel ";
        first = true;
        for (const auto& [var, value] : e.violation->countermodel) {
          if (!first) out += ", ";
          out += var + "=" + element_names[value];
          first = false;
        }
      }
    } else if (e.pattern_sound) {
      out += "pass";
    } else {
      out += "pass (no violation at this depth)";
    }
    out += '\n';
  }
  return out;
}

AuditReport soundness_audit(const Calculus& c, const AlgebraStructure& A, int depth,
                            int var_count) {
  if (c.signature.pseudo && !A.has_pseudo())
    throw MissingConnective("calculus uses ~ but the algebra has no pseudo-complement table");
  if (c.signature.dual && !A.has_dual())
    throw MissingConnective("calculus uses ! but the algebra has no dual negation table");

  AuditReport report;
  report.element_names = A.lattice.names();
  std::optional<WitnessSpace> witness;

  std::vector<const RuleSchema*> ordered;
  for (const auto& s : c.schemas) ordered.push_back(&s);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const RuleSchema* a, const RuleSchema* b) { return a->name < b->name; });

  for (const RuleSchema* s : ordered) {
    AuditEntry entry;
    entry.schema = s->name;
    entry.pattern_sound = pattern_sound(*s, A);
    if (!entry.pattern_sound) {
      if (!witness) witness = build_witness_space(c.signature, A, depth, var_count);
      entry.violation = find_violation(*s, A, *witness);
    }
    report.entries.push_back(std::move(entry));
  }
  return report;
}

}  // namespace stonework
