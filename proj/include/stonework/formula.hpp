#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "stonework/errors.hpp"

namespace stonework {

// Propositional formulas over the connectives
//
//   T  F  &  |  ~ (pseudo-complement)  ! (dual negation)
//
// Formulas are immutable values backed by shared nodes, so copying is cheap
// and subformulas can be shared freely.

enum class Kind { Var, Top, Bot, And, Or, PseudoNeg, DualNeg };

class Formula {
 public:
  static Formula var(std::string name);
  static Formula top();
  static Formula bot();
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula pseudo_neg(Formula child);
  static Formula dual_neg(Formula child);

  Kind kind() const { return node_->kind; }
  const std::string& var_name() const;
  Formula left() const;
  Formula right() const;
  Formula child() const { return left(); }

  bool uses_pseudo() const { return node_->uses_pseudo; }
  bool uses_dual() const { return node_->uses_dual; }
  bool uses_constants() const { return node_->uses_constants; }

  int depth() const;
  std::vector<std::string> variables() const;  // sorted, without duplicates
  std::string to_string() const;

  bool operator==(const Formula& other) const;
  bool operator!=(const Formula& other) const { return !(*this == other); }

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left, right;
    bool uses_pseudo = false;
    bool uses_dual = false;
    bool uses_constants = false;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Sequent {
  Formula lhs, rhs;

  bool operator==(const Sequent& other) const {
    return lhs == other.lhs && rhs == other.rhs;
  }
  std::string to_string() const;
};

// Which connectives a language admits. Variables, & and | are always present.
struct Signature {
  bool constants = false;
  bool pseudo = false;
  bool dual = false;
};

// Concrete syntax:
//
//   sequent  :=  formula '|-' formula
//   formula  :=  conjunct ('|' conjunct)*
//   conjunct :=  unary ('&' unary)*
//   unary    :=  '~' unary  |  '!' unary  |  atom
//   atom     :=  'T'  |  'F'  |  identifier  |  '(' formula ')'
//
// Both binary connectives associate to the left and '&' binds tighter than
// '|'. Identifiers are C-style; 'T' and 'F' are reserved.
Formula parse_formula(const std::string& text);
Sequent parse_sequent(const std::string& text);

// Replaces every variable that appears in `bindings`; other variables are
// kept. Used to instantiate rule schemas, whose metavariables are ordinary
// variable names.
Formula substitute(const Formula& pattern, const std::map<std::string, Formula>& bindings);

// All formulas of depth at most `depth` over the given variables, in a fixed
// deterministic order: atoms first (T, then F when constants are admitted,
// then the variables in the order given), then layer by layer of increasing
// depth. Within one layer: pseudo-complements, dual negations, conjunctions,
// disjunctions, each scanning earlier layers in order. Throws TooLarge when
// the result would exceed `limit` formulas.
std::vector<Formula> enumerate_formulas(int depth, const std::vector<std::string>& vars,
                                        const Signature& sig, std::size_t limit = 500'000);

}  // namespace stonework
