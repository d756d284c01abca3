#include "stonework/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace stonework {

// ---- construction ----

Formula Formula::var(std::string name) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Var;
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::top() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Top;
  node->uses_constants = true;
  return Formula(std::move(node));
}

Formula Formula::bot() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Bot;
  node->uses_constants = true;
  return Formula(std::move(node));
}

Formula Formula::conj(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::And;
  node->uses_pseudo = lhs.node_->uses_pseudo || rhs.node_->uses_pseudo;
  node->uses_dual = lhs.node_->uses_dual || rhs.node_->uses_dual;
  node->uses_constants = lhs.node_->uses_constants || rhs.node_->uses_constants;
  node->left = std::move(lhs.node_);
  node->right = std::move(rhs.node_);
  return Formula(std::move(node));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Or;
  node->uses_pseudo = lhs.node_->uses_pseudo || rhs.node_->uses_pseudo;
  node->uses_dual = lhs.node_->uses_dual || rhs.node_->uses_dual;
  node->uses_constants = lhs.node_->uses_constants || rhs.node_->uses_constants;
  node->left = std::move(lhs.node_);
  node->right = std::move(rhs.node_);
  return Formula(std::move(node));
}

Formula Formula::pseudo_neg(Formula child) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::PseudoNeg;
  node->uses_pseudo = true;
  node->uses_dual = child.node_->uses_dual;
  node->uses_constants = child.node_->uses_constants;
  node->left = std::move(child.node_);
  return Formula(std::move(node));
}

Formula Formula::dual_neg(Formula child) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::DualNeg;
  node->uses_pseudo = child.node_->uses_pseudo;
  node->uses_dual = true;
  node->uses_constants = child.node_->uses_constants;
  node->left = std::move(child.node_);
  return Formula(std::move(node));
}

const std::string& Formula::var_name() const {
  if (node_->kind != Kind::Var) throw InvalidInput("formula is not a variable");
  return node_->name;
}

Formula Formula::left() const {
  if (!node_->left) throw InvalidInput("formula has no subformula");
  return Formula(node_->left);
}

Formula Formula::right() const {
  if (!node_->right) throw InvalidInput("formula has no right subformula");
  return Formula(node_->right);
}

int Formula::depth() const {
  switch (node_->kind) {
    case Kind::Var:
    case Kind::Top:
    case Kind::Bot:
      return 0;
    case Kind::PseudoNeg:
    case Kind::DualNeg:
      return 1 + left().depth();
    default:
      return 1 + std::max(left().depth(), right().depth());
  }
}

bool Formula::operator==(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (node_->kind != other.node_->kind) return false;
  switch (node_->kind) {
    case Kind::Var:
      return node_->name == other.node_->name;
    case Kind::Top:
    case Kind::Bot:
      return true;
    case Kind::PseudoNeg:
    case Kind::DualNeg:
      return left() == other.left();
    default:
      return left() == other.left() && right() == other.right();
  }
}

namespace {

void collect_vars(const Formula& f, std::set<std::string>& out) {
  switch (f.kind()) {
    case Kind::Var:
      out.insert(f.var_name());
      break;
    case Kind::Top:
    case Kind::Bot:
      break;
    case Kind::PseudoNeg:
    case Kind::DualNeg:
      collect_vars(f.child(), out);
      break;
    default:
      collect_vars(f.left(), out);
      collect_vars(f.right(), out);
  }
}

int precedence(Kind kind) {
  switch (kind) {
    case Kind::Or:
      return 1;
    case Kind::And:
      return 2;
    case Kind::PseudoNeg:
    case Kind::DualNeg:
      return 3;
    default:
      return 4;
  }
}

void print(const Formula& f, int required, std::string& out) {
  const int prec = precedence(f.kind());
  const bool parens = prec < required;
  if (parens) out += '(';
  switch (f.kind()) {
    case Kind::Var:
      out += f.var_name();
      break;
    case Kind::Top:
      out += 'T';
      break;
    case Kind::Bot:
      out += 'F';
      break;
    case Kind::PseudoNeg:
      out += '~';
      print(f.child(), 3, out);
      break;
    case Kind::DualNeg:
      out += '!';
      print(f.child(), 3, out);
      break;
    case Kind::And:
      print(f.left(), 2, out);
      out += " & ";
      print(f.right(), 3, out);
      break;
    case Kind::Or:
      print(f.left(), 1, out);
      out += " | ";
      print(f.right(), 2, out);
      break;
  }
  if (parens) out += ')';
}

}  // namespace

std::vector<std::string> Formula::variables() const {
  std::set<std::string> vars;
  collect_vars(*this, vars);
  return {vars.begin(), vars.end()};
}

std::string Formula::to_string() const {
  std::string out;
  print(*this, 0, out);
  return out;
}

std::string Sequent::to_string() const {
  return lhs.to_string() + " |- " + rhs.to_string();
}

// ---- parsing ----

namespace {

enum class Tok { LParen, RParen, And, Or, Turnstile, Pseudo, Dual, Top, Bot, Ident, End };

struct Token {
  Tok tok;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    switch (c) {
      case '(':
        tokens.push_back({Tok::LParen, "(", start});
        ++i;
        continue;
      case ')':
        tokens.push_back({Tok::RParen, ")", start});
        ++i;
        continue;
      case '&':
        tokens.push_back({Tok::And, "&", start});
        ++i;
        continue;
      case '~':
        tokens.push_back({Tok::Pseudo, "~", start});
        ++i;
        continue;
      case '!':
        tokens.push_back({Tok::Dual, "!", start});
        ++i;
        continue;
      case '|':
        if (i + 1 < text.size() && text[i + 1] == '-') {
          tokens.push_back({Tok::Turnstile, "|-", start});
          i += 2;
        } else {
          tokens.push_back({Tok::Or, "|", start});
          ++i;
        }
        continue;
      default:
        break;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t end = i;
      while (end < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[end])) || text[end] == '_'))
        ++end;
      std::string word = text.substr(i, end - i);
      if (word == "T")
        tokens.push_back({Tok::Top, std::move(word), start});
      else if (word == "F")
        tokens.push_back({Tok::Bot, std::move(word), start});
      else
        tokens.push_back({Tok::Ident, std::move(word), start});
      i = end;
      continue;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", start);
  }
  tokens.push_back({Tok::End, "", text.size()});
  return tokens;
}

class Parser {
 public:
  explicit Parser(const std::string& text) : tokens_(tokenize(text)) {}

  Formula formula() {
    Formula lhs = conjunct();
    while (peek().tok == Tok::Or) {
      advance();
      lhs = Formula::disj(std::move(lhs), conjunct());
    }
    return lhs;
  }

  const Token& peek() const { return tokens_[index_]; }
  void advance() { ++index_; }

  void expect_end() {
    if (peek().tok != Tok::End)
      throw SyntaxError("unexpected trailing input '" + peek().text + "'", peek().pos);
  }

  void expect_turnstile() {
    if (peek().tok != Tok::Turnstile) throw SyntaxError("expected '|-'", peek().pos);
    advance();
  }

 private:
  Formula conjunct() {
    Formula lhs = unary();
    while (peek().tok == Tok::And) {
      advance();
      lhs = Formula::conj(std::move(lhs), unary());
    }
    return lhs;
  }

  Formula unary() {
    switch (peek().tok) {
      case Tok::Pseudo:
        advance();
        return Formula::pseudo_neg(unary());
      case Tok::Dual:
        advance();
        return Formula::dual_neg(unary());
      default:
        return atom();
    }
  }

  Formula atom() {
    const Token& t = peek();
    switch (t.tok) {
      case Tok::Top:
        advance();
        return Formula::top();
      case Tok::Bot:
        advance();
        return Formula::bot();
      case Tok::Ident: {
        Formula f = Formula::var(t.text);
        advance();
        return f;
      }
      case Tok::LParen: {
        advance();
        Formula f = formula();
        if (peek().tok != Tok::RParen) throw SyntaxError("expected ')'", peek().pos);
        advance();
        return f;
      }
      case Tok::End:
        throw SyntaxError("unexpected end of input", t.pos);
      default:
        throw SyntaxError("unexpected token '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t index_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser parser(text);
  Formula f = parser.formula();
  parser.expect_end();
  return f;
}

Sequent parse_sequent(const std::string& text) {
  Parser parser(text);
  Formula lhs = parser.formula();
  parser.expect_turnstile();
  Formula rhs = parser.formula();
  parser.expect_end();
  return Sequent{std::move(lhs), std::move(rhs)};
}

// ---- substitution and enumeration ----

Formula substitute(const Formula& pattern, const std::map<std::string, Formula>& bindings) {
  switch (pattern.kind()) {
    case Kind::Var: {
      auto it = bindings.find(pattern.var_name());
      return it == bindings.end() ? pattern : it->second;
    }
    case Kind::Top:
    case Kind::Bot:
      return pattern;
    case Kind::PseudoNeg:
      return Formula::pseudo_neg(substitute(pattern.child(), bindings));
    case Kind::DualNeg:
      return Formula::dual_neg(substitute(pattern.child(), bindings));
    case Kind::And:
      return Formula::conj(substitute(pattern.left(), bindings),
                           substitute(pattern.right(), bindings));
    default:
      return Formula::disj(substitute(pattern.left(), bindings),
                           substitute(pattern.right(), bindings));
  }
}

std::vector<Formula> enumerate_formulas(int depth, const std::vector<std::string>& vars,
                                        const Signature& sig, std::size_t limit) {
  std::vector<Formula> all;
  std::vector<int> depths;
  auto push = [&](Formula f, int d) {
    if (all.size() >= limit)
      throw TooLarge("formula enumeration exceeds " + std::to_string(limit) + " formulas");
    all.push_back(std::move(f));
    depths.push_back(d);
  };

  if (sig.constants) {
    push(Formula::top(), 0);
    push(Formula::bot(), 0);
  }
  for (const auto& v : vars) push(Formula::var(v), 0);

  std::size_t layer_begin = 0;
  for (int d = 1; d <= depth; ++d) {
    const std::size_t layer_end = all.size();
    if (sig.pseudo)
      for (std::size_t i = layer_begin; i < layer_end; ++i)
        push(Formula::pseudo_neg(all[i]), d);
    if (sig.dual)
      for (std::size_t i = layer_begin; i < layer_end; ++i)
        push(Formula::dual_neg(all[i]), d);
    for (std::size_t i = 0; i < layer_end; ++i) {
      for (std::size_t j = 0; j < layer_end; ++j) {
        if (depths[i] < d - 1 && depths[j] < d - 1) continue;
        push(Formula::conj(all[i], all[j]), d);
      }
    }
    for (std::size_t i = 0; i < layer_end; ++i) {
      for (std::size_t j = 0; j < layer_end; ++j) {
        if (depths[i] < d - 1 && depths[j] < d - 1) continue;
        push(Formula::disj(all[i], all[j]), d);
      }
    }
    layer_begin = layer_end;
  }
  return all;
}

}  // namespace stonework
