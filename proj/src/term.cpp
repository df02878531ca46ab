#include "primeterm/term.hpp"

#include <cctype>
#include <sstream>
#include <utility>
#include <vector>

#include "primeterm/errors.hpp"

namespace primeterm {

TermPtr Term::constant(Bigint v) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::Const;
  t->value_ = std::move(v);
  return t;
}

TermPtr Term::variable(std::string name) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = TermKind::Var;
  t->name_ = std::move(name);
  return t;
}

TermPtr Term::make(TermKind op, TermPtr lhs, TermPtr rhs) {
  auto t = std::shared_ptr<Term>(new Term());
  t->kind_ = op;
  t->lhs_ = std::move(lhs);
  t->rhs_ = std::move(rhs);
  return t;
}

TermPtr t_const(Bigint v) { return Term::constant(std::move(v)); }
TermPtr t_const(long v) { return Term::constant(Bigint(v)); }
TermPtr t_var(std::string name) { return Term::variable(std::move(name)); }
TermPtr t_add(TermPtr a, TermPtr b) {
  return Term::make(TermKind::Add, std::move(a), std::move(b));
}
TermPtr t_sub(TermPtr a, TermPtr b) {
  return Term::make(TermKind::Sub, std::move(a), std::move(b));
}
TermPtr t_monus(TermPtr a, TermPtr b) {
  return Term::make(TermKind::Monus, std::move(a), std::move(b));
}
TermPtr t_mul(TermPtr a, TermPtr b) {
  return Term::make(TermKind::Mul, std::move(a), std::move(b));
}
TermPtr t_div(TermPtr a, TermPtr b) {
  return Term::make(TermKind::FloorDiv, std::move(a), std::move(b));
}
TermPtr t_mod(TermPtr a, TermPtr b) {
  return Term::make(TermKind::Mod, std::move(a), std::move(b));
}
TermPtr t_pow(TermPtr a, TermPtr b) {
  return Term::make(TermKind::Pow, std::move(a), std::move(b));
}
TermPtr t_pow2(TermPtr e) { return t_pow(t_const(2), std::move(e)); }

// ---------------------------------------------------------------------------
// Evaluation

Bigint eval_term(const Term& t, const Env& env, const EvalConfig& cfg) {
  switch (t.kind()) {
    case TermKind::Const:
      return t.value();
    case TermKind::Var: {
      auto it = env.find(t.name());
      if (it == env.end()) throw UnboundVariable(t.name());
      return it->second;
    }
    default:
      break;
  }
  const Bigint a = eval_term(*t.lhs(), env, cfg);
  const Bigint b = eval_term(*t.rhs(), env, cfg);
  switch (t.kind()) {
    case TermKind::Add: {
      Bigint r = a + b;
      require_fits(r, cfg.max_bits);
      return r;
    }
    case TermKind::Sub: {
      Bigint r = a - b;
      require_fits(r, cfg.max_bits);
      return r;
    }
    case TermKind::Monus: {
      if (a <= b) return Bigint(0);
      Bigint r = a - b;
      require_fits(r, cfg.max_bits);
      return r;
    }
    case TermKind::Mul:
      return checked_mul(a, b, cfg.max_bits);
    case TermKind::FloorDiv:
      return fdiv_q(a, b);
    case TermKind::Mod:
      return fdiv_r(a, b);
    case TermKind::Pow:
      return checked_pow(a, b, cfg.max_bits);
    default:
      throw Error("corrupt term");
  }
}

Bigint eval_term(const TermPtr& t, const Env& env, const EvalConfig& cfg) {
  return eval_term(*t, env, cfg);
}

// ---------------------------------------------------------------------------
// Formatting

namespace {

// Precedence levels: additive 1, multiplicative 2, power 3, atoms 4.
int precedence(TermKind k) {
  switch (k) {
    case TermKind::Add:
    case TermKind::Sub:
      return 1;
    case TermKind::Mul:
    case TermKind::FloorDiv:
    case TermKind::Mod:
      return 2;
    case TermKind::Pow:
      return 3;
    default:
      return 4;
  }
}

const char* op_token(TermKind k) {
  switch (k) {
    case TermKind::Add:
      return " + ";
    case TermKind::Sub:
      return " - ";
    case TermKind::Mul:
      return " * ";
    case TermKind::FloorDiv:
      return " / ";
    case TermKind::Mod:
      return " % ";
    case TermKind::Pow:
      return "^";
    default:
      return "?";
  }
}

void format_canonical(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Const:
      out += t.value().to_string();
      return;
    case TermKind::Var:
      out += t.name();
      return;
    case TermKind::Monus:
      out += "monus(";
      format_canonical(*t.lhs(), out);
      out += ", ";
      format_canonical(*t.rhs(), out);
      out += ")";
      return;
    default:
      break;
  }
  const int p = precedence(t.kind());
  const bool right_assoc = t.kind() == TermKind::Pow;
  const int pl = precedence(t.lhs()->kind());
  const int pr = precedence(t.rhs()->kind());
  const bool paren_l = right_assoc ? pl <= p : pl < p;
  const bool paren_r = right_assoc ? pr < p : pr <= p;
  if (paren_l) out += "(";
  format_canonical(*t.lhs(), out);
  if (paren_l) out += ")";
  out += op_token(t.kind());
  if (paren_r) out += "(";
  format_canonical(*t.rhs(), out);
  if (paren_r) out += ")";
}

void format_latex(const Term& t, std::string& out) {
  switch (t.kind()) {
    case TermKind::Const:
      out += t.value().to_string();
      return;
    case TermKind::Var:
      out += t.name();
      return;
    case TermKind::FloorDiv:
      out += "\\left\\lfloor \\frac{";
      format_latex(*t.lhs(), out);
      out += "}{";
      format_latex(*t.rhs(), out);
      out += "} \\right\\rfloor";
      return;
    case TermKind::Monus:
      out += "\\left(";
      format_latex(*t.lhs(), out);
      out += " \\mathbin{\\dot{-}} ";
      format_latex(*t.rhs(), out);
      out += "\\right)";
      return;
    case TermKind::Mod:
      out += "\\left(";
      format_latex(*t.lhs(), out);
      out += " \\bmod ";
      format_latex(*t.rhs(), out);
      out += "\\right)";
      return;
    case TermKind::Pow: {
      const bool paren = precedence(t.lhs()->kind()) <= 3;
      if (paren) out += "\\left(";
      format_latex(*t.lhs(), out);
      if (paren) out += "\\right)";
      out += "^{";
      format_latex(*t.rhs(), out);
      out += "}";
      return;
    }
    default:
      break;
  }
  const int p = precedence(t.kind());
  const bool pl = precedence(t.lhs()->kind()) < p;
  const bool pr = precedence(t.rhs()->kind()) <= p;
  if (pl) out += "\\left(";
  format_latex(*t.lhs(), out);
  if (pl) out += "\\right)";
  out += t.kind() == TermKind::Add   ? " + "
         : t.kind() == TermKind::Sub ? " - "
                                     : " \\cdot ";
  if (pr) out += "\\left(";
  format_latex(*t.rhs(), out);
  if (pr) out += "\\right)";
}

}  // namespace

std::string format_term(const Term& t, TermStyle style) {
  std::string out;
  if (style == TermStyle::Canonical) {
    format_canonical(t, out);
  } else {
    format_latex(t, out);
  }
  return out;
}

std::string format_term(const TermPtr& t, TermStyle style) {
  return format_term(*t, style);
}

// ---------------------------------------------------------------------------
// Parsing (recursive descent over the grammar in the header)

namespace {

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  TermPtr run() {
    TermPtr e = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError("trailing input", pos_);
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  TermPtr expr() {
    TermPtr lhs = term();
    for (;;) {
      char c = peek();
      if (c == '+' || c == '-') {
        ++pos_;
        TermPtr rhs = term();
        lhs = Term::make(c == '+' ? TermKind::Add : TermKind::Sub,
                         std::move(lhs), std::move(rhs));
      } else {
        return lhs;
      }
    }
  }

  TermPtr term() {
    TermPtr lhs = factor();
    for (;;) {
      char c = peek();
      if (c == '*' || c == '/' || c == '%') {
        ++pos_;
        TermPtr rhs = factor();
        TermKind k = c == '*'   ? TermKind::Mul
                     : c == '/' ? TermKind::FloorDiv
                                : TermKind::Mod;
        lhs = Term::make(k, std::move(lhs), std::move(rhs));
      } else {
        return lhs;
      }
    }
  }

  TermPtr factor() {
    TermPtr base = atom();
    if (peek() == '^') {
      ++pos_;
      return Term::make(TermKind::Pow, std::move(base), factor());
    }
    return base;
  }

  TermPtr atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw SyntaxError("unexpected end of input", pos_);
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return integer();
    if (c >= 'a' && c <= 'z') return identifier();
    if (c == '(') {
      ++pos_;
      TermPtr e = expr();
      if (!eat(')')) throw SyntaxError("expected ')'", pos_);
      return e;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", pos_);
  }

  TermPtr integer() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    return Term::constant(Bigint(s_.substr(start, pos_ - start)));
  }

  TermPtr identifier() {
    size_t start = pos_;
    while (pos_ < s_.size() &&
           ((s_[pos_] >= 'a' && s_[pos_] <= 'z') ||
            std::isdigit(static_cast<unsigned char>(s_[pos_])) ||
            s_[pos_] == '_'))
      ++pos_;
    std::string name(s_.substr(start, pos_ - start));
    if (name == "monus") {
      if (!eat('(')) throw SyntaxError("expected '(' after monus", pos_);
      TermPtr a = expr();
      if (!eat(',')) throw SyntaxError("expected ',' in monus", pos_);
      TermPtr b = expr();
      if (!eat(')')) throw SyntaxError("expected ')' after monus", pos_);
      return Term::make(TermKind::Monus, std::move(a), std::move(b));
    }
    return Term::variable(std::move(name));
  }

  std::string_view s_;
  size_t pos_ = 0;
};

}  // namespace

TermPtr parse_term(std::string_view text) { return Parser(text).run(); }

bool structurally_equal(const Term& a, const Term& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case TermKind::Const:
      return a.value() == b.value();
    case TermKind::Var:
      return a.name() == b.name();
    default:
      return structurally_equal(*a.lhs(), *b.lhs()) &&
             structurally_equal(*a.rhs(), *b.rhs());
  }
}

}  // namespace primeterm
