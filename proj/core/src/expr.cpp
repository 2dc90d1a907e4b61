#include "qclt/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace qclt::expr {

namespace {

std::unique_ptr<Node> make(NodeKind k) {
  auto n = std::make_unique<Node>();
  n->kind = k;
  return n;
}

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  Ast run() {
    auto root = parse_expr();
    skip_ws();
    if (pos_ != src_.size()) {
      throw ParseError(pos_, "unexpected trailing input '" + std::string(1, src_[pos_]) + "'");
    }
    return Ast(std::move(root));
  }

 private:
  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool consume(char c) {
    if (peek_is(c)) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c, const char* what) {
    if (!consume(c)) throw ParseError(pos_, std::string("expected ") + what);
  }

  std::unique_ptr<Node> parse_expr() {
    auto lhs = parse_term();
    for (;;) {
      if (consume('+')) {
        auto n = make(NodeKind::add);
        n->lhs = std::move(lhs);
        n->rhs = parse_term();
        lhs = std::move(n);
      } else if (consume('-')) {
        auto n = make(NodeKind::sub);
        n->lhs = std::move(lhs);
        n->rhs = parse_term();
        lhs = std::move(n);
      } else {
        return lhs;
      }
    }
  }

  std::unique_ptr<Node> parse_term() {
    auto lhs = parse_factor();
    for (;;) {
      if (consume('*')) {
        auto n = make(NodeKind::mul);
        n->lhs = std::move(lhs);
        n->rhs = parse_factor();
        lhs = std::move(n);
      } else if (consume('/')) {
        auto n = make(NodeKind::div);
        n->lhs = std::move(lhs);
        n->rhs = parse_factor();
        lhs = std::move(n);
      } else {
        return lhs;
      }
    }
  }

  // Unary minus binds looser than '^': -x^2 parses as -(x^2).
  std::unique_ptr<Node> parse_factor() {
    if (consume('-')) {
      auto n = make(NodeKind::negate);
      n->lhs = parse_factor();
      return n;
    }
    return parse_power();
  }

  std::unique_ptr<Node> parse_power() {
    auto base = parse_primary();
    if (consume('^')) {
      const std::size_t at = pos_;
      auto exponent = parse_factor();  // right-associative
      if (!is_constant(*exponent)) {
        throw ParseError(at, "exponent must be a numeric literal");
      }
      auto n = make(NodeKind::pow);
      n->lhs = std::move(base);
      n->rhs = std::move(exponent);
      return n;
    }
    return base;
  }

  // Exponents must fold to a real constant: a literal, a negated constant,
  // or a power of constants (which keeps a^b^c legal).
  static bool is_constant(const Node& n) {
    if (n.kind == NodeKind::number) return true;
    if (n.kind == NodeKind::negate) return n.lhs && is_constant(*n.lhs);
    if (n.kind == NodeKind::pow) return is_constant(*n.lhs) && is_constant(*n.rhs);
    return false;
  }

  std::unique_ptr<Node> parse_primary() {
    skip_ws();
    if (pos_ >= src_.size()) throw ParseError(pos_, "expected expression");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return parse_ident();
    if (c == '(') {
      ++pos_;
      auto inner = parse_expr();
      expect(')', "')'");
      return inner;
    }
    throw ParseError(pos_, "expected expression");
  }

  std::unique_ptr<Node> parse_number() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      std::size_t mark = pos_;
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) {
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
      } else {
        pos_ = mark;  // 'e' belongs to something else, e.g. "2exp(..)" is still an error later
      }
    }
    if (pos_ == start || (pos_ == start + 1 && src_[start] == '.')) {
      throw ParseError(start, "malformed number");
    }
    auto n = make(NodeKind::number);
    n->value = std::strtod(std::string(src_.substr(start, pos_ - start)).c_str(), nullptr);
    return n;
  }

  std::unique_ptr<Node> parse_ident() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() &&
           (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) {
      ++pos_;
    }
    const std::string name(src_.substr(start, pos_ - start));
    if (name == "i") return make(NodeKind::imag_unit);
    if (name == "x") return make(NodeKind::variable);
    Func f;
    if (name == "exp") f = Func::exp;
    else if (name == "sin") f = Func::sin;
    else if (name == "cos") f = Func::cos;
    else if (name == "sqrt") f = Func::sqrt;
    else throw ParseError(start, "unknown identifier '" + name + "'");
    expect('(', "'(' after function name");
    auto n = make(NodeKind::call);
    n->func = f;
    n->lhs = parse_expr();
    expect(')', "')'");
    return n;
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

cplx int_pow(cplx base, long e) {
  if (e < 0) {
    if (base == cplx{0.0, 0.0}) throw EvalError("0 raised to a negative power");
    return 1.0 / int_pow(base, -e);
  }
  cplx acc{1.0, 0.0};
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

cplx eval_node(const Node& n, double x) {
  switch (n.kind) {
    case NodeKind::number: return {n.value, 0.0};
    case NodeKind::imag_unit: return {0.0, 1.0};
    case NodeKind::variable: return {x, 0.0};
    case NodeKind::negate: return -eval_node(*n.lhs, x);
    case NodeKind::add: return eval_node(*n.lhs, x) + eval_node(*n.rhs, x);
    case NodeKind::sub: return eval_node(*n.lhs, x) - eval_node(*n.rhs, x);
    case NodeKind::mul: return eval_node(*n.lhs, x) * eval_node(*n.rhs, x);
    case NodeKind::div: {
      const cplx d = eval_node(*n.rhs, x);
      if (d == cplx{0.0, 0.0}) throw EvalError("division by zero");
      return eval_node(*n.lhs, x) / d;
    }
    case NodeKind::pow: {
      cplx base = eval_node(*n.lhs, x);
      const double e = std::real(eval_node(*n.rhs, x));
      if (e == std::floor(e) && std::abs(e) <= 64.0) {
        return int_pow(base, static_cast<long>(e));
      }
      if (base.imag() == 0.0) base = cplx{base.real(), 0.0};
      // Principal branch; roots of negatives come out complex.
      return std::pow(base, cplx{e, 0.0});
    }
    case NodeKind::call: {
      cplx a = eval_node(*n.lhs, x);
      // Normalize -0.0 imaginary parts so real arguments stay on the
      // principal branch (sqrt(-4) is +2i, not -2i).
      if (a.imag() == 0.0) a = cplx{a.real(), 0.0};
      switch (n.func) {
        case Func::exp: return std::exp(a);
        case Func::sin: return std::sin(a);
        case Func::cos: return std::cos(a);
        case Func::sqrt: return std::sqrt(a);
      }
    }
  }
  throw EvalError("corrupt expression tree");
}

void print_node(const Node& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::number: {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.17g", n.value);
      out += buf;
      return;
    }
    case NodeKind::imag_unit: out += 'i'; return;
    case NodeKind::variable: out += 'x'; return;
    case NodeKind::negate:
      out += "(-";
      print_node(*n.lhs, out);
      out += ')';
      return;
    case NodeKind::add:
    case NodeKind::sub:
    case NodeKind::mul:
    case NodeKind::div: {
      const char op = n.kind == NodeKind::add   ? '+'
                      : n.kind == NodeKind::sub ? '-'
                      : n.kind == NodeKind::mul ? '*'
                                                : '/';
      out += '(';
      print_node(*n.lhs, out);
      out += op;
      print_node(*n.rhs, out);
      out += ')';
      return;
    }
    case NodeKind::pow:
      out += '(';
      print_node(*n.lhs, out);
      out += '^';
      print_node(*n.rhs, out);
      out += ')';
      return;
    case NodeKind::call: {
      switch (n.func) {
        case Func::exp: out += "exp"; break;
        case Func::sin: out += "sin"; break;
        case Func::cos: out += "cos"; break;
        case Func::sqrt: out += "sqrt"; break;
      }
      out += '(';
      print_node(*n.lhs, out);
      out += ')';
      return;
    }
  }
}

}  // namespace

Ast parse(std::string_view src) { return Parser(src).run(); }

cplx evaluate(const Ast& ast, double x) {
  if (ast.empty()) throw EvalError("empty expression");
  const cplx v = eval_node(*ast.root(), x);
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw EvalError("expression evaluated to a non-finite value");
  }
  return v;
}

std::string to_string(const Ast& ast) {
  std::string out;
  if (!ast.empty()) print_node(*ast.root(), out);
  return out;
}

}  // namespace qclt::expr
