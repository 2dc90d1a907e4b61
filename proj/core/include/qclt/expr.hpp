#ifndef QCLT_EXPR_HPP
#define QCLT_EXPR_HPP

#include <memory>
#include <string>
#include <string_view>

#include "qclt/errors.hpp"
#include "qclt/numerics.hpp"

namespace qclt::expr {

/// Syntax error with the byte offset of the offending token.
class ParseError : public ConfigError {
 public:
  ParseError(std::size_t offset, const std::string& message)
      : ConfigError("syntax error at offset " + std::to_string(offset) + ": " + message),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Evaluation-time domain error (division by zero, non-finite result).
class EvalError : public NumericError {
 public:
  explicit EvalError(const std::string& what) : NumericError(what) {}
};

enum class NodeKind { number, imag_unit, variable, negate, add, sub, mul, div, pow, call };
enum class Func { exp, sin, cos, sqrt };

struct Node {
  NodeKind kind{};
  double value = 0.0;  // number literals
  Func func{};         // call nodes
  std::unique_ptr<Node> lhs;
  std::unique_ptr<Node> rhs;
};

/// Parsed expression in one real variable x with complex constants.
///
/// Grammar (whitespace insignificant, single-token lookahead):
///   expr    := term (('+'|'-') term)*
///   term    := factor (('*'|'/') factor)*
///   factor  := '-' factor | power
///   power   := primary ('^' factor)?
///   primary := number | 'i' | 'x' | ident '(' expr ')' | '(' expr ')'
/// '^' is right-associative, binds tighter than unary minus (so -x^2 is
/// -(x^2)), and its exponent must reduce to a signed numeric literal.
class Ast {
 public:
  Ast() = default;
  explicit Ast(std::unique_ptr<Node> root) : root_(std::move(root)) {}
  const Node* root() const { return root_.get(); }
  bool empty() const { return root_ == nullptr; }

 private:
  std::unique_ptr<Node> root_;
};

Ast parse(std::string_view src);

cplx evaluate(const Ast& ast, double x);

/// Canonical fully-parenthesized form; parse(to_string(a)) is equivalent to a.
std::string to_string(const Ast& ast);

}  // namespace qclt::expr

#endif
