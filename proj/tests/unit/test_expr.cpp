#include <doctest.h>

#include <cmath>
#include <qclt/expr.hpp>

using namespace qclt;
using qclt::expr::evaluate;
using qclt::expr::parse;

namespace {
bool close(cplx a, cplx b, double tol = 1e-12) { return std::abs(a - b) <= tol; }
}  // namespace

TEST_CASE("precedence: 1+2*3 == 7 at any x") {
  const auto ast = parse("1+2*3");
  CHECK(close(evaluate(ast, 0.0), {7.0, 0.0}));
  CHECK(close(evaluate(ast, 17.5), {7.0, 0.0}));
}

TEST_CASE("unary minus binds looser than ^: exp(-x^2/2)") {
  const auto ast = parse("exp(-x^2/2)");
  CHECK(close(evaluate(ast, 1.0), {std::exp(-0.5), 0.0}));
  CHECK(close(evaluate(ast, 2.0), {std::exp(-2.0), 0.0}));
}

TEST_CASE("Euler identity: exp(i*x) at pi") {
  const auto ast = parse("exp(i*x)");
  CHECK(close(evaluate(ast, M_PI), {-1.0, 0.0}));
}

TEST_CASE("complex chirp evaluates to exp(-(1+i)/2) at x=1") {
  const auto ast = parse("exp(-(1+i)*x^2/2)");
  CHECK(close(evaluate(ast, 1.0), std::exp(cplx{-0.5, -0.5})));
}

TEST_CASE("modulated packet at its center: exp(2i)") {
  const auto ast = parse("exp(-(x-1)^2/4)*exp(i*2*x)");
  CHECK(close(evaluate(ast, 1.0), std::exp(cplx{0.0, 2.0})));
}

TEST_CASE("right-associative power") {
  // 2^3^2 = 2^9 = 512
  CHECK(close(evaluate(parse("2^3^2"), 0.0), {512.0, 0.0}));
}

TEST_CASE("negative and fractional exponents") {
  CHECK(close(evaluate(parse("2^-2"), 0.0), {0.25, 0.0}));
  CHECK(close(evaluate(parse("4^0.5"), 0.0), {2.0, 0.0}));
}

TEST_CASE("sqrt of a negative real is the principal complex root") {
  CHECK(close(evaluate(parse("sqrt(-4)"), 0.0), {0.0, 2.0}));
  CHECK(close(evaluate(parse("sqrt(x-2)"), 1.0), {0.0, 1.0}));
}

TEST_CASE("division by zero is a domain error") {
  CHECK_THROWS_AS(evaluate(parse("1/(x-1)"), 1.0), expr::EvalError);
}

TEST_CASE("syntax errors carry the byte offset") {
  try {
    parse("exp(");
    FAIL("expected ParseError");
  } catch (const expr::ParseError& e) {
    CHECK(e.offset() == 4);
    CHECK(std::string(e.what()).find("expected expression") != std::string::npos);
  }

  CHECK_THROWS_AS(parse("2*"), expr::ParseError);
  CHECK_THROWS_AS(parse("(1+2"), expr::ParseError);
  CHECK_THROWS_AS(parse("x^y"), expr::ParseError);  // exponent must be a literal
}

TEST_CASE("unknown identifier is rejected with its name") {
  try {
    parse("tan(x)");
    FAIL("expected ParseError");
  } catch (const expr::ParseError& e) {
    CHECK(std::string(e.what()).find("tan") != std::string::npos);
  }
}

TEST_CASE("whitespace is insignificant") {
  CHECK(close(evaluate(parse("  1 +  2\t*3 "), 0.0), {7.0, 0.0}));
}

TEST_CASE("print/parse round trip preserves evaluation") {
  const char* sources[] = {
      "exp(-x^2/2)",
      "exp(-(1+i)*x^2/2)",
      "1+2*3-4/5^2",
      "sin(x)*cos(x)+sqrt(x+3)",
      "-x^2/2 - -x",
      "exp(-(x-1)^2/4)*exp(i*2*x)",
  };
  for (const char* src : sources) {
    const auto ast = parse(src);
    const std::string printed = expr::to_string(ast);
    const auto reparsed = parse(printed);
    for (double x : {-1.7, 0.0, 0.3, 2.9}) {
      CHECK(close(evaluate(ast, x), evaluate(reparsed, x)));
    }
    // the canonical form is a fixed point of print(parse(.))
    CHECK(expr::to_string(reparsed) == printed);
  }
}

TEST_CASE("rationals used in configs evaluate exactly") {
  CHECK(evaluate(parse("3/4"), 0.0).real() == 0.75);
  CHECK(evaluate(parse("1e-3"), 0.0).real() == 1e-3);
  CHECK(evaluate(parse("2.5*4"), 0.0).real() == 10.0);
}
