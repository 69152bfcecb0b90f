// Small expression language in one variable `x`: parser, evaluator,
// pretty-printer, and a finite-difference derivative cross-check.
//
// Grammar: docs/expression-grammar.ebnf.  Supported operations: + - * / ^
// (right-associative), unary minus, and the calls exp, log, sqrt, abs,
// pow(u, v).  Expressions are immutable and evaluation is pure: the same
// (expression, x) pair always yields the same double.

#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fracineq::expr {

// Syntax error; offset() is the byte offset into the source string at which
// the offending token starts.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t offset)
      : std::runtime_error(msg + " (at byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// Domain or range failure during evaluation.  Any operation producing NaN or
// an infinity raises this; non-finite values never escape eval().
class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {
struct Node;
}

// Immutable parsed expression.  Default-constructed objects are empty and
// cannot be evaluated (eval() throws EvalError).
class Expr {
 public:
  Expr() = default;

  // Evaluates at x.  Throws EvalError on any domain failure (log of a
  // non-positive value, sqrt of a negative value, division by zero, a pow()
  // with NaN result, overflow to infinity).
  double eval(double x) const;

  // Renders the expression with the minimal parentheses needed to reparse to
  // a structurally identical tree; parse(e.str()) == e for any parsed e.
  std::string str() const;

  bool empty() const noexcept { return root_ == nullptr; }

  // Structural equality (same tree, bit-identical constants).
  friend bool operator==(const Expr& l, const Expr& r);

 private:
  friend Expr parse(std::string_view src);
  explicit Expr(std::shared_ptr<const detail::Node> root)
      : root_(std::move(root)) {}
  std::shared_ptr<const detail::Node> root_;
};

// Parses `src` per docs/expression-grammar.ebnf.  Throws ParseError with the
// byte offset of the first offending token.
Expr parse(std::string_view src);

// Result of comparing a claimed derivative against central finite differences.
struct DerivReport {
  bool ok = false;          // max_abs_dev <= tol at every probe point
  double max_abs_dev = 0;   // worst |fd(f)(x) - fprime(x)| seen
  double worst_x = 0;       // probe point attaining max_abs_dev
};

// Probes n interior points of [lo, hi] and compares fprime against the
// central difference (f(x+h) - f(x-h)) / (2h) with h = cbrt(eps)*max(1, |x|),
// shrunk where needed so x±h stays inside [lo, hi].  tol is the acceptance
// threshold on the absolute deviation; the default suits smooth functions
// with O(1) third derivatives.
DerivReport check_derivative_consistency(const Expr& f, const Expr& fprime,
                                         double lo, double hi, int n = 64,
                                         double tol = 1e-6);

}  // namespace fracineq::expr
