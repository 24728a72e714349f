#pragma once

#include <memory>
#include <optional>
#include <string>

#include "monogenica/quaternion.hpp"

namespace monogenica {

/// Small quaternion-valued expression language over a point x = (x0, x1, x2).
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := number | name | call | '(' expr ')'
///   name    := x0 | x1 | x2 | x | xbar | zeta | e0 | e1 | e2 | e3
///   call    := A(k, l) | phi(k, l) | kernel(c0, c1, c2)
///
/// Products keep their written order. kernel(c) is the Cauchy kernel
/// centred at c, E2(x - c).
class Expression {
 public:
  struct Node;

  /// Throws ParseError with the byte offset of the offending token.
  static Expression parse(const std::string& text);

  Quaternion operator()(const Point3& x) const;

  const std::string& source() const noexcept { return source_; }

  /// Degree when the expression is a polynomial in x, nothing otherwise.
  std::optional<int> polynomial_degree() const;

  /// True when no term involves an outer element or a kernel.
  bool is_entire() const;

 private:
  Expression(std::string source, std::shared_ptr<const Node> root)
      : source_(std::move(source)), root_(std::move(root)) {}

  std::string source_;
  std::shared_ptr<const Node> root_;
};

}  // namespace monogenica
