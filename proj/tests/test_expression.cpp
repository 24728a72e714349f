#include <gtest/gtest.h>

#include "monogenica/basis.hpp"
#include "monogenica/expression.hpp"

using namespace monogenica;

namespace {

void expect_near(const Quaternion& a, const Quaternion& b, double tol) {
  EXPECT_LE(max_abs(a - b), tol) << a << " vs " << b;
}

std::size_t error_position(const std::string& text) {
  try {
    Expression::parse(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  ADD_FAILURE() << "no parse error for " << text;
  return 0;
}

}  // namespace

TEST(Expression, AtomsAndArithmetic) {
  const Point3 x{0.3, -0.2, 0.5};
  expect_near(Expression::parse("0")(x), 0.0, 0);
  expect_near(Expression::parse("A(2,1)")(x), appell_inner(2, 1, x), 0);
  expect_near(Expression::parse("phi(-4, 2)")(x), phi_outer(2, 2, x), 0);
  expect_near(Expression::parse("A(1,0) + A(-3,1)*e1")(x), appell_inner(1, 0, x) + appell_outer(1, 1, x) * kE1, 1e-15);
  expect_near(Expression::parse("kernel(0, 0, 1.5)")(x), cauchy_kernel(x - Point3{0, 0, 1.5}), 0);
  expect_near(Expression::parse("kernel(-1, 2.5e-1, 3)")(x), cauchy_kernel(x - Point3{-1, 0.25, 3}), 0);
  expect_near(Expression::parse("x0*e1 + x1*x2 - 2")(x), Quaternion(x.x1 * x.x2 - 2, x.x0, 0, 0), 1e-16);
  expect_near(Expression::parse("e1*e2")(x), kE3, 0);
  expect_near(Expression::parse("e2*e1")(x), -kE3, 0);
  expect_near(Expression::parse("-(x + xbar)")(x), -2.0 * x.x0, 1e-16);
}

TEST(Expression, PowersAndOrder) {
  const Point3 x{0.3, -0.2, 0.5};
  const Quaternion z = zeta(x);
  expect_near(Expression::parse("zeta^3")(x), z * z * z, 1e-16);
  expect_near(Expression::parse("(1 + e1)^2")(x), (1.0 + kE1) * (1.0 + kE1), 1e-16);
  expect_near(Expression::parse("x^0")(x), 1.0, 0);
  expect_near(Expression::parse("-x0^2")(x), -x.x0 * x.x0, 1e-16);
  expect_near(Expression::parse("A(1,0)*e2")(x), appell_inner(1, 0, x) * kE2, 1e-16);
}

TEST(Expression, PolynomialDegree) {
  EXPECT_EQ(Expression::parse("0").polynomial_degree(), 0);
  EXPECT_EQ(Expression::parse("A(3,1) + x*zeta").polynomial_degree(), 3);
  EXPECT_EQ(Expression::parse("x^4*A(2,2)").polynomial_degree(), 6);
  EXPECT_FALSE(Expression::parse("A(-2,0)").polynomial_degree());
  EXPECT_FALSE(Expression::parse("1 + kernel(0,0,2)").is_entire());
}

TEST(Expression, ErrorsCarryPositions) {
  EXPECT_EQ(error_position("A(2,1) + "), 9u);
  EXPECT_EQ(error_position("A(2,3)"), 0u);
  EXPECT_EQ(error_position("x0 + foo"), 5u);
  EXPECT_EQ(error_position("(x0 + 1"), 7u);
  EXPECT_EQ(error_position("x0 $ 1"), 3u);
  EXPECT_EQ(error_position(""), 0u);
  EXPECT_EQ(error_position("x^-1"), 2u);
  EXPECT_EQ(error_position("A(-1,0)"), 0u);
  EXPECT_THROW(Expression::parse("kernel(1,2)"), ParseError);
}
