#pragma once

#include <functional>
#include <map>
#include <optional>

#include "monogenica/basis.hpp"

namespace monogenica {

inline constexpr double kDefaultStep = 1e-5;

/// Central-difference generalized Cauchy-Riemann operator
/// d/dx0 + e1 d/dx1 + e2 d/dx2, acting from the left.
Quaternion fd_dbar(const PointFunction& f, const Point3& x, double h = kDefaultStep);

/// Central-difference adjoint operator d/dx0 - e1 d/dx1 - e2 d/dx2, from the left.
Quaternion fd_del(const PointFunction& f, const Point3& x, double h = kDefaultStep);

/// Hypercomplex derivative, half the adjoint operator.
Quaternion fd_hyper_derivative(const PointFunction& f, const Point3& x, double h = kDefaultStep);

using SphericalFunction = std::function<Quaternion(double r, double theta, double phi)>;

/// Hypercomplex derivative in spherical coordinates,
/// (1/2) (conj(omega) d/dr + L/r) with the angular operator
/// L = (-sin t - cos t cos p e1 - cos t sin p e2) d/dt + (sin p e1 - cos p e2) / sin t d/dp.
/// Throws DomainError for r <= 0 and PoleError when theta is within 10 h of 0 or pi.
Quaternion spherical_hyper_derivative(const SphericalFunction& f, double r, double theta, double phi,
                                      double h = kDefaultStep);

/// d0 (or the primitive operator) applied to one basis element:
/// op(source) = target * factor, or 0 when target is empty.
struct OperatorAction {
  BasisIndex source;
  std::optional<BasisIndex> target;
  double factor = 0.0;
};

/// Exact action of d0 on a basis element of either family.
OperatorAction basis_derivative(const BasisIndex& idx, Family family);

/// Exact action of the primitive operator. Throws NoPrimitiveError for
/// k = -2 and the outer diagonal l = |k+1| - 1, whose images leave the basis.
OperatorAction basis_primitive(const BasisIndex& idx, Family family);

/// Finite combination of monogenic constants zeta^n c_n (coefficients on the right).
class ZetaPolynomial {
 public:
  ZetaPolynomial() = default;
  explicit ZetaPolynomial(std::map<int, Quaternion> terms);

  static ZetaPolynomial monomial(int power, const Quaternion& coeff = 1.0);

  const std::map<int, Quaternion>& terms() const noexcept { return terms_; }
  Quaternion coefficient(int power) const;
  bool empty() const noexcept { return terms_.empty(); }

  Quaternion operator()(const Point3& x) const;

 private:
  std::map<int, Quaternion> terms_;
};

/// (1/2)(d/dx1 + e3 d/dx2) on monogenic constants: zeta^n c -> n zeta^{n-1} c.
ZetaPolynomial dbar_c(const ZetaPolynomial& p);

/// Central-difference form of the same operator, from the left.
Quaternion fd_dbar_c(const PointFunction& f, const Point3& x, double h = kDefaultStep);

/// Smallest j with d0^j phi = 0 for an inner index, n - l + 1.
/// Throws UnsupportedError for outer indices.
int kernel_depth(const BasisIndex& idx);

/// (1/n!) dbar_c^l d0^{n-l} A_element evaluated at the origin, where
/// (n, l) = functional. Equals 1 when element == functional and 0 otherwise.
double taylor_functional(const BasisIndex& functional, const BasisIndex& element);

}  // namespace monogenica
