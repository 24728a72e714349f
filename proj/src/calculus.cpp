#include "monogenica/calculus.hpp"

#include <cmath>
#include <utility>

#include "numeric_util.hpp"

namespace monogenica {

namespace {

struct Partials {
  Quaternion d0;
  Quaternion d1;
  Quaternion d2;
};

Partials central_partials(const PointFunction& f, const Point3& x, double h) {
  if (!(h > 0.0)) throw DomainError("difference step must be positive");
  const double inv = 1.0 / (2.0 * h);
  return {(f({x.x0 + h, x.x1, x.x2}) - f({x.x0 - h, x.x1, x.x2})) * inv,
          (f({x.x0, x.x1 + h, x.x2}) - f({x.x0, x.x1 - h, x.x2})) * inv,
          (f({x.x0, x.x1, x.x2 + h}) - f({x.x0, x.x1, x.x2 - h})) * inv};
}

double sign_of(int k) { return k < 0 ? -1.0 : 1.0; }

}  // namespace

Quaternion fd_dbar(const PointFunction& f, const Point3& x, double h) {
  const Partials p = central_partials(f, x, h);
  return p.d0 + kE1 * p.d1 + kE2 * p.d2;
}

Quaternion fd_del(const PointFunction& f, const Point3& x, double h) {
  const Partials p = central_partials(f, x, h);
  return p.d0 - kE1 * p.d1 - kE2 * p.d2;
}

Quaternion fd_hyper_derivative(const PointFunction& f, const Point3& x, double h) {
  return 0.5 * fd_del(f, x, h);
}

Quaternion spherical_hyper_derivative(const SphericalFunction& f, double r, double theta, double phi,
                                      double h) {
  if (!(r > 0.0)) throw DomainError("radius must be positive");
  if (!(h > 0.0)) throw DomainError("difference step must be positive");
  if (theta < 10.0 * h || theta > detail::kPi - 10.0 * h) throw PoleError("polar angle too close to a pole");
  const double ct = std::cos(theta);
  const double st = std::sin(theta);
  const double cp = std::cos(phi);
  const double sp = std::sin(phi);
  const double inv = 1.0 / (2.0 * h);
  const Quaternion dr = (f(r + h, theta, phi) - f(r - h, theta, phi)) * inv;
  const Quaternion dt = (f(r, theta + h, phi) - f(r, theta - h, phi)) * inv;
  const Quaternion dp = (f(r, theta, phi + h) - f(r, theta, phi - h)) * inv;
  const Quaternion omega_bar{ct, -st * cp, -st * sp, 0.0};
  const Quaternion l_theta{-st, -ct * cp, -ct * sp, 0.0};
  const Quaternion l_phi = Quaternion{0.0, sp, -cp, 0.0} / st;
  return 0.5 * (omega_bar * dr + (l_theta * dt + l_phi * dp) / r);
}

OperatorAction basis_derivative(const BasisIndex& idx, Family family) {
  require_valid(idx);
  const int k = idx.k;
  const int l = idx.l;
  if (idx.is_inner() && l == k) return {idx, std::nullopt, 0.0};
  const BasisIndex target{k - 1, l};
  if (family == Family::AppellA) return {idx, target, static_cast<double>(k)};
  const double f = sign_of(k) * std::sqrt((2.0 * k + 3.0) * (k - l) * (k + l + 1.0) / (2.0 * k + 1.0));
  return {idx, target, f};
}

OperatorAction basis_primitive(const BasisIndex& idx, Family family) {
  require_valid(idx);
  const int k = idx.k;
  const int l = idx.l;
  if (k == -2 || (!idx.is_inner() && l == idx.columns() - 1)) {
    throw NoPrimitiveError("no primitive in the basis for index " + to_string(idx));
  }
  const BasisIndex target{k + 1, l};
  if (target.degree() > kMaxDegree) throw IndexError("primitive exceeds the degree ceiling");
  if (family == Family::AppellA) return {idx, target, 1.0 / (k + 1.0)};
  const double f = sign_of(k) * std::sqrt((2.0 * k + 3.0) / ((2.0 * k + 5.0) * (k - l + 1.0) * (k + l + 2.0)));
  return {idx, target, f};
}

ZetaPolynomial::ZetaPolynomial(std::map<int, Quaternion> terms) : terms_(std::move(terms)) {
  for (const auto& [power, c] : terms_) {
    if (power < 0) throw IndexError("negative power of zeta");
  }
}

ZetaPolynomial ZetaPolynomial::monomial(int power, const Quaternion& coeff) {
  return ZetaPolynomial({{power, coeff}});
}

Quaternion ZetaPolynomial::coefficient(int power) const {
  const auto it = terms_.find(power);
  return it == terms_.end() ? Quaternion{} : it->second;
}

Quaternion ZetaPolynomial::operator()(const Point3& x) const {
  const Quaternion z = zeta(x);
  Quaternion sum;
  Quaternion zp = kE0;
  int current = 0;
  for (const auto& [power, c] : terms_) {
    for (; current < power; ++current) zp = zp * z;
    sum += zp * c;
  }
  return sum;
}

ZetaPolynomial dbar_c(const ZetaPolynomial& p) {
  std::map<int, Quaternion> out;
  for (const auto& [power, c] : p.terms()) {
    if (power > 0) out.emplace(power - 1, static_cast<double>(power) * c);
  }
  return ZetaPolynomial(std::move(out));
}

Quaternion fd_dbar_c(const PointFunction& f, const Point3& x, double h) {
  const Partials p = central_partials(f, x, h);
  return 0.5 * (p.d1 + kE3 * p.d2);
}

int kernel_depth(const BasisIndex& idx) {
  require_valid(idx);
  if (!idx.is_inner()) throw UnsupportedError("outer elements are not annihilated by any power of d0");
  return idx.k - idx.l + 1;
}

double taylor_functional(const BasisIndex& functional, const BasisIndex& element) {
  require_valid(functional);
  require_valid(element);
  if (!functional.is_inner() || !element.is_inner()) {
    throw UnsupportedError("Taylor functionals act on inner Appell elements");
  }
  const int n = functional.k;
  const int l = functional.l;
  // d0^{n-l} through the exact index map.
  std::optional<BasisIndex> current = element;
  double factor = 1.0;
  for (int i = 0; i < n - l && current; ++i) {
    const OperatorAction a = basis_derivative(*current, Family::AppellA);
    current = a.target;
    factor *= a.factor;
  }
  // dbar_c^l lowers the degree by l, so only degree-l terms reach the origin.
  // Among those only zeta^l survives: dbar_c^l A_l^j = 0 for j < l.
  if (!current || current->k != l || current->l != l) return 0.0;
  ZetaPolynomial p = ZetaPolynomial::monomial(l, factor);
  for (int i = 0; i < l; ++i) p = dbar_c(p);
  return p.coefficient(0).a0 / std::exp(detail::log_factorial(n));
}

}  // namespace monogenica
