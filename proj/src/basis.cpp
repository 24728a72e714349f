#include "monogenica/basis.hpp"

#include <cmath>
#include <vector>

#include "monogenica/legendre.hpp"
#include "numeric_util.hpp"

namespace monogenica {

using detail::kPi;
using detail::log_factorial;

bool is_valid(const BasisIndex& idx) noexcept {
  if (idx.k == -1) return false;
  if (idx.degree() > kMaxDegree) return false;
  return idx.l >= 0 && idx.l <= idx.columns() - 1;
}

void require_valid(const BasisIndex& idx) {
  if (!is_valid(idx)) throw IndexError("invalid basis index " + to_string(idx));
}

std::string to_string(const BasisIndex& idx) {
  return std::to_string(idx.k) + ":" + std::to_string(idx.l);
}

std::vector<BasisIndex> indices_in_range(int k_min, int k_max) {
  std::vector<BasisIndex> out;
  for (int k = k_min; k <= k_max; ++k) {
    if (k == -1) continue;
    const BasisIndex probe{k, 0};
    if (probe.degree() > kMaxDegree) throw IndexError("degree above ceiling in range");
    for (int l = 0; l < probe.columns(); ++l) out.push_back({k, l});
  }
  return out;
}

const char* to_string(Family f) noexcept {
  return f == Family::OrthonormalPhi ? "phi" : "appell";
}

namespace {

void require_inner(int n, int l) {
  if (n < 0 || n > kMaxDegree || l < 0 || l > n) {
    throw IndexError("inner index (n=" + std::to_string(n) + ", l=" + std::to_string(l) + ") out of range");
  }
}

// Inner A <-> phi factor: A_n^l = c phi_n^l.
double inner_conversion(int n, int l) {
  const double log_c = (l + 1) * std::log(2.0) + log_factorial(n) +
                       0.5 * (std::log(kPi) - std::log(2.0 * n + 3.0) - log_factorial(n - l) -
                              log_factorial(n + l + 1));
  return std::exp(log_c);
}

double outer_conversion(int n, int l) {
  const double log_c = (l + 1) * std::log(2.0) - log_factorial(n + 1) +
                       0.5 * (std::log(kPi) + log_factorial(n - l) + log_factorial(n + l + 1) -
                              std::log(2.0 * n + 1.0));
  return std::exp(log_c);
}

// Closed-form coefficients of A_n^l, one vector per (n, l) over h = 0..n-l.
class ClosedFormTable {
 public:
  ClosedFormTable() {
    offsets_.resize(static_cast<std::size_t>(kMaxDegree + 1) * (kMaxDegree + 1));
    for (int n = 0; n <= kMaxDegree; ++n) {
      for (int l = 0; l <= n; ++l) {
        offsets_[slot(n, l)] = coeffs_.size();
        const double log_pre = log_factorial(n) + log_factorial(l) - 2.0 * (n - l) * std::log(2.0) -
                               log_factorial(n + l + 1) - log_factorial(2 * l);
        for (int h = 0; h <= n - l; ++h) {
          const double log_c = log_factorial(2 * n - 2 * h + 1) + log_factorial(2 * l + 2 * h) -
                               log_factorial(h) - log_factorial(n - l - h) - log_factorial(n - h) -
                               log_factorial(l + h);
          coeffs_.push_back(std::exp(log_pre + log_c));
        }
      }
    }
  }

  const double* row(int n, int l) const { return coeffs_.data() + offsets_[slot(n, l)]; }

 private:
  static std::size_t slot(int n, int l) {
    return static_cast<std::size_t>(n) * (kMaxDegree + 1) + l;
  }
  std::vector<std::size_t> offsets_;
  std::vector<double> coeffs_;
};

const ClosedFormTable& closed_form_table() {
  static const ClosedFormTable table;
  return table;
}

Quaternion qpow(const Quaternion& q, int e) {
  Quaternion r = kE0;
  for (int i = 0; i < e; ++i) r = r * q;
  return r;
}

void require_nonzero(const Point3& x) {
  if (norm2(x) == 0.0) throw PoleError("outer function evaluated at the origin");
}

}  // namespace

CoeffValues coeff_functions(const LegendreTable& table, int n, int m) {
  if (n < 0 || m < 0 || m > n + 1) throw IndexError("coefficient function index out of range");
  const double t = table.t();
  const double s = std::sqrt(std::fmax(0.0, (1.0 - t) * (1.0 + t)));
  const double p_next = table.value_or_zero(n + 1, m);
  // m P_{n+1}^m / sin(theta), rewritten through degree-n functions of orders m +- 1.
  const double quotient =
      m == 0 ? 0.0
             : 0.5 * (table.value_or_zero(n, m + 1) +
                      (n + m) * (n + m + 1.0) * table.value_or_zero(n, m - 1));
  // sin(theta) d/dt P_{n+1}^m via recurrence II.
  const double s_dp = table.value_or_zero(n + 1, m + 1) - t * quotient;
  return {0.5 * (s * s_dp + (n + 1) * t * p_next), 0.5 * (t * s_dp - (n + 1) * s * p_next),
          0.5 * quotient};
}

CoeffValues coeff_functions(int n, int m, double theta) {
  if (!(theta >= 0.0 && theta <= kPi)) throw DomainError("polar angle outside [0, pi]");
  if (n < 0 || n > kMaxDegree || m < 0 || m > n + 1) throw IndexError("coefficient function index out of range");
  return coeff_functions(LegendreTable(n + 1, std::cos(theta)), n, m);
}

namespace {

Quaternion assemble(Harmonic which, const CoeffValues& c, int j, double phi) {
  const double cp = std::cos(phi);
  const double sp = std::sin(phi);
  const double cj = std::cos(j * phi);
  const double sj = std::sin(j * phi);
  if (which == Harmonic::X) {
    return {c.A * cj, c.B * cp * cj - c.C * sp * sj, c.B * sp * cj + c.C * cp * sj, 0.0};
  }
  return {c.A * sj, c.B * cp * sj + c.C * sp * cj, c.B * sp * sj - c.C * cp * cj, 0.0};
}

// r^n (X_n^l e0 - Y_n^l e3) for l >= 1 and r^n X_n^0 for l = 0, unnormalized.
Quaternion daggered_combination(int n, int l, const Point3& x) {
  const SphericalCoords sc = to_spherical(x);
  if (sc.r == 0.0) return n == 0 ? Quaternion(0.5) : Quaternion{};
  const LegendreTable table(n + 1, x.x0 / sc.r);
  const CoeffValues c = coeff_functions(table, n, l);
  const double rn = std::pow(sc.r, n);
  if (l == 0) return rn * assemble(Harmonic::X, c, 0, sc.phi);
  return rn * (assemble(Harmonic::X, c, l, sc.phi) - assemble(Harmonic::Y, c, l, sc.phi) * kE3);
}

}  // namespace

Quaternion spherical_monogenic(Harmonic which, int n, int j, double theta, double phi) {
  const int j_min = which == Harmonic::X ? 0 : 1;
  if (n < 0 || n > kMaxDegree || j < j_min || j > n + 1) throw IndexError("spherical monogenic index out of range");
  return assemble(which, coeff_functions(n, j, theta), j, phi);
}

double solid_monogenic_norm(int n, int m) {
  if (n < 0 || m < 0 || m > n + 1) throw IndexError("solid monogenic index out of range");
  if (m == 0) return std::sqrt(kPi * (n + 1) / (2.0 * n + 3.0));
  const double log_ratio = log_factorial(n + m + 1) - log_factorial(n - m + 1);
  return std::sqrt(kPi * (n + 1) / (2.0 * (2.0 * n + 3.0)) * std::exp(log_ratio));
}

Quaternion phi_inner_spherical(int n, int l, const Point3& x) {
  require_inner(n, l);
  const Quaternion d = daggered_combination(n, l, x);
  if (l == 0) return d / solid_monogenic_norm(n, 0);
  const double c = std::sqrt((n + 1.0) / (2.0 * (n - l + 1.0)));
  return (c / solid_monogenic_norm(n, l)) * d;
}

Quaternion appell_inner_spherical(int n, int l, const Point3& x) {
  require_inner(n, l);
  const Quaternion d = daggered_combination(n, l, x);
  if (l == 0) return (2.0 / (n + 1.0)) * d;
  const double f = std::exp((l + 1) * std::log(2.0) + log_factorial(n) - log_factorial(n + l + 1));
  return f * d;
}

Quaternion appell_inner_closed(int n, int l, const Point3& x) {
  require_inner(n, l);
  const Quaternion xq = x.to_quaternion();
  const Quaternion xb = conj(xq);
  const int m = n - l;
  const double* c = closed_form_table().row(n, l);
  // x and conj(x) commute, so powers can be tabulated independently.
  std::vector<Quaternion> px(m + 1, kE0);
  std::vector<Quaternion> pxb(m + 1, kE0);
  for (int i = 1; i <= m; ++i) {
    px[i] = px[i - 1] * xq;
    pxb[i] = pxb[i - 1] * xb;
  }
  Quaternion sum;
  for (int h = 0; h <= m; ++h) sum += c[h] * (pxb[h] * px[m - h]);
  return l == 0 ? sum : sum * qpow(zeta(x), l);
}

Quaternion appell_inner_recur(int n, int l, const Point3& x, Recurrence kind) {
  require_inner(n, l);
  const Quaternion xq = x.to_quaternion();
  const Quaternion xb = conj(xq);
  Quaternion prev = qpow(zeta(x), l);  // A_l^l
  if (n == l) return prev;
  if (kind == Recurrence::OneStep) {
    Quaternion a = prev;
    for (int m = l; m < n; ++m) {
      const double f = (m + 1.0) / (2.0 * (m - l + 1.0) * (m + l + 2.0));
      a = f * ((2.0 * m + 3.0) * (xq * a) + (2.0 * l + 1.0) * (xb * antimonogenic_involution(a)));
    }
    return a;
  }
  Quaternion cur = 0.25 * (((2.0 * l + 3.0) * xq + (2.0 * l + 1.0) * xb) * prev);  // A_{l+1}^l
  const double xx = norm2(x);
  for (int m = l + 1; m < n; ++m) {
    const double f = (m + 1.0) / (2.0 * (m - l + 1.0) * (m + l + 2.0));
    const Quaternion next =
        f * (((2.0 * m + 3.0) * xq + (2.0 * m + 1.0) * xb) * cur - (2.0 * m * xx) * prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

Quaternion appell_inner(int n, int l, const Point3& x) {
  return appell_inner_recur(n, l, x, Recurrence::TwoStep);
}

Quaternion phi_inner(int n, int l, const Point3& x) {
  return appell_inner(n, l, x) / inner_conversion(n, l);
}

Quaternion kelvin(const PointFunction& f, const Point3& x) {
  const double r2 = norm2(x);
  if (r2 == 0.0) throw PoleError("Kelvin transform at the origin");
  const double r = std::sqrt(r2);
  const Point3 image = (1.0 / r2) * conj(x);
  return (conj(x.to_quaternion()) / (r2 * r)) * f(image);
}

Quaternion phi_outer(int n, int l, const Point3& x) {
  require_inner(n, l);
  require_nonzero(x);
  const double scale = std::sqrt((2.0 * n + 1.0) / (2.0 * n + 3.0));
  return scale * kelvin([n, l](const Point3& y) { return phi_inner(n, l, y); }, x);
}

Quaternion appell_outer(int n, int l, const Point3& x) {
  require_inner(n, l);
  require_nonzero(x);
  if (l == n) {
    const double log_f = log_factorial(2 * n + 1) - log_factorial(n) - log_factorial(n + 1);
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double r2 = norm2(x);
    const double denom = std::pow(r2, n + 1.5);
    return (sign * std::exp(log_f) / denom) * (conj(x.to_quaternion()) * qpow(zeta(x), n));
  }
  const double f = std::exp(log_factorial(n + l + 1) + log_factorial(n - l) - log_factorial(n) -
                            log_factorial(n + 1));
  return f * kelvin([n, l](const Point3& y) { return appell_inner(n, l, y); }, x);
}

Quaternion appell_outer_x0_route(int n, int l, const Point3& x) {
  require_inner(n, l);
  require_nonzero(x);
  const int j = n - l;
  const double r = norm(x);
  const double t = x.x0 / r;
  const double a = l + 1.5;
  // Gegenbauer C_i^{(a)}(t), i = 0..j.
  std::vector<double> gegenbauer(j + 1, 1.0);
  if (j >= 1) gegenbauer[1] = 2.0 * a * t;
  for (int i = 2; i <= j; ++i) {
    gegenbauer[i] = (2.0 * t * (i + a - 1.0) * gegenbauer[i - 1] - (i + 2.0 * a - 2.0) * gegenbauer[i - 2]) / i;
  }
  // d^i/dx0^i |x|^{-2a} = (-1)^i i! C_i^{(a)}(t) |x|^{-2a-i}
  auto g_derivative = [&](int i) {
    const double sign = (i % 2 == 0) ? 1.0 : -1.0;
    return sign * std::exp(log_factorial(i)) * gegenbauer[i] * std::pow(r, -2.0 * a - i);
  };
  Quaternion d = conj(x.to_quaternion()) * g_derivative(j);
  if (j >= 1) d += Quaternion(j * g_derivative(j - 1));
  const double sign = (n % 2 == 0) ? 1.0 : -1.0;
  const double f = sign * std::exp(log_factorial(2 * l + 1) - log_factorial(l) - log_factorial(n + 1));
  return f * (d * qpow(zeta(x), l));
}

Quaternion cauchy_kernel(const Point3& x) {
  const double r2 = norm2(x);
  if (r2 == 0.0) throw PoleError("Cauchy kernel at the origin");
  return conj(x.to_quaternion()) / (4.0 * kPi * r2 * std::sqrt(r2));
}

double family_convert(const BasisIndex& idx, Family from, Family to) {
  require_valid(idx);
  if (from == to) return 1.0;
  const int n = idx.degree();
  const double c = idx.is_inner() ? inner_conversion(n, idx.l) : outer_conversion(n, idx.l);
  return from == Family::AppellA ? c : 1.0 / c;
}

Quaternion basis_value(Family family, const BasisIndex& idx, const Point3& x) {
  require_valid(idx);
  const int n = idx.degree();
  if (family == Family::AppellA) {
    return idx.is_inner() ? appell_inner(n, idx.l, x) : appell_outer(n, idx.l, x);
  }
  return idx.is_inner() ? phi_inner(n, idx.l, x) : phi_outer(n, idx.l, x);
}

}  // namespace monogenica
