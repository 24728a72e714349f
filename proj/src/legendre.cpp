#include "monogenica/legendre.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "monogenica/errors.hpp"

namespace monogenica {
namespace {

void check_abscissa(double t) {
  if (!(std::fabs(t) <= 1.0)) throw DomainError("Legendre abscissa outside [-1, 1]: " + std::to_string(t));
}

void check_degree(int n_max) {
  if (n_max < 0 || n_max > kMaxLegendreDegree) {
    throw IndexError("Legendre degree outside [0, " + std::to_string(kMaxLegendreDegree) +
                     "]: " + std::to_string(n_max));
  }
}

// P_n^m'(t) at t = +-1, from the boundary behaviour of (1-t^2)^{m/2} d^m/dt^m P_n.
double pole_derivative(int n, int m, double t) {
  const double parity_n1 = (n % 2 == 0) ? -1.0 : 1.0;  // (-1)^{n+1}
  const double nn = n;
  switch (m) {
    case 0:
      return (t > 0.0 ? 1.0 : parity_n1) * nn * (nn + 1.0) / 2.0;
    case 1: {
      const double inf = std::numeric_limits<double>::infinity();
      return t > 0.0 ? -inf : parity_n1 * inf;
    }
    case 2: {
      const double mag = (nn - 1.0) * nn * (nn + 1.0) * (nn + 2.0) / 4.0;
      return t > 0.0 ? -mag : -parity_n1 * mag;
    }
    default:
      return 0.0;
  }
}

// Fills column m of P_k^m(t) for k = m..n_max into out[k - m].
template <typename Out>
void column(int m, int n_max, double t, Out&& out) {
  const double s = std::sqrt(std::fmax(0.0, (1.0 - t) * (1.0 + t)));
  double pmm = 1.0;
  for (int i = 1; i <= m; ++i) pmm *= (2.0 * i - 1.0) * s;
  out(m, pmm);
  if (m == n_max) return;
  double p0 = pmm;
  double p1 = t * (2.0 * m + 1.0) * pmm;
  out(m + 1, p1);
  for (int k = m + 1; k < n_max; ++k) {
    const double p2 = ((2.0 * k + 1.0) * t * p1 - (k + m) * p0) / (k - m + 1.0);
    p0 = p1;
    p1 = p2;
    out(k + 1, p1);
  }
}

// sin(theta) d/dt P_n^m = (P_n^{m+1} - (n+m)(n-m+1) P_n^{m-1}) / 2, and
// sin(theta) d/dt P_n^0 = P_n^1. Only a single division by sin(theta).
double derivative_from_neighbours(int n, int m, double t, double up, double down) {
  if (std::fabs(t) == 1.0) return pole_derivative(n, m, t);
  const double s = std::sqrt((1.0 - t) * (1.0 + t));
  if (m == 0) return up / s;
  return 0.5 * (up - (n + m) * (n - m + 1.0) * down) / s;
}

}  // namespace

LegendreValue assoc_legendre(int n, int m, double t) {
  check_degree(n);
  if (m < 0 || m > n) throw IndexError("Legendre order m outside [0, n]");
  const LegendreTable table(n, t);
  return {table.value(n, m), table.derivative(n, m)};
}

LegendreTable::LegendreTable(int n_max, double t) : n_max_(n_max), t_(t) {
  check_degree(n_max);
  check_abscissa(t);
  const std::size_t size = static_cast<std::size_t>(n_max + 1) * (n_max + 2) / 2;
  values_.assign(size, 0.0);
  derivatives_.assign(size, 0.0);
  for (int m = 0; m <= n_max; ++m) {
    column(m, n_max, t, [&](int k, double v) { values_[offset(k, m)] = v; });
  }
  for (int n = 0; n <= n_max; ++n) {
    for (int m = 0; m <= n; ++m) {
      const double up = m + 1 <= n ? values_[offset(n, m + 1)] : 0.0;
      const double down = m >= 1 ? values_[offset(n, m - 1)] : 0.0;
      derivatives_[offset(n, m)] = derivative_from_neighbours(n, m, t, up, down);
    }
  }
}

std::size_t LegendreTable::offset(int n, int m) const {
  return static_cast<std::size_t>(n) * (n + 1) / 2 + m;
}

double LegendreTable::value(int n, int m) const {
  if (n < 0 || n > n_max_ || m < 0 || m > n) throw IndexError("Legendre table entry absent");
  return values_[offset(n, m)];
}

double LegendreTable::derivative(int n, int m) const {
  if (n < 0 || n > n_max_ || m < 0 || m > n) throw IndexError("Legendre table entry absent");
  return derivatives_[offset(n, m)];
}

double LegendreTable::value_or_zero(int n, int m) const {
  if (n < 0 || m < 0 || m > n) return 0.0;
  if (n > n_max_) throw IndexError("Legendre table degree exceeded");
  return values_[offset(n, m)];
}

}  // namespace monogenica
