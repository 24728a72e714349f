#pragma once

#include <vector>

namespace monogenica {

// Associated Legendre functions P_n^m are used WITHOUT the Condon-Shortley
// phase: P_1^1(t) = +sqrt(1 - t^2). This is the only phase under which the
// relations between the coefficient functions A, B, C of the spherical
// monogenics hold as written, e.g. (n+m+2) A^{m,n} = C^{m+1,n} - B^{m+1,n}.
inline constexpr bool kCondonShortleyPhase = false;

/// Highest Legendre degree accepted. Basis degrees up to 64 need P_{n+1}^m.
inline constexpr int kMaxLegendreDegree = 65;

struct LegendreValue {
  double value = 0.0;
  double derivative = 0.0;  // d/dt P_n^m(t)
};

/// P_n^m(t) and its t-derivative for 0 <= m <= n, |t| <= 1.
///
/// Values come from the upward recurrence in n seeded with the closed forms
/// P_m^m = (2m-1)!! (1-t^2)^{m/2} and P_{m+1}^m = (2m+1) t P_m^m. The
/// derivative is recurrence I solved for P', i.e.
/// (1-t^2) P_n^m' = (n+m) P_{n-1}^m - n t P_n^m, with the one-sided limits
/// used at t = +-1 (infinite for m = 1).
LegendreValue assoc_legendre(int n, int m, double t);

/// All P_n^m(t), 0 <= m <= n <= n_max, at one abscissa.
class LegendreTable {
 public:
  LegendreTable(int n_max, double t);

  int n_max() const noexcept { return n_max_; }
  double t() const noexcept { return t_; }

  /// Throws IndexError unless 0 <= m <= n <= n_max.
  double value(int n, int m) const;
  double derivative(int n, int m) const;

  /// P_n^m with the natural extension P_n^m = 0 for m > n and n < 0.
  double value_or_zero(int n, int m) const;

 private:
  std::size_t offset(int n, int m) const;

  int n_max_;
  double t_;
  std::vector<double> values_;
  std::vector<double> derivatives_;
};

}  // namespace monogenica
