#pragma once

#include <compare>
#include <string>
#include <vector>

#include "monogenica/quaternion.hpp"

namespace monogenica {

class LegendreTable;

/// Largest homogeneity degree n supported by the basis evaluators.
inline constexpr int kMaxDegree = 64;

/// Signed homogeneity degree k (k != -1) and column l, 0 <= l <= |k+1| - 1.
/// k >= 0 addresses the inner element of degree n = k, k <= -2 the outer
/// element of degree n = -(k+2) (homogeneity -(n+2)).
struct BasisIndex {
  int k = 0;
  int l = 0;

  bool is_inner() const noexcept { return k >= 0; }
  int degree() const noexcept { return k >= 0 ? k : -(k + 2); }
  int columns() const noexcept { return k >= 0 ? k + 1 : -(k + 1); }

  friend auto operator<=>(const BasisIndex&, const BasisIndex&) = default;
};

bool is_valid(const BasisIndex& idx) noexcept;
void require_valid(const BasisIndex& idx);
std::string to_string(const BasisIndex& idx);  // "k:l"

constexpr BasisIndex inner_index(int n, int l) { return {n, l}; }
constexpr BasisIndex outer_index(int n, int l) { return {-(n + 2), l}; }

/// All valid indices with k_min <= k <= k_max, ordered by k then l.
std::vector<BasisIndex> indices_in_range(int k_min, int k_max);

enum class Family { OrthonormalPhi, AppellA };

const char* to_string(Family f) noexcept;

// ---------------------------------------------------------------------------
// Construction from associated Legendre functions (cross-validation path).

struct CoeffValues {
  double A = 0.0;
  double B = 0.0;
  double C = 0.0;
};

/// Coefficient functions A^{m,n}, B^{m,n}, C^{m,n} at polar angle theta,
/// 0 <= m <= n + 1. C is evaluated without dividing by sin(theta), so the
/// poles theta = 0, pi are regular.
CoeffValues coeff_functions(int n, int m, double theta);
CoeffValues coeff_functions(const LegendreTable& table, int n, int m);

enum class Harmonic { X, Y };

/// Spherical monogenic X_n^j (0 <= j <= n+1) or Y_n^j (1 <= j <= n+1).
Quaternion spherical_monogenic(Harmonic which, int n, int j, double theta, double phi);

/// L2(unit ball) norm of r^n X_n^m (equal to that of r^n Y_n^m for m >= 1).
double solid_monogenic_norm(int n, int m);

/// Orthonormal inner element phi_n^l assembled from X, Y in spherical coordinates.
Quaternion phi_inner_spherical(int n, int l, const Point3& x);

/// Inner Appell element A_n^l assembled from the unnormalized X, Y.
Quaternion appell_inner_spherical(int n, int l, const Point3& x);

// ---------------------------------------------------------------------------
// Production evaluators (Cartesian, pole free).

/// zeta = x1 - x2 e3, generator of the monogenic constants A_l^l = zeta^l.
constexpr Quaternion zeta(const Point3& x) { return {x.x1, 0.0, 0.0, -x.x2}; }

/// Closed-form factorization of A_n^l: a polynomial in conj(x) and x times zeta^l.
Quaternion appell_inner_closed(int n, int l, const Point3& x);

enum class Recurrence { TwoStep, OneStep };

/// A_n^l generated from zeta^l by the Appell recurrences in n at fixed l.
/// OneStep uses the anti-monogenic partner of each iterate.
Quaternion appell_inner_recur(int n, int l, const Point3& x, Recurrence kind = Recurrence::TwoStep);

/// A_n^l by the two-step recurrence; the evaluator used by everything else.
Quaternion appell_inner(int n, int l, const Point3& x);

/// Inner orthonormal element phi_n^l, evaluated as A_n^l / c(n, l).
Quaternion phi_inner(int n, int l, const Point3& x);

/// Kelvin transform (conj(x)/|x|^3) f(conj(x)/|x|^2). Throws PoleError at x = 0.
Quaternion kelvin(const PointFunction& f, const Point3& x);

/// Outer orthonormal element phi_{-(n+2)}^l = sqrt((2n+1)/(2n+3)) K(phi_n^l).
Quaternion phi_outer(int n, int l, const Point3& x);

/// Outer Appell element A_{-(n+2)}^l; diagonal l = n uses its closed form.
Quaternion appell_outer(int n, int l, const Point3& x);

/// Outer Appell element from x0-derivatives of conj(x)/|x|^{2l+3}, independent
/// of the Kelvin transform (Gegenbauer form of the derivatives).
Quaternion appell_outer_x0_route(int n, int l, const Point3& x);

/// Cauchy kernel E2(x) = conj(x) / (4 pi |x|^3).
Quaternion cauchy_kernel(const Point3& x);

/// Factor c with basis_from(idx) = c * basis_to(idx). For from = AppellA,
/// to = OrthonormalPhi this is the A <-> phi transformation factor.
double family_convert(const BasisIndex& idx, Family from, Family to);

/// Evaluates the element idx of the given family (inner or outer).
Quaternion basis_value(Family family, const BasisIndex& idx, const Point3& x);

}  // namespace monogenica
