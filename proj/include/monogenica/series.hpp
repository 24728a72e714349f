#pragma once

#include <map>
#include <string>

#include "monogenica/basis.hpp"
#include "monogenica/calculus.hpp"
#include "monogenica/quadrature.hpp"

namespace monogenica {

enum class SeriesKind { Fourier, Taylor, Laurent };

const char* to_string(SeriesKind kind) noexcept;

struct Truncation {
  int k_min = 0;
  int k_max = 0;

  friend bool operator==(const Truncation&, const Truncation&) = default;
};

/// Finite expansion sum_idx basis(idx, x) * coeffs[idx] in a right
/// H-linear space. Fourier and Taylor series only carry inner indices.
struct SeriesExpansion {
  SeriesKind kind = SeriesKind::Fourier;
  Family family = Family::OrthonormalPhi;
  std::map<BasisIndex, Quaternion> coeffs;
  Truncation truncation;

  Quaternion coefficient(const BasisIndex& idx) const;
  bool has_outer_terms() const;

  /// Throws IndexError or UnsupportedError when the invariants are violated.
  void validate() const;

  friend bool operator==(const SeriesExpansion&, const SeriesExpansion&) = default;
};

/// alpha_{n,l} = <phi_n^l, f> over a unit-ball rule, n <= n_max.
SeriesExpansion fourier_expand(const PointFunction& f, int n_max, const QuadratureRule& rule);

/// Sum in increasing |k|, then k, then l. Throws PoleError at x = 0 when
/// outer terms are present.
Quaternion evaluate(const SeriesExpansion& series, const Point3& x);

/// Termwise d0 through the exact index maps.
SeriesExpansion derive_series(const SeriesExpansion& series);

/// Termwise primitive. Throws NoPrimitiveError (an UnsupportedError) when an
/// excluded outer index carries a coefficient.
SeriesExpansion primitive_series(const SeriesExpansion& series);

enum class LaurentVariant { Appell, Phi };

/// Coefficients over k in [k_min, k_max] \ {-1} from one integration pass
/// over the sphere of radius rho:
/// gamma_{k,l} = |k+1| / (4^{l+1} pi) sum w conj(A_{-(k+2)}^l(conj y)) (y/|y|) f(y).
/// The Phi variant rescales to the orthonormal family.
SeriesExpansion laurent_expand(const PointFunction& f, double rho, int k_min, int k_max,
                               LaurentVariant variant = LaurentVariant::Appell,
                               const QuadratureOrders* orders = nullptr);

/// Taylor coefficients t_{n,l}, n <= n_max, from the sphere of radius rho.
SeriesExpansion taylor_coeffs(const PointFunction& f, int n_max, double rho,
                              const QuadratureOrders* orders = nullptr);

/// Same coefficients in the other family, alpha = c(n, l) t.
SeriesExpansion fourier_from_taylor(const SeriesExpansion& taylor);
SeriesExpansion taylor_from_fourier(const SeriesExpansion& fourier);

/// Rescales every coefficient to the requested family, keeping the kind.
SeriesExpansion convert_family(const SeriesExpansion& series, Family to);

/// sum w E2(y - x) (y/|y|) f(y) over a Sphere rule. Throws DomainError when
/// x lies on the sphere.
Quaternion cauchy_integral(const PointFunction& f, const Point3& x, const QuadratureRule& rule);

struct ParsevalResult {
  double lhs = 0.0;  // sum |alpha|^2
  double rhs = 0.0;  // Sc <f, f>
};

ParsevalResult parseval(const SeriesExpansion& series, const PointFunction& f, const QuadratureRule& rule);

/// sqrt(Sc <f - s, f - s>) over the rule.
double l2_residual(const SeriesExpansion& series, const PointFunction& f, const QuadratureRule& rule);

/// Drops coefficients whose largest component is <= threshold.
SeriesExpansion prune(const SeriesExpansion& series, double threshold);

/// Keeps only indices with k_min <= k <= k_max.
SeriesExpansion truncate(const SeriesExpansion& series, int k_min, int k_max);

/// Taylor/Appell series made of monogenic constants A_l^l only.
ZetaPolynomial to_zeta_polynomial(const SeriesExpansion& series);

/// {"kind", "family", "truncation": {"k_min", "k_max"}, "entries": [{"k", "l", "c": [4]}]}
/// with entries sorted by (k, l) and shortest round-trip number formatting.
std::string to_json(const SeriesExpansion& series, int indent = 2);

/// Throws ParseError on malformed documents and IndexError on invalid indices.
SeriesExpansion series_from_json(const std::string& text);

}  // namespace monogenica
