#pragma once

#include <cmath>
#include <functional>
#include <ostream>

#include "monogenica/errors.hpp"

namespace monogenica {

/// Real quaternion a0 + a1 e1 + a2 e2 + a3 e3 with e1 e2 = e3 and
/// ei ej + ej ei = -2 delta_ij.
struct Quaternion {
  double a0 = 0.0;
  double a1 = 0.0;
  double a2 = 0.0;
  double a3 = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double s) : a0(s) {}  // NOLINT(google-explicit-constructor)
  constexpr Quaternion(double s, double x, double y, double z) : a0(s), a1(x), a2(y), a3(z) {}

  constexpr double operator[](int i) const {
    return i == 0 ? a0 : i == 1 ? a1 : i == 2 ? a2 : a3;
  }

  constexpr Quaternion& operator+=(const Quaternion& b) {
    a0 += b.a0;
    a1 += b.a1;
    a2 += b.a2;
    a3 += b.a3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& b) {
    a0 -= b.a0;
    a1 -= b.a1;
    a2 -= b.a2;
    a3 -= b.a3;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    a0 *= s;
    a1 *= s;
    a2 *= s;
    a3 *= s;
    return *this;
  }

  friend constexpr bool operator==(const Quaternion&, const Quaternion&) = default;
};

inline constexpr Quaternion kE0{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion kE1{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion kE2{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion kE3{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator-(const Quaternion& a) { return {-a.a0, -a.a1, -a.a2, -a.a3}; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a *= (1.0 / s); }

constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.a0 * b.a0 - a.a1 * b.a1 - a.a2 * b.a2 - a.a3 * b.a3,
          a.a0 * b.a1 + a.a1 * b.a0 + a.a2 * b.a3 - a.a3 * b.a2,
          a.a0 * b.a2 - a.a1 * b.a3 + a.a2 * b.a0 + a.a3 * b.a1,
          a.a0 * b.a3 + a.a1 * b.a2 - a.a2 * b.a1 + a.a3 * b.a0};
}

constexpr Quaternion conj(const Quaternion& a) { return {a.a0, -a.a1, -a.a2, -a.a3}; }
constexpr double sc(const Quaternion& a) { return a.a0; }
constexpr Quaternion vec(const Quaternion& a) { return {0.0, a.a1, a.a2, a.a3}; }
constexpr double norm2(const Quaternion& a) {
  return a.a0 * a.a0 + a.a1 * a.a1 + a.a2 * a.a2 + a.a3 * a.a3;
}
inline double norm(const Quaternion& a) { return std::sqrt(norm2(a)); }

/// Largest absolute coordinate; the distance used by most tolerance checks.
inline double max_abs(const Quaternion& a) {
  return std::fmax(std::fmax(std::fabs(a.a0), std::fabs(a.a1)),
                   std::fmax(std::fabs(a.a2), std::fabs(a.a3)));
}

inline Quaternion inv(const Quaternion& a) {
  const double n2 = norm2(a);
  if (n2 == 0.0) throw DomainError("inverse of the zero quaternion");
  return conj(a) / n2;
}

/// Maps a monogenic function value f to the value of the associated
/// anti-monogenic function: negates the e1 and e2 parts only.
constexpr Quaternion antimonogenic_involution(const Quaternion& a) {
  return {a.a0, -a.a1, -a.a2, a.a3};
}

/// Point of R^3, read as the reduced quaternion x0 + x1 e1 + x2 e2.
struct Point3 {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  constexpr Quaternion to_quaternion() const { return {x0, x1, x2, 0.0}; }
  friend constexpr bool operator==(const Point3&, const Point3&) = default;
};

constexpr Point3 operator+(const Point3& a, const Point3& b) {
  return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2};
}
constexpr Point3 operator-(const Point3& a, const Point3& b) {
  return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2};
}
constexpr Point3 operator*(double s, const Point3& a) { return {s * a.x0, s * a.x1, s * a.x2}; }

constexpr Point3 conj(const Point3& x) { return {x.x0, -x.x1, -x.x2}; }
constexpr double norm2(const Point3& x) { return x.x0 * x.x0 + x.x1 * x.x1 + x.x2 * x.x2; }
inline double norm(const Point3& x) { return std::sqrt(norm2(x)); }

struct SphericalCoords {
  double r = 0.0;
  double theta = 0.0;  // polar angle measured from the x0 axis
  double phi = 0.0;    // azimuth in the (x1, x2) plane
};

inline SphericalCoords to_spherical(const Point3& x) {
  const double r = norm(x);
  if (r == 0.0) return {};
  return {r, std::acos(std::fmax(-1.0, std::fmin(1.0, x.x0 / r))), std::atan2(x.x2, x.x1)};
}

inline Point3 from_spherical(double r, double theta, double phi) {
  const double s = std::sin(theta);
  return {r * std::cos(theta), r * s * std::cos(phi), r * s * std::sin(phi)};
}

/// Quaternion-valued function of a point of R^3.
using PointFunction = std::function<Quaternion(const Point3&)>;

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.a0 << ", " << q.a1 << ", " << q.a2 << ", " << q.a3 << ')';
}
inline std::ostream& operator<<(std::ostream& os, const Point3& x) {
  return os << '(' << x.x0 << ", " << x.x1 << ", " << x.x2 << ')';
}

}  // namespace monogenica
