#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "monogenica/quaternion.hpp"

namespace monogenica {

enum class DomainKind { Ball, Sphere, Shell, Exterior };

/// Ball(radius), Sphere(radius), Shell(r_in, r_out) or Exterior(r_in), the
/// unbounded region |x| > r_in.
struct Domain {
  DomainKind kind = DomainKind::Ball;
  double r_in = 0.0;
  double r_out = 1.0;

  static Domain ball(double radius = 1.0) { return {DomainKind::Ball, 0.0, radius}; }
  static Domain sphere(double radius = 1.0) { return {DomainKind::Sphere, radius, radius}; }
  static Domain shell(double r_in, double r_out) { return {DomainKind::Shell, r_in, r_out}; }
  static Domain exterior(double r_in = 1.0) { return {DomainKind::Exterior, r_in, r_in}; }

  /// Volume or area; infinite for Exterior.
  double measure() const;
};

const char* to_string(DomainKind kind) noexcept;

struct QuadratureOrders {
  int n_r = 8;
  int n_theta = 8;
  int n_phi = 12;

  /// n_r = n_theta = n_max + 4, n_phi = 2 n_max + 4.
  static QuadratureOrders for_degree(int n_max);
};

/// Gauss-Legendre nodes and weights on [-1, 1], ascending nodes.
struct GaussLegendre {
  std::vector<double> nodes;
  std::vector<double> weights;
};
GaussLegendre gauss_legendre(int n);

struct QuadratureNode {
  Point3 x;
  double weight = 0.0;
};

/// Immutable product rule: Gauss-Legendre in the radius and in cos(theta),
/// trapezoid in phi. Ball and Shell use weight r^2; Exterior maps
/// s = r_in / r to [0, 1] so that r^2 dr = r_in^3 s^{-4} ds.
class QuadratureRule {
 public:
  static QuadratureRule build(const Domain& domain, const QuadratureOrders& orders);

  const Domain& domain() const noexcept { return domain_; }
  const QuadratureOrders& orders() const noexcept { return orders_; }
  const std::vector<QuadratureNode>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }

 private:
  QuadratureRule(Domain d, QuadratureOrders o, std::vector<QuadratureNode> n)
      : domain_(d), orders_(o), nodes_(std::move(n)) {}

  Domain domain_;
  QuadratureOrders orders_;
  std::vector<QuadratureNode> nodes_;
};

/// Worker count: MONOGENICA_THREADS if set to a positive integer, otherwise
/// the hardware concurrency.
int max_threads();

/// Calls body(i) for i in [0, count) on up to max_threads() threads. The
/// first exception thrown by any call is rethrown after all workers join.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

/// Sum in a fixed binary-tree order.
Quaternion pairwise_sum(std::span<const Quaternion> values);

/// sum_i w_i f(x_i)
Quaternion integrate(const PointFunction& f, const QuadratureRule& rule);

/// sum_i w_i conj(f(x_i)) g(x_i)
Quaternion inner_product(const PointFunction& f, const PointFunction& g, const QuadratureRule& rule);

/// sum_i w_i conj(A(conj(y_i))) (y_i / |y_i|) f(y_i) over a Sphere rule.
Quaternion surface_integral_with_element(const PointFunction& a, const PointFunction& f,
                                         const QuadratureRule& rule);

/// Row-major matrix of <f_i, f_j>.
struct GramMatrix {
  std::size_t size = 0;
  std::vector<Quaternion> entries;

  const Quaternion& operator()(std::size_t i, std::size_t j) const { return entries[i * size + j]; }
};

GramMatrix gram_matrix(const std::vector<PointFunction>& functions, const QuadratureRule& rule);

}  // namespace monogenica
