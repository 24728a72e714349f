#include "monogenica/quadrature.hpp"

#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "numeric_util.hpp"

namespace monogenica {

using detail::kPi;

double Domain::measure() const {
  switch (kind) {
    case DomainKind::Ball:
      return 4.0 * kPi * r_out * r_out * r_out / 3.0;
    case DomainKind::Sphere:
      return 4.0 * kPi * r_in * r_in;
    case DomainKind::Shell:
      return 4.0 * kPi * (r_out * r_out * r_out - r_in * r_in * r_in) / 3.0;
    case DomainKind::Exterior:
      return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

const char* to_string(DomainKind kind) noexcept {
  switch (kind) {
    case DomainKind::Ball:
      return "ball";
    case DomainKind::Sphere:
      return "sphere";
    case DomainKind::Shell:
      return "shell";
    case DomainKind::Exterior:
      return "exterior";
  }
  return "?";
}

QuadratureOrders QuadratureOrders::for_degree(int n_max) {
  if (n_max < 0) throw DomainError("negative degree for quadrature orders");
  return {n_max + 4, n_max + 4, 2 * n_max + 4};
}

GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw DomainError("Gauss-Legendre order must be at least 1");
  GaussLegendre g;
  g.nodes.resize(n);
  g.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-15) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    g.nodes[i] = -x;
    g.nodes[n - 1 - i] = x;
    g.weights[i] = w;
    g.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) g.nodes[n / 2] = 0.0;
  return g;
}

QuadratureRule QuadratureRule::build(const Domain& domain, const QuadratureOrders& orders) {
  if (orders.n_r < 1 || orders.n_theta < 1 || orders.n_phi < 1) {
    throw DomainError("quadrature orders must be at least 1");
  }
  const bool sphere = domain.kind == DomainKind::Sphere;
  const bool exterior = domain.kind == DomainKind::Exterior;
  if (sphere || exterior) {
    if (!(domain.r_in > 0.0) || !std::isfinite(domain.r_in)) throw DomainError("radius must be positive");
  } else if (domain.kind == DomainKind::Ball) {
    if (!(domain.r_out > 0.0) || !std::isfinite(domain.r_out)) throw DomainError("radius must be positive");
  } else if (!(domain.r_in >= 0.0 && domain.r_out > domain.r_in && std::isfinite(domain.r_out))) {
    throw DomainError("shell needs 0 <= r_in < r_out");
  }

  // Radial nodes (r, weight including the Jacobian r^2).
  std::vector<std::pair<double, double>> radial;
  if (sphere) {
    radial.emplace_back(domain.r_in, domain.r_in * domain.r_in);
  } else {
    const GaussLegendre g = gauss_legendre(orders.n_r);
    const double a = exterior ? 0.0 : domain.r_in;
    const double b = exterior ? 1.0 : domain.r_out;
    for (int i = 0; i < orders.n_r; ++i) {
      const double u = 0.5 * (b - a) * g.nodes[i] + 0.5 * (b + a);
      const double wu = 0.5 * (b - a) * g.weights[i];
      if (exterior) {
        const double r0 = domain.r_in;
        radial.emplace_back(r0 / u, wu * r0 * r0 * r0 / (u * u * u * u));
      } else {
        radial.emplace_back(u, wu * u * u);
      }
    }
  }
  const GaussLegendre gt = gauss_legendre(orders.n_theta);
  const double dphi = 2.0 * kPi / orders.n_phi;

  std::vector<QuadratureNode> nodes;
  nodes.reserve(radial.size() * orders.n_theta * orders.n_phi);
  for (const auto& [r, wr] : radial) {
    for (int j = 0; j < orders.n_theta; ++j) {
      const double ct = gt.nodes[j];
      const double st = std::sqrt((1.0 - ct) * (1.0 + ct));
      for (int k = 0; k < orders.n_phi; ++k) {
        const double phi = k * dphi;
        nodes.push_back({{r * ct, r * st * std::cos(phi), r * st * std::sin(phi)}, wr * gt.weights[j] * dphi});
      }
    }
  }
  return QuadratureRule(domain, orders, std::move(nodes));
}

int max_threads() {
  if (const char* env = std::getenv("MONOGENICA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 1024L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body) {
  const std::size_t workers = std::min<std::size_t>(static_cast<std::size_t>(max_threads()), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto run = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

Quaternion pairwise_sum(std::span<const Quaternion> values) {
  if (values.size() <= 8) {
    Quaternion s;
    for (const auto& v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace {

template <typename Term>
Quaternion node_sum(const QuadratureRule& rule, Term&& term) {
  const auto& nodes = rule.nodes();
  std::vector<Quaternion> terms(nodes.size());
  constexpr std::size_t kBlock = 256;
  const std::size_t blocks = (nodes.size() + kBlock - 1) / kBlock;
  parallel_for(blocks, [&](std::size_t b) {
    const std::size_t end = std::min(nodes.size(), (b + 1) * kBlock);
    for (std::size_t i = b * kBlock; i < end; ++i) terms[i] = term(nodes[i]);
  });
  return pairwise_sum(terms);
}

}  // namespace

Quaternion integrate(const PointFunction& f, const QuadratureRule& rule) {
  return node_sum(rule, [&](const QuadratureNode& n) { return n.weight * f(n.x); });
}

Quaternion inner_product(const PointFunction& f, const PointFunction& g, const QuadratureRule& rule) {
  return node_sum(rule, [&](const QuadratureNode& n) { return n.weight * (conj(f(n.x)) * g(n.x)); });
}

Quaternion surface_integral_with_element(const PointFunction& a, const PointFunction& f,
                                         const QuadratureRule& rule) {
  if (rule.domain().kind != DomainKind::Sphere) throw DomainError("surface integral needs a sphere rule");
  return node_sum(rule, [&](const QuadratureNode& n) {
    const Quaternion normal = n.x.to_quaternion() / norm(n.x);
    return n.weight * (conj(a(conj(n.x))) * normal * f(n.x));
  });
}

GramMatrix gram_matrix(const std::vector<PointFunction>& functions, const QuadratureRule& rule) {
  const std::size_t nf = functions.size();
  const std::size_t nn = rule.size();
  std::vector<Quaternion> values(nf * nn);
  parallel_for(nf, [&](std::size_t i) {
    for (std::size_t q = 0; q < nn; ++q) values[i * nn + q] = functions[i](rule.nodes()[q].x);
  });
  GramMatrix g{nf, std::vector<Quaternion>(nf * nf)};
  parallel_for(nf, [&](std::size_t i) {
    std::vector<Quaternion> terms(nn);
    for (std::size_t j = 0; j < nf; ++j) {
      for (std::size_t q = 0; q < nn; ++q) {
        terms[q] = rule.nodes()[q].weight * (conj(values[i * nn + q]) * values[j * nn + q]);
      }
      g.entries[i * nf + j] = pairwise_sum(terms);
    }
  });
  return g;
}

}  // namespace monogenica
