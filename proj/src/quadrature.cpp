#include "nckc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <sstream>
#include <string>

#include "nckc/errors.hpp"
#include "nckc/summation.hpp"

namespace nckc {
namespace {

constexpr int kMaxNewton = 100;
constexpr long kRescaleExponent = 512;

QuadratureRule legendre_rule(int n) {
  QuadratureRule rule;
  rule.family = QuadratureFamily::finite_legendre;
  rule.order = n;
  rule.nodes.assign(n, 0.0);
  rule.weights.assign(n, 0.0);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int it = 0; it < kMaxNewton; ++it) {
      double p1 = 1.0;
      double p2 = 0.0;
      for (int j = 1; j <= n; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
      }
      pp = n * (z * p1 - p2) / (z * z - 1.0);
      const double dz = p1 / pp;
      z -= dz;
      if (std::abs(dz) <= 1e-16) break;
    }
    // Derivative at the converged node.
    double p1 = 1.0;
    double p2 = 0.0;
    for (int j = 1; j <= n; ++j) {
      const double p3 = p2;
      p2 = p1;
      p1 = ((2.0 * j - 1.0) * z * p2 - (j - 1.0) * p3) / j;
    }
    pp = n * (z * p1 - p2) / (z * z - 1.0);
    const double w = 2.0 / ((1.0 - z * z) * pp * pp);
    rule.nodes[i] = -z;
    rule.nodes[n - 1 - i] = z;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  rule.log_weights.resize(n);
  for (int i = 0; i < n; ++i) rule.log_weights[i] = std::log(rule.weights[i]);
  return rule;
}

// L_n(z) and L_{n-1}(z) for alpha = 0, rescaled by 2^-exponent.
struct LaguerrePair {
  double pn = 0.0;
  double pn1 = 0.0;
  long exponent = 0;
};

LaguerrePair laguerre_pair(int n, double z) {
  double p1 = 1.0;
  double p2 = 0.0;
  long exponent = 0;
  for (int j = 0; j < n; ++j) {
    const double p3 = p2;
    p2 = p1;
    p1 = ((2.0 * j + 1.0 - z) * p2 - j * p3) / (j + 1.0);
    int e = 0;
    std::frexp(p1, &e);
    if (e > kRescaleExponent) {
      p1 = std::ldexp(p1, -e);
      p2 = std::ldexp(p2, -e);
      exponent += e;
    }
  }
  return {p1, p2, exponent};
}

QuadratureRule laguerre_rule(int n) {
  QuadratureRule rule;
  rule.family = QuadratureFamily::halfline_laguerre;
  rule.order = n;
  rule.nodes.assign(n, 0.0);
  rule.log_weights.assign(n, 0.0);
  double z = 0.0;
  for (int i = 0; i < n; ++i) {
    if (i == 0) {
      z = 3.0 / (1.0 + 2.4 * n);
    } else if (i == 1) {
      z += 15.0 / (1.0 + 2.5 * n);
    } else {
      const double ai = i - 1;
      z += (1.0 + 2.55 * ai) / (1.9 * ai) * (z - rule.nodes[i - 2]);
    }
    LaguerrePair p;
    double pp = 0.0;
    for (int it = 0; it < kMaxNewton; ++it) {
      p = laguerre_pair(n, z);
      pp = n * (p.pn - p.pn1) / z;
      const double dz = p.pn / pp;
      z -= dz;
      if (std::abs(dz) <= 4e-16 * std::max(1.0, z)) break;
    }
    p = laguerre_pair(n, z);
    pp = n * (p.pn - p.pn1) / z;
    rule.nodes[i] = z;
    rule.log_weights[i] = -std::log(static_cast<double>(n)) - std::log(std::abs(pp)) -
                          std::log(std::abs(p.pn1)) -
                          2.0 * static_cast<double>(p.exponent) * std::numbers::ln2;
  }
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) rule.weights[i] = std::exp(rule.log_weights[i]);
  return rule;
}

void check_rule(const QuadratureRule& rule) {
  for (int i = 1; i < rule.order; ++i) {
    if (!(rule.nodes[i] > rule.nodes[i - 1])) {
      throw EvaluationError("build_rule: Newton iteration failed to separate nodes at order " +
                            std::to_string(rule.order));
    }
  }
}

}  // namespace

QuadratureRule build_rule(QuadratureFamily family, int order, int order_cap) {
  if (order < 1) throw DomainError("build_rule: order must be positive");
  if (order > order_cap) {
    throw CapacityError("build_rule: order " + std::to_string(order) + " exceeds cap " +
                        std::to_string(order_cap));
  }
  QuadratureRule rule =
      family == QuadratureFamily::finite_legendre ? legendre_rule(order) : laguerre_rule(order);
  check_rule(rule);
  return rule;
}

Complex integrate_nd(const BoxIntegrand& f, std::span<const QuadratureRule> rules,
                     std::span<const Interval> box) {
  if (rules.size() != box.size() || rules.empty()) {
    throw DomainError("integrate_nd: need one rule per axis");
  }
  const std::size_t dims = rules.size();

  // Mapped nodes and weights per axis.
  std::vector<std::vector<double>> xs(dims);
  std::vector<std::vector<double>> ws(dims);
  std::size_t total = 1;
  for (std::size_t d = 0; d < dims; ++d) {
    const QuadratureRule& rule = rules[d];
    const Interval iv = box[d];
    xs[d].resize(rule.order);
    ws[d].resize(rule.order);
    for (int i = 0; i < rule.order; ++i) {
      const double t = rule.nodes[i];
      if (rule.family == QuadratureFamily::finite_legendre) {
        const double half = 0.5 * (iv.hi - iv.lo);
        xs[d][i] = 0.5 * (iv.hi + iv.lo) + half * t;
        ws[d][i] = half * rule.weights[i];
      } else {
        xs[d][i] = iv.lo + iv.hi * t;
        ws[d][i] = iv.hi * std::exp(rule.log_weights[i] + t);
      }
    }
    total *= static_cast<std::size_t>(rule.order);
  }

  auto node_of = [&](std::size_t idx, std::span<double> point) {
    double w = 1.0;
    for (std::size_t d = dims; d-- > 0;) {
      const std::size_t n = xs[d].size();
      const std::size_t k = idx % n;
      idx /= n;
      point[d] = xs[d][k];
      w *= ws[d][k];
    }
    return w;
  };

  std::vector<Complex> terms(total);
  std::exception_ptr failure;
  const auto n_total = static_cast<long long>(total);
#pragma omp parallel
  {
    std::vector<double> point(dims);
#pragma omp for schedule(static)
    for (long long idx = 0; idx < n_total; ++idx) {
      try {
        const double w = node_of(static_cast<std::size_t>(idx), point);
        terms[idx] = w * f(point);
      } catch (...) {
#pragma omp critical(nckc_integrate_nd_failure)
        if (!failure) failure = std::current_exception();
      }
    }
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<double> point(dims);
  for (std::size_t idx = 0; idx < total; ++idx) {
    if (!std::isfinite(terms[idx].real()) || !std::isfinite(terms[idx].imag())) {
      node_of(idx, point);
      std::ostringstream msg;
      msg << "integrate_nd: non-finite integrand at node (";
      for (std::size_t d = 0; d < dims; ++d) msg << (d ? ", " : "") << point[d];
      msg << ")";
      throw EvaluationError(msg.str());
    }
  }
  return pairwise_sum(terms);
}

Complex integrate_endpoint_regularized(const std::function<Complex(double)>& g, double rho,
                                       const RegularizedOptions& options) {
  if (rho == 0.0) throw DomainError("integrate_endpoint_regularized: rho = 0 is a pole");
  if (options.panels_per_end < 1 || options.order < 1) {
    throw DomainError("integrate_endpoint_regularized: bad panel options");
  }
  const QuadratureRule gl = build_rule(QuadratureFamily::finite_legendre, options.order);
  const Complex g1 = g(1.0);
  const Complex expo(-1.0, -rho);

  // y = (1 - x) / 2 runs over (0, 1); panels are graded toward y = 0 (x = 1)
  // and y = 1 (x = -1).
  auto term = [&](double x, double one_minus_x, double weight) {
    const Complex kernel = std::exp(expo * std::log(one_minus_x));
    return weight * 2.0 * (g(x) - g1) * kernel;
  };

  std::vector<Complex> terms;
  terms.reserve(2 * static_cast<std::size_t>(options.panels_per_end * options.order));
  for (int k = options.panels_per_end; k >= 1; --k) {
    const double lo = std::ldexp(1.0, -k - 1);
    const double hi = std::ldexp(1.0, -k);
    const double half = 0.5 * (hi - lo);
    for (int i = 0; i < gl.order; ++i) {
      const double d = 0.5 * (hi + lo) + half * gl.nodes[i];
      terms.push_back(term(1.0 - 2.0 * d, 2.0 * d, half * gl.weights[i]));
    }
  }
  for (int k = 1; k <= options.panels_per_end; ++k) {
    const double lo = std::ldexp(1.0, -k - 1);
    const double hi = std::ldexp(1.0, -k);
    const double half = 0.5 * (hi - lo);
    for (int i = gl.order; i-- > 0;) {
      const double d = 0.5 * (hi + lo) + half * gl.nodes[i];
      terms.push_back(term(-1.0 + 2.0 * d, 2.0 - 2.0 * d, half * gl.weights[i]));
    }
  }
  for (const Complex& t : terms) {
    if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) {
      throw EvaluationError("integrate_endpoint_regularized: non-finite integrand");
    }
  }
  const Complex subtracted = pairwise_sum(terms);
  const Complex closed = g1 * std::exp(Complex(0.0, -rho * std::numbers::ln2)) / Complex(0.0, -rho);
  return subtracted + closed;
}

}  // namespace nckc
