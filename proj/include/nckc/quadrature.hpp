#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace nckc {

using Complex = std::complex<double>;

enum class QuadratureFamily {
  finite_legendre,    // weight 1 on (-1, 1)
  halfline_laguerre,  // weight e^{-u} on (0, inf)
};

inline constexpr int kDefaultOrderCap = 512;

// Gauss rule with ascending nodes. `log_weights` carries ln w_i; for
// high-order Laguerre rules the outermost weights drop below the smallest
// double and `weights` underflows to zero while `log_weights` stays exact.
struct QuadratureRule {
  QuadratureFamily family = QuadratureFamily::finite_legendre;
  int order = 0;
  std::vector<double> nodes;
  std::vector<double> weights;
  std::vector<double> log_weights;
};

/// Newton iteration on the three-term recurrence. Throws CapacityError for
/// order > order_cap and DomainError for order < 1.
QuadratureRule build_rule(QuadratureFamily family, int order, int order_cap = kDefaultOrderCap);

// Per-axis integration range. Finite rules are mapped affinely onto
// [lo, hi]. Half-line rules map t -> lo + hi * t, so `hi` is a length scale,
// and the e^{-t} weight is divided out: the axis integrates f over [lo, inf).
struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

using BoxIntegrand = std::function<Complex(std::span<const double>)>;

/// Tensor-product quadrature of f over the box. Integrand values are
/// computed in parallel and summed pairwise in lexicographic node order, so
/// the result does not depend on the thread count. Throws EvaluationError
/// naming the node when f returns a non-finite value.
Complex integrate_nd(const BoxIntegrand& f, std::span<const QuadratureRule> rules,
                     std::span<const Interval> box);

struct RegularizedOptions {
  int panels_per_end = 52;  // geometric panels [2^-k-1, 2^-k] toward each endpoint
  int order = 16;           // Gauss-Legendre points per panel
};

/// Analytic-continuation value of  int_{-1}^{1} g(x) (1-x)^{-1-i rho} dx.
///
/// Computed as the absolutely convergent integral of [g(x) - g(1)] (1-x)^{-1-i rho}
/// on panels graded toward both endpoints, plus g(1) 2^{-i rho} / (-i rho).
/// Throws DomainError for rho == 0.
Complex integrate_endpoint_regularized(const std::function<Complex(double)>& g, double rho,
                                       const RegularizedOptions& options = {});

}  // namespace nckc
