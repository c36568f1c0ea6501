#pragma once

#include <complex>

namespace nckc {

using Complex = std::complex<double>;

/// ln Gamma(x) for x > 0. Throws DomainError otherwise.
double log_gamma(double x);

/// Principal branch of ln Gamma(z). The imaginary part is continuous on
/// Re z > 0; arguments with Re z < 1/2 are shifted upward by the recurrence.
/// Throws DomainError at the poles z = 0, -1, -2, ...
Complex log_gamma(Complex z);

/// Gamma(a + i rho) / Gamma(a - i rho), a > 0. Unimodular.
Complex gamma_ratio_unimodular(double a, double rho);

/// Generalized Laguerre polynomial L_n^alpha(u), upward three-term recurrence.
double laguerre(int n, double alpha, double u);

/// Jacobi polynomial P_n^(alpha,beta)(x), upward three-term recurrence.
/// Throws EvaluationError if the value overflows; use jacobi_scaled then.
double jacobi(int n, double alpha, double beta, double x);

/// Value represented as mantissa * 2^exponent so that high-degree
/// polynomials with large parameters neither overflow nor underflow.
struct ScaledValue {
  double mantissa = 0.0;
  long exponent = 0;

  /// ln|value|; -inf for an exact zero.
  [[nodiscard]] double log_abs() const;
  [[nodiscard]] int sign() const { return (mantissa > 0) - (mantissa < 0); }
};

ScaledValue jacobi_scaled(int n, double alpha, double beta, double x);

/// Gegenbauer polynomial C_nu^2(x) (index lambda = 2).
double gegenbauer2(int nu, double x);

}  // namespace nckc
