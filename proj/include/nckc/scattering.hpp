#pragma once

#include <complex>
#include <string>
#include <vector>

#include "nckc/quadrature.hpp"
#include "nckc/spectrum.hpp"
#include "nckc/wavefields.hpp"

namespace nckc {

using Complex = std::complex<double>;

// Positive-energy channel. The principal-series label rho follows from the
// Casimir value -25/4 - gamma^2/(2E) = j(j+5) with j = -5/2 + i rho:
//   rho^2 = gamma^2 / (2E),  p = sqrt(2E).
struct ScatteringState {
  ChannelSpec channel;
  double energy = 0.0;
  double p = 0.0;
  double rho = 0.0;
};

/// Throws DomainError for energy <= 0 or not finite.
ScatteringState make_scattering_state(const ChannelSpec& channel, double energy);

/// A_l = Gamma(5/2 + l + i rho) / Gamma(5/2 + l - i rho).
Complex partial_wave_element(double rho, int l);
Complex partial_wave_element(const ScatteringState& state, int l);

/// A_0 .. A_{l_max} by the recurrence A_{l+1} = A_l (l+5/2+i rho)/(l+5/2-i rho).
std::vector<Complex> partial_wave_chain(double rho, int l_max);

/// eta = 2^{-5/2+i rho} Gamma(5/2+i rho) / (pi^{5/2} Gamma(-i rho)).
/// Throws DomainError at rho = 0.
Complex intertwiner_eta(double rho);
Complex intertwiner_eta(const ScatteringState& state);

/// K(x) = eta (1 - x)^{-5/2 - i rho}, x = n.n' < 1.
Complex intertwiner_kernel(double rho, double x);

// Abel summation parameters: damped sums at each epsilon (decreasing,
// positive), extrapolated to epsilon = 0 by Neville's scheme.
struct AbelOptions {
  std::vector<double> epsilons;
  int terms = 0;  // highest index kept in each damped sum
};

/// eps = 0.8 * 2^-k, k = 0..7; 8000 terms.
AbelOptions default_series_abel();

/// Abel-summed  sum_nu (nu+2)/(2 pi^3) A_nu C_nu^2(x):  the Gegenbauer
/// expansion of K. It diverges in the ordinary sense; the Abel value is K(x).
Complex intertwiner_kernel_series(double rho, double x, const AbelOptions& options);

/// Coefficient of C_l^2 in K, rescaled to compare with A_l:
///   16 pi^2 l! / Gamma(l+4) * int_{-1}^{1} K(x) C_l^2(x) (1-x^2)^{3/2} dx,
/// with the endpoint singularity at x = 1 handled by subtraction.
Complex verify_expansion_coefficient(double rho, int l, const RegularizedOptions& options = {});
Complex verify_expansion_coefficient(const ScatteringState& state, int l,
                                     const RegularizedOptions& options = {});

/// S(d, d') = sum_{l <= l_max} A_l sum_m Y_lm(d) Y_lm(d'). Truncated; no damping.
Complex s_kernel(const ScatteringState& state, AngularDirection dir, AngularDirection dir_prime,
                 int l_max);

enum class AmplitudeMethod { partial_wave, integral_rep };

std::string to_string(AmplitudeMethod method);
/// Throws DomainError on an unknown name.
AmplitudeMethod parse_amplitude_method(const std::string& name);

struct AmplitudeRequest {
  AngularDirection in_dir;
  AngularDirection out_dir;
  int l_max = 1200;
  AmplitudeMethod method = AmplitudeMethod::partial_wave;
  // partial_wave only
  std::vector<double> abel_epsilons{0.2, 0.1, 0.05, 0.025};
  // integral_rep only: points per axis start at min_points and double until two
  // successive values differ by less than rel_tol, up to max_points.
  int min_points = 64;
  int max_points = 512;
  double rel_tol = 1e-3;
};

struct AmplitudeResult {
  Complex value;
  AmplitudeMethod method = AmplitudeMethod::partial_wave;
  // partial_wave: the damped sums (already multiplied by 2 pi / (i p))
  std::vector<double> epsilons;
  std::vector<Complex> damped;
  int l_max = 0;
  // integral_rep: the trapezoid sequence (prefactor included)
  std::vector<int> points;
  std::vector<Complex> refinements;
  bool converged = true;
};

/// f = (2 pi / (i p)) sum_l A_l sum_m Y_lm(d) Y_lm(d'), the Abel limit of the
/// e^{-eps l} damped sums. Throws DomainError for coincident directions.
AmplitudeResult amplitude_partial_wave(const ScatteringState& state, const AmplitudeRequest& req);

/// f = (2 pi / (i p)) eta lambda(d) lambda(d') int (1 - n.n')^{-5/2-i rho} e^{-i s.alpha} d^3 alpha
/// by the periodic trapezoid rule, lambda = reduced_lambda.
/// Throws DomainError for coincident directions.
AmplitudeResult amplitude_integral(const ScatteringState& state, const AmplitudeRequest& req);

/// Dispatches on req.method.
AmplitudeResult amplitude(const ScatteringState& state, const AmplitudeRequest& req);

}  // namespace nckc
