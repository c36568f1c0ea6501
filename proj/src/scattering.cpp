#include "nckc/scattering.hpp"

#include <cmath>
#include <numbers>

#include "nckc/errors.hpp"
#include "nckc/kernels.hpp"
#include "nckc/specfun.hpp"
#include "nckc/summation.hpp"

namespace nckc {
namespace {

constexpr Complex kI{0.0, 1.0};

void require_separated(const AmplitudeRequest& req) {
  make_direction(req.in_dir.theta, req.in_dir.phi);
  make_direction(req.out_dir.theta, req.out_dir.phi);
  if (req.in_dir == req.out_dir) {
    throw DomainError("amplitude: coincident directions (forward direction is excluded)");
  }
}

void require_epsilons(const std::vector<double>& eps) {
  if (eps.empty()) throw DomainError("Abel summation: empty epsilon list");
  for (std::size_t i = 0; i < eps.size(); ++i) {
    if (!(eps[i] > 0.0) || (i > 0 && !(eps[i] < eps[i - 1]))) {
      throw DomainError("Abel summation: epsilons must be positive and decreasing");
    }
  }
}

Complex prefactor(const ScatteringState& s) { return 2.0 * std::numbers::pi / (kI * s.p); }

}  // namespace

ScatteringState make_scattering_state(const ChannelSpec& channel, double energy) {
  validate(channel);
  if (!(energy > 0.0) || !std::isfinite(energy)) {
    throw DomainError("scattering state needs a positive finite energy");
  }
  ScatteringState s;
  s.channel = channel;
  s.energy = energy;
  s.p = std::sqrt(2.0 * energy);
  s.rho = channel.gamma / s.p;
  return s;
}

Complex partial_wave_element(double rho, int l) {
  if (l < 0) throw DomainError("partial_wave_element: negative l");
  return gamma_ratio_unimodular(2.5 + l, rho);
}

Complex partial_wave_element(const ScatteringState& state, int l) {
  return partial_wave_element(state.rho, l);
}

std::vector<Complex> partial_wave_chain(double rho, int l_max) {
  if (l_max < 0) throw DomainError("partial_wave_chain: negative l_max");
  std::vector<Complex> a(l_max + 1);
  a[0] = partial_wave_element(rho, 0);
  for (int l = 0; l < l_max; ++l) {
    a[l + 1] = a[l] * Complex(l + 2.5, rho) / Complex(l + 2.5, -rho);
  }
  return a;
}

Complex intertwiner_eta(double rho) {
  if (rho == 0.0) throw DomainError("intertwiner_eta: rho = 0 hits the pole of Gamma(-i rho)");
  const Complex log_eta = Complex(-2.5, rho) * std::numbers::ln2 + log_gamma(Complex(2.5, rho)) -
                          log_gamma(Complex(0.0, -rho)) - 2.5 * std::log(std::numbers::pi);
  return std::exp(log_eta);
}

Complex intertwiner_eta(const ScatteringState& state) { return intertwiner_eta(state.rho); }

Complex intertwiner_kernel(double rho, double x) {
  if (!(x >= -1.0 && x < 1.0)) throw DomainError("intertwiner_kernel: need -1 <= x < 1");
  const double log_base = std::log1p(-x);
  return intertwiner_eta(rho) * std::exp(Complex(-2.5, -rho) * log_base);
}

AbelOptions default_series_abel() {
  AbelOptions o;
  for (int k = 0; k < 8; ++k) o.epsilons.push_back(0.8 * std::ldexp(1.0, -k));
  o.terms = 8000;
  return o;
}

Complex intertwiner_kernel_series(double rho, double x, const AbelOptions& options) {
  if (!(x >= -1.0 && x < 1.0)) throw DomainError("intertwiner_kernel_series: need -1 <= x < 1");
  require_epsilons(options.epsilons);
  if (options.terms < 1) throw DomainError("intertwiner_kernel_series: need terms >= 1");
  const std::vector<Complex> a = partial_wave_chain(rho, options.terms);

  // coefficient of C_nu^2(x), undamped
  std::vector<Complex> coef(options.terms + 1);
  double c_prev = 0.0;
  double c = 1.0;
  for (int nu = 0; nu <= options.terms; ++nu) {
    if (nu == 1) {
      c_prev = c;
      c = 4.0 * x;
    } else if (nu > 1) {
      const double next = (2.0 * x * (nu + 1.0) * c - (nu + 2.0) * c_prev) / nu;
      c_prev = c;
      c = next;
    }
    coef[nu] = (nu + 2.0) / (2.0 * std::pow(std::numbers::pi, 3)) * a[nu] * c;
  }

  std::vector<Complex> damped(options.epsilons.size());
  std::vector<Complex> terms(coef.size());
  for (std::size_t k = 0; k < options.epsilons.size(); ++k) {
    for (std::size_t nu = 0; nu < coef.size(); ++nu) {
      terms[nu] = coef[nu] * std::exp(-options.epsilons[k] * static_cast<double>(nu));
    }
    damped[k] = pairwise_sum(terms);
  }
  return extrapolate_to_zero(options.epsilons, damped);
}

Complex verify_expansion_coefficient(double rho, int l, const RegularizedOptions& options) {
  if (l < 0) throw DomainError("verify_expansion_coefficient: negative l");
  if (rho == 0.0) throw DomainError("verify_expansion_coefficient: rho = 0");
  const Complex eta = intertwiner_eta(rho);
  // K C_l (1-x^2)^{3/2} = g(x) (1-x)^{-1-i rho}
  const auto g = [&](double x) -> Complex {
    return eta * gegenbauer2(l, x) * std::pow(1.0 + x, 1.5);
  };
  const Complex integral = integrate_endpoint_regularized(g, rho, options);
  // 16 pi^2 l! / Gamma(l+4)
  const double scale = 16.0 * std::numbers::pi * std::numbers::pi / ((l + 1.0) * (l + 2.0) * (l + 3.0));
  return scale * integral;
}

Complex verify_expansion_coefficient(const ScatteringState& state, int l,
                                     const RegularizedOptions& options) {
  return verify_expansion_coefficient(state.rho, l, options);
}

Complex s_kernel(const ScatteringState& state, AngularDirection dir, AngularDirection dir_prime,
                 int l_max) {
  const kernels::PartialWaveInput in{state.channel, dir, dir_prime, l_max};
  const std::vector<double> p = kernels::parallel::partial_wave_coefficients(in);
  std::vector<Complex> terms(p.size());
  for (std::size_t l = 0; l < p.size(); ++l) {
    terms[l] = partial_wave_element(state.rho, static_cast<int>(l)) * p[l];
  }
  return pairwise_sum(terms);
}

std::string to_string(AmplitudeMethod method) {
  return method == AmplitudeMethod::partial_wave ? "partial_wave" : "integral_rep";
}

AmplitudeMethod parse_amplitude_method(const std::string& name) {
  if (name == "partial_wave") return AmplitudeMethod::partial_wave;
  if (name == "integral_rep") return AmplitudeMethod::integral_rep;
  throw DomainError("unknown amplitude method '" + name + "'");
}

AmplitudeResult amplitude_partial_wave(const ScatteringState& state, const AmplitudeRequest& req) {
  require_separated(req);
  require_epsilons(req.abel_epsilons);
  if (req.l_max < 1) throw DomainError("amplitude_partial_wave: l_max must be positive");

  const kernels::PartialWaveInput in{state.channel, req.in_dir, req.out_dir, req.l_max};
  const std::vector<double> p = kernels::parallel::partial_wave_coefficients(in);
  std::vector<Complex> weighted(p.size());
  for (std::size_t l = 0; l < p.size(); ++l) {
    weighted[l] = partial_wave_element(state.rho, static_cast<int>(l)) * p[l];
  }

  AmplitudeResult out;
  out.method = AmplitudeMethod::partial_wave;
  out.l_max = req.l_max;
  out.epsilons = req.abel_epsilons;
  const Complex pre = prefactor(state);
  std::vector<Complex> terms(weighted.size());
  for (double eps : req.abel_epsilons) {
    for (std::size_t l = 0; l < weighted.size(); ++l) {
      terms[l] = weighted[l] * std::exp(-eps * static_cast<double>(l));
    }
    out.damped.push_back(pre * pairwise_sum(terms));
  }
  out.value = extrapolate_to_zero(out.epsilons, out.damped);
  return out;
}

AmplitudeResult amplitude_integral(const ScatteringState& state, const AmplitudeRequest& req) {
  require_separated(req);
  if (req.min_points < 4 || req.max_points < req.min_points) {
    throw DomainError("amplitude_integral: need 4 <= min_points <= max_points");
  }
  const ChannelSpec& c = state.channel;
  const Complex pre = prefactor(state) * intertwiner_eta(state.rho) *
                      reduced_lambda(req.in_dir) * reduced_lambda(req.out_dir);

  AmplitudeResult out;
  out.method = AmplitudeMethod::integral_rep;
  out.converged = false;
  kernels::AlphaIntegralInput in{state.rho, {c.s1, c.s2, c.s3}, req.in_dir, req.out_dir,
                                 req.min_points};
  for (int n = req.min_points; n <= req.max_points; n *= 2) {
    in.points = n;
    const Complex v = pre * kernels::parallel::alpha_integral(in);
    out.points.push_back(n);
    out.refinements.push_back(v);
    out.value = v;
    const std::size_t k = out.refinements.size();
    if (k >= 2 && std::abs(v - out.refinements[k - 2]) < req.rel_tol * std::abs(v)) {
      out.converged = true;
      break;
    }
  }
  return out;
}

AmplitudeResult amplitude(const ScatteringState& state, const AmplitudeRequest& req) {
  return req.method == AmplitudeMethod::partial_wave ? amplitude_partial_wave(state, req)
                                                     : amplitude_integral(state, req);
}

}  // namespace nckc
