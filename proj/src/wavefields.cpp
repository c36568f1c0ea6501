#include "nckc/wavefields.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "nckc/errors.hpp"
#include "nckc/quadrature.hpp"
#include "nckc/specfun.hpp"
#include "nckc/summation.hpp"

namespace nckc {
namespace {

void require_radial(const ChannelSpec& channel, int j, int l) {
  validate(channel);
  if (!is_valid_radial(channel, j, l)) {
    throw ConstraintError("(j, l) = (" + std::to_string(j) + ", " + std::to_string(l) +
                          ") is not a state of the channel");
  }
}

double log_radial_norm(const ChannelSpec& channel, int j, int l) {
  const double nu = j + 2.5;
  return 3.0 * std::log(2.0 * channel.gamma / nu) +
         0.5 * (log_gamma(j - l + 1.0) - std::log(2.0 * nu) - log_gamma(j + l + 5.0));
}

}  // namespace

AngularDirection make_direction(double theta, double phi) {
  if (!(theta >= 0.0 && theta <= kHalfPi) || !(phi >= 0.0 && phi <= kHalfPi)) {
    throw DomainError("direction outside the octant [0, pi/2]^2");
  }
  return {theta, phi};
}

bool is_valid_radial(const ChannelSpec& channel, int j, int l) {
  const int excess = l - channel.threshold();
  return l <= j && excess >= 0 && excess % 2 == 0;
}

double radial_norm_constant(const ChannelSpec& channel, int j, int l) {
  require_radial(channel, j, l);
  return std::exp(log_radial_norm(channel, j, l));
}

double radial_wavefunction(const ChannelSpec& channel, int j, int l, double r) {
  require_radial(channel, j, l);
  if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("radial_wavefunction: r must be positive");
  const double nu = j + 2.5;
  const double u = 2.0 * channel.gamma * r / nu;
  const double poly = laguerre(j - l, 2.0 * l + 4.0, u);
  const double log_envelope = log_radial_norm(channel, j, l) + 1.5 * std::log(r) +
                              l * std::log(u) - 0.5 * u;
  return std::exp(log_envelope) * poly;
}

double log_angular_norm_constant(const ChannelSpec& channel, int l, int m) {
  validate(channel);
  if (!is_valid_angular(channel, l, m)) {
    throw ConstraintError("(l, m) = (" + std::to_string(l) + ", " + std::to_string(m) +
                          ") is not an angular state of the channel");
  }
  const double s1 = channel.s1;
  const double s2 = channel.s2;
  const double s3 = channel.s3;
  auto lg = [](double twice) { return log_gamma(0.5 * twice); };
  const double sum = lg(l + m + s3 + 4) + lg(l - m - s3 + 2) + lg(m + s1 + s2 + 2) -
                     lg(l + m - s3 + 4) - lg(l - m + s3 + 2) - lg(m + s1 - s2 + 2) +
                     lg(m - s1 - s2 + 2) - lg(m - s1 + s2 + 2) + std::log(2.0 * l + 4.0) +
                     std::log(2.0 * m + 2.0);
  return 0.5 * sum;
}

double angular_norm_constant(const ChannelSpec& channel, int l, int m) {
  return std::exp(log_angular_norm_constant(channel, l, m));
}

double angular_wavefunction(const ChannelSpec& channel, int l, int m, AngularDirection dir) {
  const double log_chi = log_angular_norm_constant(channel, l, m);
  make_direction(dir.theta, dir.phi);
  if (!dir.interior()) return 0.0;

  const int k1 = (l - m - channel.s3) / 2;
  const int k2 = (m - channel.s1 - channel.s2) / 2;
  const ScaledValue p_theta = jacobi_scaled(k1, m + 1.0, channel.s3, std::cos(2.0 * dir.theta));
  const ScaledValue p_phi = jacobi_scaled(k2, channel.s1, channel.s2, std::cos(2.0 * dir.phi));
  const int sign = p_theta.sign() * p_phi.sign();
  if (sign == 0) return 0.0;

  const double log_value = log_chi + (m + 1.0) * std::log(std::sin(dir.theta)) +
                           (channel.s3 + 0.5) * std::log(std::cos(dir.theta)) +
                           (channel.s1 + 0.5) * std::log(std::sin(dir.phi)) +
                           (channel.s2 + 0.5) * std::log(std::cos(dir.phi)) + p_theta.log_abs() +
                           p_phi.log_abs();
  return sign * std::exp(log_value);
}

double full_wavefunction(const ChannelSpec& channel, const QuantumNumbers& qn, double r,
                         AngularDirection dir) {
  const QuantumNumbers checked = make_quantum_numbers(channel, qn.j, qn.l, qn.m);
  return radial_wavefunction(channel, checked.j, checked.l, r) *
         angular_wavefunction(channel, checked.l, checked.m, dir);
}

double reduced_lambda(AngularDirection dir) {
  make_direction(dir.theta, dir.phi);
  return std::sin(dir.theta) *
         std::sqrt(std::cos(dir.theta) * std::sin(dir.phi) * std::cos(dir.phi));
}

double radial_normalization_integral(const ChannelSpec& channel, int j, int l, int order) {
  require_radial(channel, j, l);
  const QuadratureRule rule = build_rule(QuadratureFamily::halfline_laguerre, order);
  // r = nu u / (2 gamma); the rule carries e^{-u}, which is divided out.
  const double scale = (j + 2.5) / (2.0 * channel.gamma);
  std::vector<double> terms(rule.order);
  for (int i = 0; i < rule.order; ++i) {
    const double r = scale * rule.nodes[i];
    const double radial = radial_wavefunction(channel, j, l, r);
    terms[i] = std::exp(rule.log_weights[i] + rule.nodes[i]) * scale * radial * radial * r * r;
  }
  return pairwise_sum(terms);
}

}  // namespace nckc
