#pragma once

#include "nckc/spectrum.hpp"

namespace nckc {

inline constexpr double kHalfPi = 1.57079632679489661923;

// Point (theta, phi) of the closed octant [0, pi/2]^2, with
//   x = r sin(theta) sin(phi),  y = r sin(theta) cos(phi),  z = r cos(theta).
// Angular functions vanish on the boundary.
struct AngularDirection {
  double theta = 0.0;
  double phi = 0.0;

  [[nodiscard]] bool interior() const {
    return theta > 0.0 && theta < kHalfPi && phi > 0.0 && phi < kHalfPi;
  }
  friend bool operator==(const AngularDirection&, const AngularDirection&) = default;
};

/// Throws DomainError if either angle is outside [0, pi/2] or not finite.
AngularDirection make_direction(double theta, double phi);

/// True when l can occur in the channel at level j.
bool is_valid_radial(const ChannelSpec& channel, int j, int l);

/// c = (2 gamma / nu)^3 [Gamma(j-l+1) / (2 nu Gamma(j+l+5))]^{1/2}, nu = j + 5/2.
/// This is the normalization of the six-dimensional Coulomb radial function.
double radial_norm_constant(const ChannelSpec& channel, int j, int l);

/// R_jl(r) = r^{3/2} c u^l e^{-u/2} L_n^{2l+4}(u),  u = 2 gamma r / nu,  n = j - l.
/// Normalized as  int_0^inf R^2 r^2 dr = 1.
double radial_wavefunction(const ChannelSpec& channel, int j, int l, double r);

/// chi: the normalization of the angular function, from its six gamma
/// factors and (2l+4)(2m+2). Computed in log space.
double angular_norm_constant(const ChannelSpec& channel, int l, int m);
double log_angular_norm_constant(const ChannelSpec& channel, int l, int m);

/// Y_lM(theta, phi) = chi sin^{m+1}t cos^{s3+1/2}t sin^{s1+1/2}p cos^{s2+1/2}p
///                    P_{k1}^{(m+1,s3)}(cos 2t) P_{k2}^{(s1,s2)}(cos 2p).
/// Orthonormal under sin(theta) dtheta dphi on the octant.
double angular_wavefunction(const ChannelSpec& channel, int l, int m, AngularDirection dir);

/// psi = R_jl(r) Y_lM(theta, phi).
double full_wavefunction(const ChannelSpec& channel, const QuantumNumbers& qn, double r,
                         AngularDirection dir);

/// sin(theta) [cos(theta) sin(phi) cos(phi)]^{1/2}: the angular part of
/// lambda(x) / r^{3/2}, linking Y_lM to the five-sphere harmonics.
double reduced_lambda(AngularDirection dir);

/// int_0^inf R_jl(r)^2 r^2 dr by Gauss-Laguerre quadrature in u.
double radial_normalization_integral(const ChannelSpec& channel, int j, int l, int order = 160);

}  // namespace nckc
