#pragma once

// Data-parallel inner loops. Each kernel exists as a serial reference and an
// OpenMP version; both partition the work identically and reduce with
// pairwise summation in a fixed order, so their results agree bit for bit.

#include <array>
#include <complex>
#include <utility>
#include <vector>

#include "nckc/quadrature.hpp"
#include "nckc/spectrum.hpp"
#include "nckc/wavefields.hpp"

namespace nckc::kernels {

using Complex = std::complex<double>;

// Periodic trapezoid sum over [0, 2 pi)^3 with n points per axis of
//   (1 - a sin t sin t' - cos t cos t' cos a3)^{-5/2 - i rho} exp(-i s . alpha),
//   a = sin p sin p' cos a1 + cos p cos p' cos a2.
// rho and s may carry either sign.
struct AlphaIntegralInput {
  double rho = 0.0;
  std::array<int, 3> s{};
  AngularDirection in_dir;
  AngularDirection out_dir;
  int points = 64;
};

// P_l = sum_m Y_lm(in) Y_lm(out) for l = 0..l_max (zero where l admits no m).
struct PartialWaveInput {
  ChannelSpec channel;
  AngularDirection in_dir;
  AngularDirection out_dir;
  int l_max = 0;
};

// G[a][b] = int int Y_a Y_b sin t dt dp over the octant, row-major over
// `labels`, by tensor Gauss-Legendre quadrature.
struct GramInput {
  ChannelSpec channel;
  std::vector<std::pair<int, int>> labels;
  int order = 64;
};

namespace serial {
Complex alpha_integral(const AlphaIntegralInput& in);
std::vector<double> partial_wave_coefficients(const PartialWaveInput& in);
std::vector<double> angular_gram(const GramInput& in);
}  // namespace serial

namespace parallel {
Complex alpha_integral(const AlphaIntegralInput& in);
std::vector<double> partial_wave_coefficients(const PartialWaveInput& in);
std::vector<double> angular_gram(const GramInput& in);
}  // namespace parallel

}  // namespace nckc::kernels
