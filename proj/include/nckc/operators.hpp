#pragma once

#include <functional>
#include <vector>

#include "nckc/spectrum.hpp"
#include "nckc/wavefields.hpp"

namespace nckc {

// Central-difference stencil. The radial step is relative: h_r = step_r * r.
// Each Richardson level halves all three steps and removes one more power of h^2.
struct StencilConfig {
  double step_r = 1e-2;
  double step_theta = 1e-2;
  double step_phi = 1e-2;
  int richardson_levels = 3;
};

using FieldEvaluator = std::function<double(double r, AngularDirection dir)>;
using AngularEvaluator = std::function<double(AngularDirection dir)>;

/// (H psi)(r, theta, phi) for
///   H = -1/2 [d_rr + (2/r) d_r + Lambda / r^2] - gamma / r
///       + (s1^2-1/4)/(2 x^2) + (s2^2-1/4)/(2 y^2) + (s3^2-1/4)/(2 z^2),
/// Lambda the angular part of the three-dimensional Laplacian.
/// Throws GeometryError when the stencil leaves the open domain (margin 3 steps).
double apply_hamiltonian(const ChannelSpec& channel, const FieldEvaluator& psi, double r,
                         AngularDirection dir, const StencilConfig& cfg = {});

/// I1 = L^2 + (s1^2-1/4)/(sin^2 t sin^2 p) + (s2^2-1/4)/(sin^2 t cos^2 p) + (s3^2-1/4)/cos^2 t.
double apply_I1(const ChannelSpec& channel, const AngularEvaluator& y, AngularDirection dir,
                const StencilConfig& cfg = {});

/// I2 = -d_pp + (s1^2-1/4)/sin^2 p + (s2^2-1/4)/cos^2 p.
double apply_I2(const ChannelSpec& channel, const AngularEvaluator& y, AngularDirection dir,
                const StencilConfig& cfg = {});

// Eigenvalues of the integrals of motion on Y_lM, as realized above. They
// differ from the SO(6) and SO(4) Casimir values l(l+4) and m(m+2) by the
// constants 15/4 and 1 that the lambda conjugation adds to the sphere
// Laplacians; those constants cancel against the radial r^{3/2} factor in H.
inline double i1_eigenvalue(int l) { return (l + 2.0) * (l + 2.0) - 0.25; }
inline double i2_eigenvalue(int m) { return (m + 1.0) * (m + 1.0); }
inline double so6_casimir_eigenvalue(int l) { return l * (l + 4.0); }
inline double so4_casimir_eigenvalue(int m) { return m * (m + 2.0); }

struct ProbePoint {
  double r = 1.0;
  AngularDirection dir;
};

/// Deterministic probe points for an eigen-residual check: barrier
/// denominators sin^2 t sin^2 p, sin^2 t cos^2 p, cos^2 t all above 0.05 and
/// |psi| above 0.1 max|psi| on the probe grid.
std::vector<ProbePoint> select_probes(const ChannelSpec& channel, const QuantumNumbers& qn,
                                      int count);

/// Same selection restricted to the angles, for the angular operators.
std::vector<AngularDirection> select_angular_probes(const ChannelSpec& channel, int l, int m,
                                                    int count);

/// |H psi / psi - E| / |E| at one point.
double hamiltonian_residual(const ChannelSpec& channel, const QuantumNumbers& qn,
                            const ProbePoint& probe, const StencilConfig& cfg = {});

/// |I psi / psi - expected| / max(1, |expected|) at one point.
double i1_residual(const ChannelSpec& channel, int l, int m, AngularDirection dir,
                   double expected, const StencilConfig& cfg = {});
double i2_residual(const ChannelSpec& channel, int l, int m, AngularDirection dir,
                   double expected, const StencilConfig& cfg = {});

}  // namespace nckc
