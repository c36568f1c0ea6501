#include "nckc/operators.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "nckc/errors.hpp"

namespace nckc {
namespace {

constexpr double kMinDenominator = 0.05;

double barrier_theta_phi(const ChannelSpec& c, double theta, double phi) {
  const double st2 = std::sin(theta) * std::sin(theta);
  const double sp2 = std::sin(phi) * std::sin(phi);
  const double cp2 = std::cos(phi) * std::cos(phi);
  const double ct2 = std::cos(theta) * std::cos(theta);
  return (c.s1 * c.s1 - 0.25) / (st2 * sp2) + (c.s2 * c.s2 - 0.25) / (st2 * cp2) +
         (c.s3 * c.s3 - 0.25) / ct2;
}

double barrier_phi(const ChannelSpec& c, double phi) {
  const double sp2 = std::sin(phi) * std::sin(phi);
  const double cp2 = std::cos(phi) * std::cos(phi);
  return (c.s1 * c.s1 - 0.25) / sp2 + (c.s2 * c.s2 - 0.25) / cp2;
}

bool away_from_barriers(double theta, double phi) {
  const double st2 = std::sin(theta) * std::sin(theta);
  return st2 * std::sin(phi) * std::sin(phi) > kMinDenominator &&
         st2 * std::cos(phi) * std::cos(phi) > kMinDenominator &&
         std::cos(theta) * std::cos(theta) > kMinDenominator;
}

void require_levels(const StencilConfig& cfg) {
  if (cfg.richardson_levels < 1) throw DomainError("stencil: richardson_levels must be >= 1");
  if (!(cfg.step_r > 0.0) || !(cfg.step_theta > 0.0) || !(cfg.step_phi > 0.0)) {
    throw DomainError("stencil: steps must be positive");
  }
}

void require_angles(AngularDirection dir, double h_theta, double h_phi) {
  if (dir.theta - 3.0 * h_theta <= 0.0 || dir.theta + 3.0 * h_theta >= kHalfPi ||
      dir.phi - 3.0 * h_phi <= 0.0 || dir.phi + 3.0 * h_phi >= kHalfPi) {
    throw GeometryError("stencil leaves the open octant");
  }
}

// Richardson extrapolation over h, h/2, h/4, ... for an O(h^2) stencil.
template <typename Eval>
double richardson(int levels, Eval&& eval) {
  std::vector<double> row(levels);
  for (int k = 0; k < levels; ++k) {
    double fine = eval(std::ldexp(1.0, -k));
    for (int i = 1; i <= k; ++i) {
      const double factor = std::ldexp(1.0, 2 * i) - 1.0;
      const double improved = fine + (fine - row[i - 1]) / factor;
      row[i - 1] = fine;
      fine = improved;
    }
    row[k] = fine;
  }
  return row[levels - 1];
}

// -(Y_tt + cot t Y_t + Y_pp / sin^2 t) by central differences.
double angular_laplacian_neg(const AngularEvaluator& y, AngularDirection dir, double ht,
                             double hp, double center) {
  const double t = dir.theta;
  const double p = dir.phi;
  const double yt_plus = y({t + ht, p});
  const double yt_minus = y({t - ht, p});
  const double yp_plus = y({t, p + hp});
  const double yp_minus = y({t, p - hp});
  const double y_tt = (yt_plus - 2.0 * center + yt_minus) / (ht * ht);
  const double y_t = (yt_plus - yt_minus) / (2.0 * ht);
  const double y_pp = (yp_plus - 2.0 * center + yp_minus) / (hp * hp);
  const double st = std::sin(t);
  return -(y_tt + std::cos(t) / st * y_t + y_pp / (st * st));
}

std::vector<double> interior_grid(int n, double margin) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = margin + (kHalfPi - 2.0 * margin) * (i + 0.5) / n;
  return g;
}

template <typename T>
std::vector<T> spread(const std::vector<T>& candidates, int count) {
  if (static_cast<int>(candidates.size()) <= count) return candidates;
  std::vector<T> out;
  out.reserve(count);
  for (int i = 0; i < count; ++i) {
    out.push_back(candidates[static_cast<std::size_t>(i) * candidates.size() / count]);
  }
  return out;
}

}  // namespace

double apply_hamiltonian(const ChannelSpec& channel, const FieldEvaluator& psi, double r,
                         AngularDirection dir, const StencilConfig& cfg) {
  validate(channel);
  require_levels(cfg);
  const double hr0 = cfg.step_r * r;
  if (!(r > 0.0) || r - 3.0 * hr0 <= 0.0) throw GeometryError("stencil leaves r > 0");
  require_angles(dir, cfg.step_theta, cfg.step_phi);

  const double center = psi(r, dir);
  const double potential = -channel.gamma / r + barrier_theta_phi(channel, dir.theta, dir.phi) /
                                                    (2.0 * r * r);
  auto eval = [&](double scale) {
    const double hr = hr0 * scale;
    const double up = psi(r + hr, dir);
    const double down = psi(r - hr, dir);
    const double d_rr = (up - 2.0 * center + down) / (hr * hr);
    const double d_r = (up - down) / (2.0 * hr);
    const AngularEvaluator angular = [&](AngularDirection d) { return psi(r, d); };
    const double neg_lambda = angular_laplacian_neg(angular, dir, cfg.step_theta * scale,
                                                    cfg.step_phi * scale, center);
    return -0.5 * (d_rr + 2.0 / r * d_r - neg_lambda / (r * r)) + potential * center;
  };
  return richardson(cfg.richardson_levels, eval);
}

double apply_I1(const ChannelSpec& channel, const AngularEvaluator& y, AngularDirection dir,
                const StencilConfig& cfg) {
  validate(channel);
  require_levels(cfg);
  require_angles(dir, cfg.step_theta, cfg.step_phi);
  const double center = y(dir);
  const double barrier = barrier_theta_phi(channel, dir.theta, dir.phi);
  auto eval = [&](double scale) {
    return angular_laplacian_neg(y, dir, cfg.step_theta * scale, cfg.step_phi * scale, center) +
           barrier * center;
  };
  return richardson(cfg.richardson_levels, eval);
}

double apply_I2(const ChannelSpec& channel, const AngularEvaluator& y, AngularDirection dir,
                const StencilConfig& cfg) {
  validate(channel);
  require_levels(cfg);
  require_angles(dir, cfg.step_theta, cfg.step_phi);
  const double center = y(dir);
  const double barrier = barrier_phi(channel, dir.phi);
  auto eval = [&](double scale) {
    const double hp = cfg.step_phi * scale;
    const double y_pp = (y({dir.theta, dir.phi + hp}) - 2.0 * center +
                         y({dir.theta, dir.phi - hp})) /
                        (hp * hp);
    return -y_pp + barrier * center;
  };
  return richardson(cfg.richardson_levels, eval);
}

std::vector<ProbePoint> select_probes(const ChannelSpec& channel, const QuantumNumbers& qn,
                                      int count) {
  const QuantumNumbers q = make_quantum_numbers(channel, qn.j, qn.l, qn.m);
  const double nu = q.j + 2.5;
  const double u_hi = 4.0 * q.j + 2.0 * q.l + 12.0;
  constexpr int kRadial = 48;
  constexpr int kAngular = 16;
  const std::vector<double> angles = interior_grid(kAngular, 0.02);

  std::vector<double> radial(kRadial);
  std::vector<double> rs(kRadial);
  for (int i = 0; i < kRadial; ++i) {
    const double u = 0.2 + (u_hi - 0.2) * i / (kRadial - 1.0);
    rs[i] = nu * u / (2.0 * channel.gamma);
    radial[i] = radial_wavefunction(channel, q.j, q.l, rs[i]);
  }
  std::vector<AngularDirection> dirs;
  std::vector<double> angular;
  for (double t : angles) {
    for (double p : angles) {
      if (!away_from_barriers(t, p)) continue;
      dirs.push_back({t, p});
      angular.push_back(angular_wavefunction(channel, q.l, q.m, {t, p}));
    }
  }
  double peak = 0.0;
  for (double a : radial)
    for (double b : angular) peak = std::max(peak, std::abs(a * b));

  std::vector<ProbePoint> candidates;
  for (int i = 0; i < kRadial; ++i) {
    for (std::size_t k = 0; k < dirs.size(); ++k) {
      if (std::abs(radial[i] * angular[k]) > 0.1 * peak) candidates.push_back({rs[i], dirs[k]});
    }
  }
  return spread(candidates, count);
}

std::vector<AngularDirection> select_angular_probes(const ChannelSpec& channel, int l, int m,
                                                    int count) {
  const std::vector<double> angles = interior_grid(24, 0.02);
  std::vector<AngularDirection> dirs;
  std::vector<double> values;
  double peak = 0.0;
  for (double t : angles) {
    for (double p : angles) {
      if (!away_from_barriers(t, p)) continue;
      const double v = angular_wavefunction(channel, l, m, {t, p});
      dirs.push_back({t, p});
      values.push_back(v);
      peak = std::max(peak, std::abs(v));
    }
  }
  std::vector<AngularDirection> candidates;
  for (std::size_t k = 0; k < dirs.size(); ++k) {
    if (std::abs(values[k]) > 0.1 * peak) candidates.push_back(dirs[k]);
  }
  return spread(candidates, count);
}

double hamiltonian_residual(const ChannelSpec& channel, const QuantumNumbers& qn,
                            const ProbePoint& probe, const StencilConfig& cfg) {
  const FieldEvaluator psi = [&](double r, AngularDirection d) {
    return full_wavefunction(channel, qn, r, d);
  };
  const double energy = bound_energy(channel, qn.j);
  const double h_psi = apply_hamiltonian(channel, psi, probe.r, probe.dir, cfg);
  return std::abs(h_psi / psi(probe.r, probe.dir) - energy) / std::abs(energy);
}

double i1_residual(const ChannelSpec& channel, int l, int m, AngularDirection dir,
                   double expected, const StencilConfig& cfg) {
  const AngularEvaluator y = [&](AngularDirection d) {
    return angular_wavefunction(channel, l, m, d);
  };
  const double value = apply_I1(channel, y, dir, cfg) / y(dir);
  return std::abs(value - expected) / std::max(1.0, std::abs(expected));
}

double i2_residual(const ChannelSpec& channel, int l, int m, AngularDirection dir,
                   double expected, const StencilConfig& cfg) {
  const AngularEvaluator y = [&](AngularDirection d) {
    return angular_wavefunction(channel, l, m, d);
  };
  const double value = apply_I2(channel, y, dir, cfg) / y(dir);
  return std::abs(value - expected) / std::max(1.0, std::abs(expected));
}

}  // namespace nckc
