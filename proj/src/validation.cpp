#include "nckc/validation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>

#include "nckc/errors.hpp"
#include "nckc/kernels.hpp"
#include "nckc/operators.hpp"
#include "nckc/scattering.hpp"
#include "nckc/spectrum.hpp"
#include "nckc/wavefields.hpp"

namespace nckc {
namespace {

std::string channel_name(const ChannelSpec& c) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%d,%d,%d;%g)", c.s1, c.s2, c.s3, c.gamma);
  return buf;
}

struct Recorder {
  std::string suite;
  const ToleranceOverrides& tol;
  std::vector<CheckRecord> records;

  void add(const std::string& check, double measured, double default_tol, std::string detail) {
    double t = default_tol;
    if (auto it = tol.find(suite); it != tol.end()) t = it->second;
    if (auto it = tol.find(suite + "." + check); it != tol.end()) t = it->second;
    records.push_back({suite, check, measured, t, measured < t, std::move(detail)});
  }
};

std::vector<ChannelSpec> small_channels(int max_sum) {
  std::vector<ChannelSpec> out;
  for (int a = 0; a <= max_sum; ++a)
    for (int b = 0; a + b <= max_sum; ++b)
      for (int c = 0; a + b + c <= max_sum; ++c) out.push_back({a, b, c, 1.0});
  return out;
}

void spectrum_suite(Recorder& r) {
  double energy_err = 0.0;
  long degeneracy_miss = 0;
  int cases = 0;
  for (ChannelSpec c : small_channels(6)) {
    for (double gamma : {0.5, 1.0, 3.0}) {
      c.gamma = gamma;
      for (int j = c.threshold(); j <= c.threshold() + 20; ++j) {
        const double nu = j + 2.5;
        const double expected = -gamma * gamma / (2.0 * nu * nu);
        energy_err = std::max(energy_err, std::abs(bound_energy(c, j) / expected - 1.0));
        long count = 0;
        const int q = j - c.threshold();
        for (int k1 = 0; 2 * k1 <= q; ++k1)
          for (int k2 = 0; 2 * k1 + 2 * k2 <= q; ++k2) ++count;
        const auto states = enumerate_states(c, j);
        degeneracy_miss += std::abs(degeneracy(c, j) - count) +
                           std::abs(static_cast<long>(states.size()) - count);
        ++cases;
      }
    }
  }
  const std::string d = std::to_string(cases) + " levels, sum(s) <= 6, j <= sum(s)+20";
  r.add("energy", energy_err, 1e-12, d);
  r.add("degeneracy", static_cast<double>(degeneracy_miss), 0.5, d);
}

void radial_suite(Recorder& r) {
  double worst = 0.0;
  int cases = 0;
  for (ChannelSpec c : small_channels(4)) {
    for (int j = c.threshold(); j <= 10; ++j) {
      for (int l = c.threshold(); l <= j; l += 2) {
        worst = std::max(worst, std::abs(radial_normalization_integral(c, j, l, 160) - 1.0));
        ++cases;
      }
    }
  }
  r.add("normalization", worst, 1e-8,
        std::to_string(cases) + " (j,l) pairs, j <= 10, sum(s) <= 4, Gauss-Laguerre order 160");
}

void gram_suite(Recorder& r) {
  const std::vector<ChannelSpec> channels{{0, 0, 0, 1.0}, {1, 1, 1, 1.0}, {2, 0, 1, 1.0},
                                          {1, 2, 0, 1.0}};
  for (const ChannelSpec& c : channels) {
    const kernels::GramInput in{c, angular_labels(c, 8), 64};
    const std::vector<double> g = kernels::parallel::angular_gram(in);
    const std::size_t n = in.labels.size();
    double worst = 0.0;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        worst = std::max(worst, std::abs(g[a * n + b] - (a == b ? 1.0 : 0.0)));
    r.add("orthonormality " + channel_name(c), worst, 1e-8,
          std::to_string(n) + " labels with l <= 8, measure sin(t) dt dp");
  }
}

void eigen_suite(Recorder& r) {
  const std::vector<ChannelSpec> channels{{0, 0, 0, 1.0}, {1, 1, 1, 1.0}, {1, 0, 2, 2.0}};
  double h_worst = 0.0;
  double i1_worst = 0.0;
  double i2_worst = 0.0;
  int states = 0;
  for (const ChannelSpec& c : channels) {
    int taken = 0;
    for (int j = c.threshold(); taken < 5; ++j) {
      for (const QuantumNumbers& q : enumerate_states(c, j)) {
        if (taken == 5) break;
        for (const ProbePoint& p : select_probes(c, q, 6)) {
          h_worst = std::max(h_worst, hamiltonian_residual(c, q, p));
        }
        for (AngularDirection d : select_angular_probes(c, q.l, q.m, 6)) {
          i1_worst = std::max(i1_worst, i1_residual(c, q.l, q.m, d, i1_eigenvalue(q.l)));
          i2_worst = std::max(i2_worst, i2_residual(c, q.l, q.m, d, i2_eigenvalue(q.m)));
        }
        ++taken;
        ++states;
      }
    }
  }
  const std::string d = std::to_string(states) + " states in 3 channels, 6 probes each";
  r.add("hamiltonian", h_worst, 1e-6, d + "; |H psi/psi - E|/|E|");
  r.add("I1", i1_worst, 1e-6, d + "; against (l+2)^2 - 1/4");
  r.add("I2", i2_worst, 1e-6, d + "; against (m+1)^2");
}

void smatrix_suite(Recorder& r) {
  double unit = 0.0;
  double chain = 0.0;
  for (double rho : {0.1, 0.5, 1.0, 2.0, 10.0}) {
    const std::vector<Complex> a = partial_wave_chain(rho, 64);
    for (int l = 0; l <= 64; ++l) {
      const Complex direct = partial_wave_element(rho, l);
      unit = std::max(unit, std::abs(std::abs(direct) - 1.0));
      chain = std::max(chain, std::abs(a[l] - direct));
    }
  }
  const std::string d = "l <= 64, rho in {0.1, 0.5, 1, 2, 10}";
  r.add("unitarity", unit, 1e-13, d);
  r.add("recurrence", chain, 1e-11, d);
}

void expansion_suite(Recorder& r) {
  double worst = 0.0;
  for (double rho : {0.5, 1.0, 2.0}) {
    for (int l = 0; l <= 4; ++l) {
      worst = std::max(worst, std::abs(verify_expansion_coefficient(rho, l) -
                                       partial_wave_element(rho, l)));
    }
  }
  r.add("coefficient", worst, 1e-6, "l <= 4, rho in {0.5, 1, 2}, subtraction-regularized");
  double series = 0.0;
  for (double rho : {0.5, 1.0, 2.0}) {
    const Complex k = intertwiner_kernel(rho, 0.0);
    series = std::max(series,
                      std::abs(intertwiner_kernel_series(rho, 0.0, default_series_abel()) - k) /
                          std::abs(k));
  }
  r.add("kernel-series", series, 1e-6, "x = 0, Abel-summed Gegenbauer series");
}

void amplitude_suite(Recorder& r) {
  const ScatteringState s = make_scattering_state({1, 1, 1, 1.0}, 0.5);
  const std::vector<std::pair<AngularDirection, AngularDirection>> pairs{
      {{0.6, 0.7}, {1.1, 0.4}}, {{0.4, 1.1}, {1.2, 0.5}}};
  for (const auto& [d, dp] : pairs) {
    AmplitudeRequest req;
    req.in_dir = d;
    req.out_dir = dp;
    req.min_points = 128;
    const Complex pw = amplitude_partial_wave(s, req).value;
    const Complex in = amplitude_integral(s, req).value;
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%g,%g)->(%g,%g)", d.theta, d.phi, dp.theta, dp.phi);
    r.add(std::string("cross-method ") + buf, std::abs(pw - in) / std::abs(in), 1e-2,
          "gamma=1, E=0.5, s=(1,1,1)");
  }
}

const std::map<std::string, std::function<void(Recorder&)>>& registry() {
  static const std::map<std::string, std::function<void(Recorder&)>> r{
      {"spectrum", spectrum_suite}, {"radial", radial_suite},   {"gram", gram_suite},
      {"eigen", eigen_suite},       {"smatrix", smatrix_suite}, {"expansion", expansion_suite},
      {"amplitude", amplitude_suite}};
  return r;
}

}  // namespace

const std::vector<std::string>& validation_suites() {
  static const std::vector<std::string> names{"spectrum", "radial",    "gram",     "eigen",
                                              "smatrix",  "expansion", "amplitude"};
  return names;
}

std::vector<CheckRecord> run_suite(const std::string& suite, const ToleranceOverrides& tol) {
  const auto it = registry().find(suite);
  if (it == registry().end()) throw DomainError("unknown validation suite '" + suite + "'");
  Recorder r{suite, tol, {}};
  it->second(r);
  return r.records;
}

}  // namespace nckc
