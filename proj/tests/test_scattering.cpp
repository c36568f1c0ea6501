#include <doctest.h>

#include <cmath>
#include <numbers>

#include "nckc/errors.hpp"
#include "nckc/kernels.hpp"
#include "nckc/scattering.hpp"
#include "nckc/specfun.hpp"
#include "nckc/wavefields.hpp"
#include "oracles.hpp"

using nckc::AngularDirection;
using nckc::ChannelSpec;
using nckc::Complex;

TEST_CASE("make_scattering_state") {
  const auto s = nckc::make_scattering_state({0, 0, 0, 2.0}, 2.0);
  CHECK(std::abs(s.p - 2.0) < 1e-15);
  CHECK(std::abs(s.rho - 1.0) < 1e-15);
  const auto t = nckc::make_scattering_state({1, 1, 1, 1.0}, 0.5);
  CHECK(std::abs(t.p - 1.0) < 1e-15);
  CHECK(std::abs(t.rho - 1.0) < 1e-15);
  double prev = 0.0;
  for (double e = 2.0; e > 1e-6; e *= 0.5) {
    const double rho = nckc::make_scattering_state({0, 0, 0, 1.0}, e).rho;
    CHECK(rho > prev);
    prev = rho;
  }
  CHECK_THROWS_AS(nckc::make_scattering_state({0, 0, 0, 1.0}, 0.0), nckc::DomainError);
  CHECK_THROWS_AS(nckc::make_scattering_state({0, 0, 0, 1.0}, -1.0), nckc::DomainError);
}

TEST_CASE("partial_wave_element: frozen values, unitarity, recurrence") {
  // mpmath: gamma(5/2+l+i)/gamma(5/2+l-i)
  const Complex ref[] = {{0.0903856097274742689, 0.995906843813312043},
                         {-0.621380657654802801, 0.783508824642380631},
                         {-0.941516541216090258, 0.336966767822125471},
                         {-0.995618556649829022, -0.0935076983703010358}};
  for (int l = 0; l < 4; ++l) CHECK(std::abs(nckc::partial_wave_element(1.0, l) - ref[l]) < 1e-14);
  for (int l = 0; l <= 64; ++l) {
    CHECK(nckc::partial_wave_element(0.0, l) == Complex(1.0, 0.0));
    for (double rho : {0.1, 0.5, 1.0, 2.0, 10.0}) {
      const Complex a = nckc::partial_wave_element(rho, l);
      CHECK(std::abs(std::abs(a) - 1.0) < 1e-13);
      const Complex ratio = nckc::partial_wave_element(rho, l + 1) / a;
      CHECK(std::abs(ratio - Complex(l + 2.5, rho) / Complex(l + 2.5, -rho)) < 1e-12);
    }
  }
  const auto chain = nckc::partial_wave_chain(2.0, 64);
  for (int l = 0; l <= 64; ++l) CHECK(std::abs(chain[l] - nckc::partial_wave_element(2.0, l)) < 1e-11);
}

TEST_CASE("intertwiner_eta") {
  // mpmath: 2^(-5/2+i) gamma(5/2+i) / (pi^(5/2) gamma(-i))
  const Complex ref(0.0184009321945745868817, -0.0086436080994214131468);
  CHECK(std::abs(nckc::intertwiner_eta(1.0) - ref) < 1e-16);
  CHECK(std::abs(std::abs(nckc::intertwiner_eta(1.0)) - 0.0203299352336822503739) < 1e-16);
  const Complex e = nckc::intertwiner_eta(0.7);
  const Complex ee = e * std::conj(e);
  CHECK(ee.real() > 0.0);
  CHECK(ee.imag() == 0.0);
  CHECK(std::abs(nckc::intertwiner_eta(1.0001) / nckc::intertwiner_eta(1.0) - 1.0) < 1e-3);
  CHECK_THROWS_AS(nckc::intertwiner_eta(0.0), nckc::DomainError);
}

TEST_CASE("intertwiner_kernel: modulus, phase, Abel-summed Gegenbauer series") {
  const double rho = 1.3;
  const Complex eta = nckc::intertwiner_eta(rho);
  for (double x : {-0.8, 0.0, 0.6}) {
    const Complex k = nckc::intertwiner_kernel(rho, x);
    CHECK(std::abs(std::abs(k) - std::abs(eta) * std::pow(1.0 - x, -2.5)) < 1e-14);
    const Complex phase = k / eta / std::pow(1.0 - x, -2.5);
    CHECK(std::abs(phase - std::exp(Complex(0.0, -rho * std::log(1.0 - x)))) < 1e-14);
  }
  for (double r : {0.5, 1.0, 2.0}) {
    const Complex k0 = nckc::intertwiner_kernel(r, 0.0);
    const Complex series = nckc::intertwiner_kernel_series(r, 0.0, nckc::default_series_abel());
    CHECK(std::abs(series - k0) < 1e-6 * std::abs(k0));
  }
  CHECK_THROWS_AS(nckc::intertwiner_kernel(rho, 1.0), nckc::DomainError);
}

TEST_CASE("verify_expansion_coefficient reproduces A_l") {
  for (double rho : {0.5, 1.0, 2.0}) {
    for (int l = 0; l <= 4; ++l) {
      const Complex v = nckc::verify_expansion_coefficient(rho, l);
      CHECK(std::abs(v - nckc::partial_wave_element(rho, l)) < 1e-6);
      CHECK(std::abs(std::abs(v) - 1.0) < 1e-6);
    }
  }
  CHECK_THROWS_AS(nckc::verify_expansion_coefficient(0.0, 1), nckc::DomainError);
}

TEST_CASE("verify_expansion_coefficient: Abel oracle on the same integral") {
  const std::vector<double> eps{0.08, 0.04, 0.02, 0.01, 0.005, 0.0025};
  for (auto [rho, l] : {std::pair{1.0, 0}, {0.5, 2}}) {
    const Complex eta = nckc::intertwiner_eta(rho);
    const auto g = [&](double x) { return eta * oracle::gegenbauer2_sum(l, x) * std::pow(1.0 + x, 1.5); };
    const double scale = 16.0 * std::numbers::pi * std::numbers::pi / ((l + 1.0) * (l + 2.0) * (l + 3.0));
    const Complex abel = scale * oracle::abel_endpoint_integral(g, rho, eps);
    CHECK(std::abs(abel - nckc::partial_wave_element(rho, l)) < 1e-5);
  }
}

TEST_CASE("s_kernel: rho = 0 completeness, symmetry, single term") {
  const ChannelSpec c{1, 1, 1, 1.0};
  const AngularDirection d{0.6, 0.7}, dp{1.1, 0.4};
  // energy so large that rho is negligible is not rho = 0; build the state by hand
  nckc::ScatteringState s0 = nckc::make_scattering_state(c, 0.5);
  s0.rho = 0.0;
  double completeness = 0.0;
  for (const auto& [l, m] : nckc::angular_labels(c, 9)) {
    completeness += nckc::angular_wavefunction(c, l, m, d) * nckc::angular_wavefunction(c, l, m, dp);
  }
  CHECK(std::abs(nckc::s_kernel(s0, d, dp, 9) - completeness) < 1e-12 * std::max(1.0, std::abs(completeness)));

  const auto s = nckc::make_scattering_state(c, 0.5);
  const Complex k1 = nckc::s_kernel(s, d, dp, 20);
  const Complex k2 = nckc::s_kernel(s, dp, d, 20);
  CHECK(std::abs(k1 - k2) < 1e-12 * std::abs(k1));

  const Complex single = nckc::s_kernel(s, d, dp, 3);
  const Complex expect = nckc::partial_wave_element(s, 3) * nckc::angular_wavefunction(c, 3, 2, d) *
                         nckc::angular_wavefunction(c, 3, 2, dp);
  CHECK(std::abs(single - expect) < 1e-14);
}

TEST_CASE("amplitude_partial_wave: prefactor scaling, rho = 0 decay, errors") {
  const ChannelSpec c{1, 1, 1, 1.0};
  nckc::AmplitudeRequest req;
  req.in_dir = {0.6, 0.7};
  req.out_dir = {1.1, 0.4};
  req.l_max = 400;
  // same rho at two energies: gamma scales with p
  const auto s1 = nckc::make_scattering_state({1, 1, 1, 1.0}, 0.5);
  const auto s2 = nckc::make_scattering_state({1, 1, 1, 2.0}, 2.0);
  CHECK(std::abs(s1.rho - s2.rho) < 1e-15);
  const auto f1 = nckc::amplitude_partial_wave(s1, req);
  const auto f2 = nckc::amplitude_partial_wave(s2, req);
  CHECK(std::abs(f2.value * s2.p - f1.value * s1.p) < 1e-12 * std::abs(f1.value));

  nckc::ScatteringState s0 = s1;
  s0.rho = 0.0;
  nckc::AmplitudeRequest full = req;
  full.l_max = 1200;
  const auto f0 = nckc::amplitude_partial_wave(s0, full);
  for (std::size_t k = 1; k < f0.damped.size(); ++k) CHECK(std::abs(f0.damped[k]) < std::abs(f0.damped[k - 1]));
  CHECK(std::abs(f0.value) < 1e-3 * std::abs(f0.damped.front()));

  nckc::AmplitudeRequest bad = req;
  bad.out_dir = bad.in_dir;
  CHECK_THROWS_AS(nckc::amplitude_partial_wave(s1, bad), nckc::DomainError);
  CHECK_THROWS_AS(nckc::amplitude_integral(s1, bad), nckc::DomainError);
  bad = req;
  bad.abel_epsilons = {0.1, 0.2};
  CHECK_THROWS_AS(nckc::amplitude_partial_wave(s1, bad), nckc::DomainError);
}

TEST_CASE("amplitude_integral: base positivity and conjugation symmetry") {
  const auto s = nckc::make_scattering_state({1, 1, 1, 1.0}, 0.5);
  nckc::AmplitudeRequest req;
  req.in_dir = {0.6, 0.7};
  req.out_dir = {1.1, 0.4};
  req.min_points = 32;
  req.max_points = 64;
  CHECK_NOTHROW(nckc::amplitude_integral(s, req));
  // conjugated integrand: rho -> -rho, s -> -s
  nckc::kernels::AlphaIntegralInput in{s.rho, {1, 1, 1}, req.in_dir, req.out_dir, 32};
  const Complex a = nckc::kernels::serial::alpha_integral(in);
  in.rho = -in.rho;
  in.s = {-1, -1, -1};
  const Complex b = nckc::kernels::serial::alpha_integral(in);
  CHECK(std::abs(a - std::conj(b)) < 1e-14 * std::abs(a));
}

TEST_CASE("amplitude: keystone pair agrees across representations within 1%") {
  const auto s = nckc::make_scattering_state({1, 1, 1, 1.0}, 0.5);
  nckc::AmplitudeRequest req;
  req.in_dir = {0.6, 0.7};
  req.out_dir = {1.1, 0.4};
  req.min_points = 128;
  const auto pw = nckc::amplitude(s, req);
  req.method = nckc::AmplitudeMethod::integral_rep;
  const auto ir = nckc::amplitude(s, req);
  CHECK(ir.converged);
  CHECK(ir.points.front() == 128);
  CHECK(std::abs(pw.value - ir.value) < 1e-2 * std::abs(ir.value));
  CHECK(nckc::parse_amplitude_method("integral_rep") == nckc::AmplitudeMethod::integral_rep);
  CHECK_THROWS_AS(nckc::parse_amplitude_method("series"), nckc::DomainError);
}
