#include <doctest.h>

#include <cmath>

#include "nckc/errors.hpp"
#include "nckc/operators.hpp"

using nckc::AngularDirection;
using nckc::ChannelSpec;
using nckc::StencilConfig;

TEST_CASE("Hamiltonian residual for every state with j <= 6, sum(s) <= 3") {
  double worst = 0.0;
  int states = 0;
  for (int a = 0; a <= 3; ++a)
    for (int b = 0; a + b <= 3; ++b)
      for (int s = 0; a + b + s <= 3; ++s) {
        const ChannelSpec c{a, b, s, 1.0};
        for (int j = c.threshold(); j <= 6; ++j)
          for (const auto& q : nckc::enumerate_states(c, j)) {
            const auto probes = nckc::select_probes(c, q, 5);
            REQUIRE(probes.size() == 5);
            for (const auto& p : probes) worst = std::max(worst, nckc::hamiltonian_residual(c, q, p));
            ++states;
          }
      }
  CHECK(states > 100);
  CHECK(worst < 1e-6);
}

TEST_CASE("Hamiltonian: gamma doubling scales E by 4 and the residual still passes") {
  const ChannelSpec c1{1, 0, 1, 1.0};
  const ChannelSpec c2{1, 0, 1, 2.0};
  const auto q = nckc::make_quantum_numbers(c1, 5, 4, 1);
  CHECK(std::abs(nckc::bound_energy(c2, 5) / nckc::bound_energy(c1, 5) - 4.0) < 1e-14);
  for (const auto& p : nckc::select_probes(c2, q, 5)) CHECK(nckc::hamiltonian_residual(c2, q, p) < 1e-6);
}

TEST_CASE("Hamiltonian: linearity") {
  const ChannelSpec c{0, 0, 0, 1.0};
  const auto q1 = nckc::make_quantum_numbers(c, 2, 2, 2);
  const auto q2 = nckc::make_quantum_numbers(c, 2, 0, 0);
  const nckc::FieldEvaluator f1 = [&](double r, AngularDirection d) { return nckc::full_wavefunction(c, q1, r, d); };
  const nckc::FieldEvaluator f2 = [&](double r, AngularDirection d) { return nckc::full_wavefunction(c, q2, r, d); };
  const nckc::FieldEvaluator mix = [&](double r, AngularDirection d) { return 2.0 * f1(r, d) - 0.5 * f2(r, d); };
  const AngularDirection d{0.7, 0.6};
  const double lhs = nckc::apply_hamiltonian(c, mix, 3.0, d);
  const double rhs = 2.0 * nckc::apply_hamiltonian(c, f1, 3.0, d) - 0.5 * nckc::apply_hamiltonian(c, f2, 3.0, d);
  CHECK(std::abs(lhs - rhs) < 1e-9 * std::abs(rhs));  // roundoff ~ eps / h^2
  // both share E, so the mixture is an eigenfunction too
  CHECK(std::abs(lhs / mix(3.0, d) - nckc::bound_energy(c, 2)) < 1e-6 * std::abs(nckc::bound_energy(c, 2)));
}

TEST_CASE("I1, I2: eigenvalues (l+2)^2 - 1/4 and (m+1)^2 on Y_lm") {
  for (const ChannelSpec& c : {ChannelSpec{0, 0, 0, 1.0}, ChannelSpec{1, 1, 1, 1.0}, ChannelSpec{2, 1, 0, 1.0}}) {
    for (const auto& [l, m] : nckc::angular_labels(c, c.threshold() + 6)) {
      const auto probes = nckc::select_angular_probes(c, l, m, 5);
      REQUIRE(probes.size() == 5);
      for (const AngularDirection& d : probes) {
        CHECK(nckc::i1_residual(c, l, m, d, nckc::i1_eigenvalue(l)) < 1e-6);
        CHECK(nckc::i2_residual(c, l, m, d, nckc::i2_eigenvalue(m)) < 1e-6);
      }
    }
  }
  // the lowest (0,0,0) state and the (1,1,1), l = 3, m = 2 state
  CHECK(nckc::i1_eigenvalue(0) == 3.75);
  CHECK(nckc::i1_eigenvalue(3) == 24.75);
  CHECK(nckc::i2_eigenvalue(2) == 9.0);
  CHECK(nckc::so6_casimir_eigenvalue(3) == 21.0);
  CHECK(nckc::so4_casimir_eigenvalue(2) == 8.0);
}

TEST_CASE("I1 and I2 commute on Y_lm") {
  const ChannelSpec c{1, 1, 1, 1.0};
  const nckc::AngularEvaluator y = [&](AngularDirection d) { return nckc::angular_wavefunction(c, 5, 4, d); };
  const nckc::AngularEvaluator i1y = [&](AngularDirection d) { return nckc::apply_I1(c, y, d); };
  const nckc::AngularEvaluator i2y = [&](AngularDirection d) { return nckc::apply_I2(c, y, d); };
  const StencilConfig outer{1e-2, 2e-2, 2e-2, 2};
  const AngularDirection d{0.8, 0.7};
  const double i2i1 = nckc::apply_I2(c, i1y, d, outer);
  const double i1i2 = nckc::apply_I1(c, i2y, d, outer);
  CHECK(std::abs(i2i1 - i1i2) < 1e-5 * std::abs(i2i1));
}

TEST_CASE("Richardson: raw second-order stencil error drops ~4x per halving") {
  const ChannelSpec c{1, 1, 1, 1.0};
  const AngularDirection d{0.9, 0.6};
  const double expected = nckc::i1_eigenvalue(5);
  const auto raw = [&](double h) {
    return nckc::i1_residual(c, 5, 2, d, expected, StencilConfig{1e-2, h, h, 1});
  };
  const double ratio = raw(0.04) / raw(0.02);
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);
}

TEST_CASE("stencil geometry errors") {
  const ChannelSpec c{0, 0, 0, 1.0};
  const nckc::AngularEvaluator y = [&](AngularDirection d) { return nckc::angular_wavefunction(c, 0, 0, d); };
  CHECK_THROWS_AS(nckc::apply_I1(c, y, {0.02, 0.7}), nckc::GeometryError);
  CHECK_THROWS_AS(nckc::apply_I2(c, y, {0.7, 1.56}), nckc::GeometryError);
  const nckc::FieldEvaluator f = [](double, AngularDirection) { return 1.0; };
  CHECK_THROWS_AS(nckc::apply_hamiltonian(c, f, 0.0, {0.7, 0.7}), nckc::GeometryError);
  CHECK_THROWS_AS(nckc::apply_I1(c, y, {0.7, 0.7}, StencilConfig{1e-3, 1e-3, 1e-3, 0}), nckc::DomainError);
}
