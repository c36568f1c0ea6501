#include "nckc/kernels.hpp"

#include <cmath>
#include <numbers>
#include <span>

#include "nckc/errors.hpp"
#include "nckc/summation.hpp"

namespace nckc::kernels {
namespace {

struct AlphaSetup {
  std::vector<double> angle;
  std::vector<double> cosine;
  double sin_sin_theta = 0.0;
  double cos_cos_theta = 0.0;
  double sin_sin_phi = 0.0;
  double cos_cos_phi = 0.0;
};

AlphaSetup make_alpha_setup(const AlphaIntegralInput& in) {
  if (in.points < 1) throw DomainError("alpha_integral: need at least one point per axis");
  make_direction(in.in_dir.theta, in.in_dir.phi);
  make_direction(in.out_dir.theta, in.out_dir.phi);
  AlphaSetup s;
  s.angle.resize(in.points);
  s.cosine.resize(in.points);
  for (int k = 0; k < in.points; ++k) {
    s.angle[k] = 2.0 * std::numbers::pi * k / in.points;
    s.cosine[k] = std::cos(s.angle[k]);
  }
  s.sin_sin_theta = std::sin(in.in_dir.theta) * std::sin(in.out_dir.theta);
  s.cos_cos_theta = std::cos(in.in_dir.theta) * std::cos(in.out_dir.theta);
  s.sin_sin_phi = std::sin(in.in_dir.phi) * std::sin(in.out_dir.phi);
  s.cos_cos_phi = std::cos(in.in_dir.phi) * std::cos(in.out_dir.phi);
  return s;
}

// Sum over (a2, a3) at fixed a1. Returns false if the base is not positive.
bool alpha_slab(const AlphaIntegralInput& in, const AlphaSetup& s, int i1,
                std::vector<Complex>& row, std::vector<Complex>& rows, Complex& out) {
  const int n = in.points;
  for (int i2 = 0; i2 < n; ++i2) {
    const double a = s.sin_sin_phi * s.cosine[i1] + s.cos_cos_phi * s.cosine[i2];
    const double c0 = 1.0 - a * s.sin_sin_theta;
    const double phase12 = -(in.s[0] * s.angle[i1] + in.s[1] * s.angle[i2]);
    for (int i3 = 0; i3 < n; ++i3) {
      const double base = c0 - s.cos_cos_theta * s.cosine[i3];
      if (!(base > 0.0)) return false;
      const double log_base = std::log(base);
      const double magnitude = std::exp(-2.5 * log_base);
      const double phase = phase12 - in.s[2] * s.angle[i3] - in.rho * log_base;
      row[i3] = Complex(magnitude * std::cos(phase), magnitude * std::sin(phase));
    }
    rows[i2] = pairwise_sum(std::span<const Complex>(row));
  }
  out = pairwise_sum(std::span<const Complex>(rows));
  return true;
}

Complex finish_alpha(const AlphaIntegralInput& in, const std::vector<Complex>& slabs,
                     bool ok) {
  if (!ok) {
    throw EvaluationError(
        "alpha_integral: kernel base 1 - n.n' is not positive (coincident directions)");
  }
  const double cell = 2.0 * std::numbers::pi / in.points;
  return pairwise_sum(slabs) * (cell * cell * cell);
}

void check_partial_wave_input(const PartialWaveInput& in) {
  validate(in.channel);
  make_direction(in.in_dir.theta, in.in_dir.phi);
  make_direction(in.out_dir.theta, in.out_dir.phi);
  if (in.l_max < 0) throw DomainError("partial_wave_coefficients: negative l_max");
}

double partial_wave_term(const PartialWaveInput& in, int l) {
  const ChannelSpec& c = in.channel;
  double acc = 0.0;
  if (l < c.threshold() || (l - c.threshold()) % 2 != 0) return acc;
  for (int m = c.s1 + c.s2; m <= l - c.s3; m += 2) {
    acc += angular_wavefunction(c, l, m, in.in_dir) * angular_wavefunction(c, l, m, in.out_dir);
  }
  return acc;
}

struct GramSetup {
  std::vector<AngularDirection> nodes;
  std::vector<double> weights;
};

GramSetup make_gram_setup(const GramInput& in) {
  validate(in.channel);
  for (const auto& [l, m] : in.labels) {
    if (!is_valid_angular(in.channel, l, m)) throw ConstraintError("angular_gram: invalid label");
  }
  const QuadratureRule rule = build_rule(QuadratureFamily::finite_legendre, in.order);
  GramSetup g;
  for (int i = 0; i < rule.order; ++i) {
    const double t = kHalfPi * 0.5 * (rule.nodes[i] + 1.0);
    const double wt = kHalfPi * 0.5 * rule.weights[i] * std::sin(t);
    for (int k = 0; k < rule.order; ++k) {
      const double p = kHalfPi * 0.5 * (rule.nodes[k] + 1.0);
      g.nodes.push_back({t, p});
      g.weights.push_back(wt * kHalfPi * 0.5 * rule.weights[k]);
    }
  }
  return g;
}

void gram_values(const GramInput& in, const GramSetup& g, std::size_t a, std::vector<double>& v) {
  v.resize(g.nodes.size());
  const auto [l, m] = in.labels[a];
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    v[i] = angular_wavefunction(in.channel, l, m, g.nodes[i]);
  }
}

double gram_entry(const GramSetup& g, const std::vector<double>& va, const std::vector<double>& vb,
                  std::vector<double>& scratch) {
  scratch.resize(va.size());
  for (std::size_t i = 0; i < va.size(); ++i) scratch[i] = g.weights[i] * va[i] * vb[i];
  return pairwise_sum(std::span<const double>(scratch));
}

}  // namespace

namespace serial {

Complex alpha_integral(const AlphaIntegralInput& in) {
  const AlphaSetup s = make_alpha_setup(in);
  std::vector<Complex> slabs(in.points);
  std::vector<Complex> row(in.points);
  std::vector<Complex> rows(in.points);
  bool ok = true;
  for (int i1 = 0; i1 < in.points && ok; ++i1) ok = alpha_slab(in, s, i1, row, rows, slabs[i1]);
  return finish_alpha(in, slabs, ok);
}

std::vector<double> partial_wave_coefficients(const PartialWaveInput& in) {
  check_partial_wave_input(in);
  std::vector<double> out(in.l_max + 1, 0.0);
  for (int l = 0; l <= in.l_max; ++l) out[l] = partial_wave_term(in, l);
  return out;
}

std::vector<double> angular_gram(const GramInput& in) {
  const GramSetup g = make_gram_setup(in);
  const std::size_t n = in.labels.size();
  std::vector<std::vector<double>> values(n);
  for (std::size_t a = 0; a < n; ++a) gram_values(in, g, a, values[a]);
  std::vector<double> gram(n * n);
  std::vector<double> scratch;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) gram[a * n + b] = gram_entry(g, values[a], values[b], scratch);
  }
  return gram;
}

}  // namespace serial

namespace parallel {

Complex alpha_integral(const AlphaIntegralInput& in) {
  const AlphaSetup s = make_alpha_setup(in);
  std::vector<Complex> slabs(in.points);
  int failures = 0;
#pragma omp parallel reduction(+ : failures)
  {
    std::vector<Complex> row(in.points);
    std::vector<Complex> rows(in.points);
#pragma omp for schedule(static)
    for (int i1 = 0; i1 < in.points; ++i1) {
      if (!alpha_slab(in, s, i1, row, rows, slabs[i1])) ++failures;
    }
  }
  return finish_alpha(in, slabs, failures == 0);
}

std::vector<double> partial_wave_coefficients(const PartialWaveInput& in) {
  check_partial_wave_input(in);
  std::vector<double> out(in.l_max + 1, 0.0);
#pragma omp parallel for schedule(dynamic, 4)
  for (int l = 0; l <= in.l_max; ++l) out[l] = partial_wave_term(in, l);
  return out;
}

std::vector<double> angular_gram(const GramInput& in) {
  const GramSetup g = make_gram_setup(in);
  const auto n = static_cast<long long>(in.labels.size());
  std::vector<std::vector<double>> values(n);
#pragma omp parallel for schedule(dynamic)
  for (long long a = 0; a < n; ++a) gram_values(in, g, static_cast<std::size_t>(a), values[a]);
  std::vector<double> gram(n * n);
#pragma omp parallel
  {
    std::vector<double> scratch;
#pragma omp for schedule(dynamic)
    for (long long ab = 0; ab < n * n; ++ab) {
      gram[ab] = gram_entry(g, values[ab / n], values[ab % n], scratch);
    }
  }
  return gram;
}

}  // namespace parallel

}  // namespace nckc::kernels
