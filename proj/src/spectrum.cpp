#include "nckc/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <tuple>

#include "nckc/errors.hpp"

namespace nckc {
namespace {

void require_level(const ChannelSpec& channel, int j) {
  validate(channel);
  if (j < channel.threshold()) {
    throw NoStateError("no bound state with j = " + std::to_string(j) +
                       " below threshold s1+s2+s3 = " + std::to_string(channel.threshold()));
  }
}

}  // namespace

void validate(const ChannelSpec& channel) {
  if (channel.s1 < 0 || channel.s2 < 0 || channel.s3 < 0) {
    throw DomainError("channel: s1, s2, s3 must be nonnegative");
  }
  if (!(channel.gamma > 0.0) || !std::isfinite(channel.gamma)) {
    throw DomainError("channel: gamma must be positive and finite");
  }
}

bool is_valid_angular(const ChannelSpec& channel, int l, int m) {
  const int two_k2 = m - channel.s1 - channel.s2;
  const int two_k1 = l - m - channel.s3;
  return two_k2 >= 0 && two_k2 % 2 == 0 && two_k1 >= 0 && two_k1 % 2 == 0;
}

QuantumNumbers make_quantum_numbers(const ChannelSpec& channel, int j, int l, int m) {
  validate(channel);
  if (!is_valid_angular(channel, l, m)) {
    throw ConstraintError("(l, m) = (" + std::to_string(l) + ", " + std::to_string(m) +
                          ") violates m - s1 - s2, l - m - s3 nonnegative even");
  }
  if (l > j) {
    throw ConstraintError("l = " + std::to_string(l) + " exceeds j = " + std::to_string(j));
  }
  QuantumNumbers qn;
  qn.j = j;
  qn.l = l;
  qn.m = m;
  qn.k1 = (l - m - channel.s3) / 2;
  qn.k2 = (m - channel.s1 - channel.s2) / 2;
  qn.n = j - l;
  return qn;
}

std::vector<std::pair<int, int>> angular_labels(const ChannelSpec& channel, int l_max) {
  validate(channel);
  std::vector<std::pair<int, int>> out;
  for (int l = channel.threshold(); l <= l_max; ++l) {
    for (int m = channel.s1 + channel.s2; m <= l - channel.s3; m += 2) {
      if (is_valid_angular(channel, l, m)) out.emplace_back(l, m);
    }
  }
  return out;
}

double bound_energy(const ChannelSpec& channel, int j) {
  require_level(channel, j);
  const double nu = j + 2.5;
  return -channel.gamma * channel.gamma / (2.0 * nu * nu);
}

long degeneracy(const ChannelSpec& channel, int j) {
  require_level(channel, j);
  const long d = (j - channel.threshold()) / 2 + 1;
  return d * (d + 1) / 2;
}

std::vector<QuantumNumbers> enumerate_states(const ChannelSpec& channel, int j) {
  require_level(channel, j);
  const int q = j - channel.threshold();
  std::vector<QuantumNumbers> states;
  for (int k1 = 0; 2 * k1 <= q; ++k1) {
    for (int k2 = 0; 2 * k1 + 2 * k2 <= q; ++k2) {
      QuantumNumbers qn;
      qn.j = j;
      qn.k1 = k1;
      qn.k2 = k2;
      qn.n = q - 2 * k1 - 2 * k2;
      qn.m = channel.s1 + channel.s2 + 2 * k2;
      qn.l = qn.m + channel.s3 + 2 * k1;
      states.push_back(qn);
    }
  }
  std::sort(states.begin(), states.end(), [](const QuantumNumbers& a, const QuantumNumbers& b) {
    return std::tie(a.l, a.m, a.n) < std::tie(b.l, b.m, b.n);
  });
  return states;
}

BoundState make_bound_state(const ChannelSpec& channel, const QuantumNumbers& qn) {
  const QuantumNumbers checked = make_quantum_numbers(channel, qn.j, qn.l, qn.m);
  return {channel, checked, bound_energy(channel, qn.j)};
}

}  // namespace nckc
