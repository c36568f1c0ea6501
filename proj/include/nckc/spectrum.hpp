#pragma once

#include <utility>
#include <vector>

namespace nckc {

// Fixed potential parameters: barrier strengths (s_i^2 - 1/4)/2 on the x, y,
// z axes and the Coulomb strength gamma.
struct ChannelSpec {
  int s1 = 0;
  int s2 = 0;
  int s3 = 0;
  double gamma = 1.0;

  [[nodiscard]] int threshold() const { return s1 + s2 + s3; }
  // Some s_i = 0: the corresponding barrier is the attractive -1/(8 x^2) term.
  [[nodiscard]] bool borderline() const { return s1 == 0 || s2 == 0 || s3 == 0; }

  friend bool operator==(const ChannelSpec&, const ChannelSpec&) = default;
};

/// Throws DomainError unless s_i >= 0 and gamma > 0 (finite).
void validate(const ChannelSpec& channel);

// Labels of one bound state. Invariants:
//   m = s1 + s2 + 2 k2,  l = m + s3 + 2 k1,  j = l + n.
struct QuantumNumbers {
  int j = 0;
  int l = 0;
  int m = 0;
  int k1 = 0;
  int k2 = 0;
  int n = 0;

  friend bool operator==(const QuantumNumbers&, const QuantumNumbers&) = default;
};

/// True when (l, m) labels an angular function of the channel.
bool is_valid_angular(const ChannelSpec& channel, int l, int m);

/// Builds the labels from (j, l, m); throws ConstraintError if inconsistent.
QuantumNumbers make_quantum_numbers(const ChannelSpec& channel, int j, int l, int m);

/// All valid (l, m) with l <= l_max, ordered by l then m.
std::vector<std::pair<int, int>> angular_labels(const ChannelSpec& channel, int l_max);

struct BoundState {
  ChannelSpec channel;
  QuantumNumbers qn;
  double energy = 0.0;
};

/// E = -gamma^2 / (2 (j + 5/2)^2). Throws NoStateError for j below threshold.
double bound_energy(const ChannelSpec& channel, int j);

/// d(d+1)/2 with d = floor((j - s1 - s2 - s3)/2) + 1.
long degeneracy(const ChannelSpec& channel, int j);

/// Every state of level j, sorted by (l, m, n).
std::vector<QuantumNumbers> enumerate_states(const ChannelSpec& channel, int j);

BoundState make_bound_state(const ChannelSpec& channel, const QuantumNumbers& qn);

}  // namespace nckc
