#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace nckc {

using Complex = std::complex<double>;

// Pairwise (cascade) summation in index order. The result depends only on
// the order of the input, so callers that fill the input in parallel still
// get bitwise reproducible sums.
template <typename T>
T pairwise_sum(std::span<const T> values) {
  constexpr std::size_t kBlock = 32;
  const std::size_t n = values.size();
  if (n <= kBlock) {
    T acc{};
    for (const T& v : values) acc += v;
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& values) {
  return pairwise_sum(std::span<const T>(values));
}

// Polynomial (Neville) extrapolation of samples v(h_k) to h = 0.
// The abscissae must be distinct; the full table is used.
Complex extrapolate_to_zero(std::span<const double> h, std::span<const Complex> v);
double extrapolate_to_zero(std::span<const double> h, std::span<const double> v);

}  // namespace nckc
