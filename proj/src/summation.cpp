#include "nckc/summation.hpp"

#include <vector>

#include "nckc/errors.hpp"

namespace nckc {
namespace {

template <typename T>
T neville_at_zero(std::span<const double> h, std::span<const T> v) {
  if (h.size() != v.size() || h.empty()) {
    throw DomainError("extrapolate_to_zero: need equally many abscissae and samples");
  }
  std::vector<T> table(v.begin(), v.end());
  const std::size_t n = h.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = 0; i + level < n; ++i) {
      const double hi = h[i];
      const double hj = h[i + level];
      if (hi == hj) throw DomainError("extrapolate_to_zero: repeated abscissa");
      table[i] = (hi * table[i + 1] - hj * table[i]) / (hi - hj);
    }
  }
  return table[0];
}

}  // namespace

Complex extrapolate_to_zero(std::span<const double> h, std::span<const Complex> v) {
  return neville_at_zero(h, v);
}

double extrapolate_to_zero(std::span<const double> h, std::span<const double> v) {
  return neville_at_zero(h, v);
}

}  // namespace nckc
