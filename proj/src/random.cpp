#include "tdr/random.hpp"

#include "tdr/linalg.hpp"

namespace tdr {

Rational SplitMix64::rational() {
  const auto num = static_cast<std::int64_t>(next() % 19) - 9;
  const auto den = static_cast<std::int64_t>(next() % 9) + 1;
  return make_rational(num, den);
}

RatMatrix SplitMix64::matrix(std::size_t rows, std::size_t cols) {
  RatMatrix m(rows, cols);
  for (auto& x : m.data()) x = rational();
  return m;
}

RatMatrix SplitMix64::invertible(std::size_t n) {
  while (true) {
    RatMatrix m = matrix(n, n);
    if (determinant(m) != 0) return m;
  }
}

RatMatrix SplitMix64::invertible_ldu(std::size_t n) {
  RatMatrix l = RatMatrix::identity(n), u = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) {
      l(i, j) = static_cast<long>(below(5)) - 2;
      u(j, i) = static_cast<long>(below(5)) - 2;
    }
  for (std::size_t i = 0; i < n; ++i) {
    Rational d = rational();
    while (d == 0) d = rational();
    for (std::size_t j = i; j < n; ++j) u(i, j) *= d;
  }
  RatMatrix m = l * u;
  // Fisher-Yates on the rows.
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = below(i);
    for (std::size_t c = 0; c < n; ++c) std::swap(m(i - 1, c), m(j, c));
  }
  return m;
}

}  // namespace tdr
