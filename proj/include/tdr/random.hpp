#pragma once

#include <cstdint>

#include "tdr/matrix.hpp"

namespace tdr {

/// 64-bit splitmix stream. The exact recurrence is part of the file-format
/// contract: answer keys written by gen-random reproduce from the seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform-ish value in [0, n) by reduction; n > 0.
  std::uint64_t below(std::uint64_t n) { return next() % n; }

  /// numerator in [-9, 9], denominator in [1, 9]
  Rational rational();

  RatMatrix matrix(std::size_t rows, std::size_t cols);

  /// Rejection-samples until the determinant is nonzero.
  RatMatrix invertible(std::size_t n);

  /// Row-permuted L*D*U with unit triangular L, U (entries in [-2, 2]) and
  /// a nonzero rational diagonal D. Invertible by construction, and the
  /// inverse stays small, so large conjugations remain cheap.
  RatMatrix invertible_ldu(std::size_t n);

 private:
  std::uint64_t state_;
};

}  // namespace tdr
