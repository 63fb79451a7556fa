#pragma once

// Data-parallel exact kernels. The unqualified versions use OpenMP; the
// `serial` namespace keeps straightforward single-threaded references that
// the tests and the benchmark compare against. Results are bit-identical
// because all arithmetic is exact.

#include <cstddef>
#include <span>
#include <vector>

#include "tdr/matrix.hpp"

namespace tdr::kernels {

/// C = A * B.
RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);

/// Kronecker product, (row of a) slowest.
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

/// Reorders the axes of a dense row-major tensor. Axis k of the result is
/// axis perm[k] of the input.
std::vector<Rational> permute_axes(std::span<const Rational> data,
                                   std::span<const std::size_t> dims,
                                   std::span<const std::size_t> perm);

/// Fraction-free (Bareiss) forward elimination in place on an integer matrix
/// stored row-major. Returns the pivot columns; their count is the rank.
std::vector<std::size_t> bareiss_eliminate(std::vector<Integer>& m, std::size_t rows,
                                           std::size_t cols);

namespace serial {

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b);
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);
std::vector<Rational> permute_axes(std::span<const Rational> data,
                                   std::span<const std::size_t> dims,
                                   std::span<const std::size_t> perm);
std::vector<std::size_t> bareiss_eliminate(std::vector<Integer>& m, std::size_t rows,
                                           std::size_t cols);

}  // namespace serial

}  // namespace tdr::kernels
