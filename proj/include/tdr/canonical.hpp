#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "tdr/poly.hpp"

namespace tdr {

/// det(x I - m) via Hessenberg reduction. Throws NotSquare.
RatPoly char_poly(const RatMatrix& m);

struct ElementaryDivisor {
  RatPoly poly;  // monic irreducible over Q
  int power = 1;
  friend bool operator==(const ElementaryDivisor&, const ElementaryDivisor&) = default;
  friend std::strong_ordering operator<=>(const ElementaryDivisor& a, const ElementaryDivisor& b) {
    if (auto c = a.poly <=> b.poly; c != 0) return c;
    return a.power <=> b.power;
  }
};

/// Elementary divisors of a square matrix over Q, as a sorted multiset
/// (repeated entries for repeated blocks). Throws NotSquare.
std::vector<ElementaryDivisor> rational_canonical(const RatMatrix& m);

/// A homogeneous Jordan chain x_0 in V_start, x_{k+1} = N x_k, N x_{len-1} = 0.
struct JordanChain {
  std::size_t start_grade = 1;  // 1-based
  std::size_t length = 0;
  std::vector<std::vector<Rational>> vectors;  // vectors[k] lives in grade start+k (cyclic)
};

/// Jordan chains for a cyclically graded nilpotent operator given by blocks
/// N_i : V_i -> V_{i+1 mod n}. The chain vectors form a basis of the direct
/// sum of the V_i. Throws ShapeMismatch or NotNilpotent.
std::vector<JordanChain> graded_jordan_chains(std::span<const RatMatrix> blocks);

/// Same construction restricted to the eventual kernel; never throws
/// NotNilpotent. The chains span the nilpotent part only.
std::vector<JordanChain> graded_nil_chains(std::span<const RatMatrix> blocks);

}  // namespace tdr
