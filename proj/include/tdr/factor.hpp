#pragma once

#include <vector>

#include "tdr/poly.hpp"

namespace tdr {

struct PolyFactor {
  RatPoly factor;  // monic, irreducible over Q
  int multiplicity = 0;
  friend bool operator==(const PolyFactor&, const PolyFactor&) = default;
};

struct Factorization {
  Rational leading;
  std::vector<PolyFactor> factors;  // sorted by (degree, coefficients)
};

/// Complete factorization over Q: square-free decomposition, then modular
/// factorization with Hensel lifting and factor recombination.
/// Throws ZeroPolynomial.
Factorization factor_poly(const RatPoly& p);

/// Yun's algorithm. Returns monic square-free parts s_i with multiplicity i,
/// p = lc * prod s_i^i, empty parts omitted.
std::vector<PolyFactor> squarefree_decomposition(const RatPoly& p);

bool is_irreducible(const RatPoly& p);

}  // namespace tdr
