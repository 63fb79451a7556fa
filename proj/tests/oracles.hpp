#pragma once

// Independent reference computations used by the tests. These deliberately
// avoid the library's own elimination and factorization code paths.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "tdr/matrix.hpp"
#include "tdr/poly.hpp"

namespace oracle {

using tdr::RatMatrix;
using tdr::RatPoly;
using tdr::Rational;

// Plain row reduction, no pivot search beyond the first nonzero entry.
inline std::size_t rank(RatMatrix a) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    for (std::size_t i = r + 1; i < a.rows(); ++i) {
      const Rational f = a(i, c) / a(r, c);
      for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    if (++r == a.rows()) break;
  }
  return r;
}

// Cofactor expansion along the first row.
inline Rational det(const RatMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Rational s = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j) == 0) continue;
    RatMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) minor(r - 1, k++) = a(r, c);
    const Rational t = a(0, j) * det(minor);
    s += (j % 2 == 0) ? t : Rational(-t);
  }
  return s;
}

inline std::vector<mpz_class> divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> out;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      if (d * d != v) out.push_back(v / d);
    }
  }
  return out;
}

// Rational root test; only valid for degree <= 3.
inline bool has_rational_root(const RatPoly& p) {
  mpz_class l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& c : p.coeffs()) z.push_back(mpz_class(c * l));
  if (z.front() == 0) return true;
  for (const auto& a : divisors(z.front()))
    for (const auto& b : divisors(z.back()))
      for (int sign : {1, -1}) {
        const Rational q = Rational(a * sign, b);
        if (p.eval(q) == 0) return true;
      }
  return false;
}

inline bool irreducible_small(const RatPoly& p) {
  if (p.degree() == 1) return true;
  if (p.degree() < 1 || p.degree() > 3) return false;
  return !has_rational_root(p);
}

// Block-diagonal sum of square matrices.
inline RatMatrix block_diag(const std::vector<RatMatrix>& blocks) {
  RatMatrix out;
  for (const auto& b : blocks) out = RatMatrix::direct_sum(out, b);
  return out;
}

inline RatMatrix jordan_nil(std::size_t k) {
  RatMatrix j(k, k);
  for (std::size_t i = 0; i + 1 < k; ++i) j(i + 1, i) = 1;
  return j;
}

}  // namespace oracle
