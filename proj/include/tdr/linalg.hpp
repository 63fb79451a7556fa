#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tdr/matrix.hpp"

namespace tdr {

/// Exact rank by fraction-free elimination.
std::size_t rank(const RatMatrix& m);

/// Throws NotSquare.
Rational determinant(const RatMatrix& m);

struct Echelon {
  RatMatrix reduced;                 // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

Echelon rref(const RatMatrix& m);

/// Columns form a basis of {x : m x = 0}; shape cols(m) x nullity.
RatMatrix nullspace(const RatMatrix& m);

/// Rows form a basis of {y : y m = 0}; shape (rows(m) - rank) x rows(m).
RatMatrix left_nullspace(const RatMatrix& m);

/// A maximal independent subset of the columns of m.
RatMatrix column_basis(const RatMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Solutions of a X = b as particular + span(nullspace) column-wise.
struct AffineSolution {
  RatMatrix particular;  // cols(a) x cols(b)
  RatMatrix nullspace;   // cols(a) x k
};

/// Empty when the system is inconsistent.
std::optional<AffineSolution> solve_linear(const RatMatrix& a, const RatMatrix& b);

bool same_column_space(const RatMatrix& a, const RatMatrix& b);

RatMatrix matrix_power(const RatMatrix& m, unsigned k);

}  // namespace tdr
