#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "tdr/matrix.hpp"
#include "tdr/representation.hpp"

namespace tdr {

struct MatrixPair {
  RatMatrix A, B;  // both n x n
};

/// (X1 + C1, X2 + C2(A, B)) as 6n x 6n block sums. Throws ShapeMismatch.
std::pair<RatMatrix, RatMatrix> build_Y_pair(const MatrixPair& p);

/// Needle with loop e1 of dimension 6n and dangling e2 of dimension 2,
/// tensor Y1 (x) u1 + Y2 (x) u2. Row (i, j) of the 12n x 6n vertex matrix
/// holds row i of the j-th matrix.
Representation needle_rep_from_pair(const MatrixPair& p);

/// Figure eight with dims (6n, 2) carrying the tuple (Y1, Y2, 0, 0) as
/// sum M_m (x) E_m over E11, E12, E21, E22.
Representation eight_rep_from_pair(const MatrixPair& p);

/// Packs a 4-tuple of d x d matrices into a figure-eight representation
/// with dims (d, 2), and reads one back.
Representation eight_rep_from_tuple(const std::array<RatMatrix, 4>& m);
std::array<RatMatrix, 4> eight_tuple(const Representation& r);

/// The tuple relation (M_1..M_4) -> (sum_j M_j h_jk)_k with h = g (x) (g^-1)^T.
std::array<RatMatrix, 4> eight_mixing(const std::array<RatMatrix, 4>& m, const RatMatrix& g);

/// Group element I_6 (x) P on the loop and I_2 on the dangling wire. Throws
/// NotASimilarity unless P is invertible with P A1 = A2 P and P B1 = B2 P.
GroupElement iso_from_similarity(const RatMatrix& P, const MatrixPair& p1, const MatrixPair& p2);

/// Searches the solution space of P A1 = A2 P, P B1 = B2 P for an invertible
/// element by seeded random combinations. Throws ShapeMismatch.
std::optional<RatMatrix> sim_similarity_solve(const MatrixPair& p1, const MatrixPair& p2, std::uint64_t seed = 1,
                                              int retries = 32);

}  // namespace tdr
