#include "tdr/wildness.hpp"

#include "tdr/error.hpp"
#include "tdr/linalg.hpp"
#include "tdr/random.hpp"
#include "tdr/shapes.hpp"

namespace tdr {

namespace {

std::size_t check_pair(const MatrixPair& p) {
  const std::size_t n = p.A.rows();
  if (!p.A.is_square() || !p.B.is_square() || p.B.rows() != n) {
    throw Error(ErrorKind::ShapeMismatch, "pair must be two n x n matrices");
  }
  return n;
}

RatMatrix elementary(std::size_t m) {
  RatMatrix e(2, 2);
  e(m / 2, m % 2) = 1;
  return e;
}

}  // namespace

std::pair<RatMatrix, RatMatrix> build_Y_pair(const MatrixPair& p) {
  const std::size_t n = check_pair(p);
  const RatMatrix id = RatMatrix::identity(n);
  RatMatrix x1(2 * n, 2 * n), x2(2 * n, 2 * n), c1(4 * n, 4 * n), c2(4 * n, 4 * n);
  x1.set_block(0, 0, id);
  x2.set_block(n, n, id);
  for (std::size_t k = 1; k < 4; ++k) c1.set_block(k * n, (k - 1) * n, id);
  c2.set_block(2 * n, 0, p.A);
  c2.set_block(3 * n, n, p.B);
  return {RatMatrix::direct_sum(x1, c1), RatMatrix::direct_sum(x2, c2)};
}

Representation needle_rep_from_pair(const MatrixPair& p) {
  const auto [y1, y2] = build_Y_pair(p);
  const std::size_t d = y1.rows();
  RatMatrix t(2 * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      t(2 * i, k) = y1(i, k);
      t(2 * i + 1, k) = y2(i, k);
    }
  }
  return validate_representation(shapes::needle(), {{"e1", d}, {"e2", 2}}, {{"v1", t}});
}

Representation eight_rep_from_tuple(const std::array<RatMatrix, 4>& m) {
  const std::size_t d = m[0].rows();
  RatMatrix t(2 * d, 2 * d);
  for (std::size_t k = 0; k < 4; ++k) {
    if (m[k].rows() != d || !m[k].is_square()) throw Error(ErrorKind::ShapeMismatch, "tuple entries differ in size");
    t += kron(m[k], elementary(k));
  }
  return validate_representation(shapes::figure_eight(), {{"e1", d}, {"e2", 2}}, {{"v1", t}});
}

std::array<RatMatrix, 4> eight_tuple(const Representation& r) {
  const RatMatrix& t = r.tensors.at("v1");
  const std::size_t d = r.dims.at("e1");
  std::array<RatMatrix, 4> out;
  for (std::size_t k = 0; k < 4; ++k) {
    out[k] = RatMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t c = 0; c < d; ++c) out[k](i, c) = t(2 * i + k / 2, 2 * c + k % 2);
  }
  return out;
}

Representation eight_rep_from_pair(const MatrixPair& p) {
  auto [y1, y2] = build_Y_pair(p);
  const std::size_t d = y1.rows();
  return eight_rep_from_tuple({std::move(y1), std::move(y2), RatMatrix(d, d), RatMatrix(d, d)});
}

std::array<RatMatrix, 4> eight_mixing(const std::array<RatMatrix, 4>& m, const RatMatrix& g) {
  const auto gi = inverse(g);
  if (!gi) throw Error(ErrorKind::Singular, "mixing matrix");
  const RatMatrix h = kron(g, gi->transpose());
  std::array<RatMatrix, 4> out;
  for (std::size_t k = 0; k < 4; ++k) {
    out[k] = RatMatrix(m[0].rows(), m[0].cols());
    for (std::size_t j = 0; j < 4; ++j) out[k] += h(j, k) * m[j];
  }
  return out;
}

GroupElement iso_from_similarity(const RatMatrix& P, const MatrixPair& p1, const MatrixPair& p2) {
  const std::size_t n = check_pair(p1);
  if (check_pair(p2) != n || P.rows() != n || !P.is_square()) {
    throw Error(ErrorKind::NotASimilarity, "sizes disagree");
  }
  if (!(P * p1.A == p2.A * P) || !(P * p1.B == p2.B * P)) {
    throw Error(ErrorKind::NotASimilarity, "P does not intertwine the pairs");
  }
  if (determinant(P) == 0) throw Error(ErrorKind::NotASimilarity, "P is singular");
  return {{"e1", kron(RatMatrix::identity(6), P)}, {"e2", RatMatrix::identity(2)}};
}

std::optional<RatMatrix> sim_similarity_solve(const MatrixPair& p1, const MatrixPair& p2, std::uint64_t seed,
                                              int retries) {
  const std::size_t n = check_pair(p1);
  if (check_pair(p2) != n) throw Error(ErrorKind::ShapeMismatch, "pairs differ in size");
  // Row-major vec: vec(P X) = (I (x) X^T) vec P, vec(X P) = (X (x) I) vec P.
  const RatMatrix id = RatMatrix::identity(n);
  const RatMatrix sys = RatMatrix::vcat(kron(id, p1.A.transpose()) - kron(p2.A, id),
                                        kron(id, p1.B.transpose()) - kron(p2.B, id));
  const RatMatrix basis = nullspace(sys);
  if (basis.cols() == 0) return std::nullopt;
  const auto unvec = [n](const std::vector<Rational>& v) { return RatMatrix(n, n, v); };
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    RatMatrix cand = unvec(basis.col(c));
    if (determinant(cand) != 0) return cand;
  }
  SplitMix64 rng(seed);
  for (int t = 0; t < retries; ++t) {
    std::vector<Rational> v(n * n);
    for (std::size_t c = 0; c < basis.cols(); ++c) {
      const Rational k = rng.rational();
      for (std::size_t i = 0; i < v.size(); ++i) v[i] += k * basis(i, c);
    }
    RatMatrix cand = unvec(v);
    if (determinant(cand) != 0) return cand;
  }
  return std::nullopt;
}

}  // namespace tdr
