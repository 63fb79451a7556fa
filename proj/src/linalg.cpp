#include "tdr/linalg.hpp"

#include "tdr/error.hpp"
#include "tdr/kernels.hpp"

namespace tdr {

namespace {

// Scales each row by the lcm of its denominators.
std::vector<Integer> integer_rows(const RatMatrix& m) {
  std::vector<Integer> out(m.size());
  Integer l;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    l = 1;
    for (const auto& q : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& q = m(r, c);
      mpz_divexact(out[r * m.cols() + c].get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
      out[r * m.cols() + c] *= q.get_num();
    }
  }
  return out;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  if (m.size() == 0) return 0;
  auto ints = integer_rows(m);
  return kernels::bareiss_eliminate(ints, m.rows(), m.cols()).size();
}

Rational determinant(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "determinant");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

Echelon rref(const RatMatrix& m) {
  Echelon e{m, {}};
  RatMatrix& a = e.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a(p, c) == 0) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  return e;
}

RatMatrix nullspace(const RatMatrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  RatMatrix basis(m.cols(), m.cols() - e.pivots.size());
  std::size_t k = 0;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    basis(f, k) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(e.pivots[i], k) = -e.reduced(i, f);
    ++k;
  }
  return basis;
}

RatMatrix left_nullspace(const RatMatrix& m) { return nullspace(m.transpose()).transpose(); }

RatMatrix column_basis(const RatMatrix& m) {
  const Echelon e = rref(m);
  return m.columns(e.pivots);
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "inverse");
  const std::size_t n = m.rows();
  const Echelon e = rref(RatMatrix::hcat(m, RatMatrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

std::optional<AffineSolution> solve_linear(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) throw Error(ErrorKind::ShapeMismatch, "solve_linear");
  const Echelon e = rref(RatMatrix::hcat(a, b));
  RatMatrix x(a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, a.cols() + j);
  }
  return AffineSolution{std::move(x), nullspace(a)};
}

bool same_column_space(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows() != b.rows()) return false;
  const std::size_t ra = rank(a);
  return ra == rank(b) && ra == rank(RatMatrix::hcat(a, b));
}

RatMatrix matrix_power(const RatMatrix& m, unsigned k) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "matrix_power");
  RatMatrix result = RatMatrix::identity(m.rows());
  RatMatrix base = m;
  while (k > 0) {
    if (k & 1U) result = result * base;
    k >>= 1U;
    if (k > 0) base = base * base;
  }
  return result;
}

}  // namespace tdr
