#include "tdr/canonical.hpp"

#include <algorithm>

#include "tdr/error.hpp"
#include "tdr/factor.hpp"
#include "tdr/kernels.hpp"
#include "tdr/linalg.hpp"

namespace tdr {

namespace {

// Square integer matrix, row-major.
struct IntMatrix {
  std::size_t n = 0;
  std::vector<Integer> a;
  Integer& operator()(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return a[i * n + j]; }
};

Integer common_denominator(const RatMatrix& m) {
  Integer l = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (const auto& q : m.row(i)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
  return l;
}

IntMatrix scaled(const RatMatrix& m, const Integer& l) {
  IntMatrix out{m.rows(), std::vector<Integer>(m.size())};
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_divexact(out(i, j).get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
      out(i, j) *= m(i, j).get_num();
    }
  return out;
}

IntMatrix multiply(const IntMatrix& x, const IntMatrix& y) {
  IntMatrix out{x.n, std::vector<Integer>(x.a.size())};
  for (std::size_t i = 0; i < x.n; ++i)
    for (std::size_t k = 0; k < x.n; ++k) {
      if (x(i, k) == 0) continue;
      for (std::size_t j = 0; j < x.n; ++j) mpz_addmul(out(i, j).get_mpz_t(), x(i, k).get_mpz_t(), y(k, j).get_mpz_t());
    }
  return out;
}

void divide_content(IntMatrix& x) {
  Integer g = 0;
  for (const auto& v : x.a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0) return;
  for (auto& v : x.a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
}

std::size_t int_rank(IntMatrix x) { return kernels::bareiss_eliminate(x.a, x.n, x.n).size(); }

// Fraction-free determinant with the row-swap sign tracked.
Integer int_det(IntMatrix x) {
  const std::size_t n = x.n;
  Integer prev = 1;
  bool negate = false;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && x(p, c) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(x(p, j), x(c, j));
      negate = !negate;
    }
    for (std::size_t i = c + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < n; ++j) {
        x(i, j) = x(i, j) * x(c, c) - x(i, c) * x(c, j);
        mpz_divexact(x(i, j).get_mpz_t(), x(i, j).get_mpz_t(), prev.get_mpz_t());
      }
      x(i, c) = 0;
    }
    prev = x(c, c);
  }
  return negate ? Integer(-prev) : prev;
}

}  // namespace

RatPoly char_poly(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "char_poly");
  const std::size_t n = m.rows();
  if (n == 0) return RatPoly::constant(1);
  // With B = l*m integral, det(xI - B) is sampled at x = 0..n and
  // interpolated, then char_m(x) = l^-n det(l x I - B).
  const Integer l = common_denominator(m);
  const IntMatrix b = scaled(m, l);
  std::vector<Rational> dd(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    IntMatrix a = b;
    for (auto& v : a.a) v = -v;
    for (std::size_t i = 0; i < n; ++i) a(i, i) += static_cast<unsigned long>(k);
    dd[k] = Rational(int_det(std::move(a)));
  }
  // Newton divided differences on the nodes 0..n.
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t k = n; k >= j; --k) dd[k] = (dd[k] - dd[k - 1]) / static_cast<long>(j);
  RatPoly p = RatPoly::constant(dd[n]);
  for (std::size_t k = n; k-- > 0;) p = RatPoly::linear(static_cast<long>(k)) * p + RatPoly::constant(dd[k]);
  std::vector<Rational> c = p.coeffs();
  Rational scale = 1;
  for (std::size_t i = n + 1; i-- > 0;) {
    c[i] *= scale;
    scale /= l;
  }
  return RatPoly(std::move(c));
}

std::vector<ElementaryDivisor> rational_canonical(const RatMatrix& m) {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "rational_canonical");
  std::vector<ElementaryDivisor> out;
  if (m.rows() == 0) return out;
  const std::size_t n = m.rows();
  const Integer l = common_denominator(m);
  const IntMatrix b = scaled(m, l);
  const auto fac = factor_poly(char_poly(m));
  for (const auto& [q, e] : fac.factors) {
    const auto dq = static_cast<std::size_t>(q.degree());
    // An integer multiple of q(m): Horner on sum_i q_i l^(d-i) b^i.
    std::vector<Rational> qs(dq + 1);
    Integer den = 1;
    Integer lp = 1;
    for (std::size_t i = dq + 1; i-- > 0;) {
      qs[i] = q.coeff(i) * lp;
      lp *= l;
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), qs[i].get_den_mpz_t());
    }
    IntMatrix qm{n, std::vector<Integer>(n * n)};
    for (std::size_t i = dq + 1; i-- > 0;) {
      if (i != dq) qm = multiply(qm, b);
      const Rational ci = qs[i] * den;
      for (std::size_t r = 0; r < n; ++r) qm(r, r) += ci.get_num();
    }
    divide_content(qm);
    // at_least[k] = number of blocks of size >= k
    const std::size_t floor_rank = n - static_cast<std::size_t>(e) * dq;
    std::vector<std::size_t> ranks{n};
    IntMatrix pw = qm;
    for (int k = 1; k <= e + 1; ++k) {
      if (ranks.back() == floor_rank) {
        ranks.push_back(floor_rank);
        continue;
      }
      if (k > 1) {
        pw = multiply(pw, qm);
        divide_content(pw);
      }
      ranks.push_back(int_rank(pw));
    }
    std::vector<std::size_t> at_least(ranks.size() + 1, 0);
    for (std::size_t k = 1; k < ranks.size(); ++k) at_least[k] = (ranks[k - 1] - ranks[k]) / dq;
    for (std::size_t s = 1; s + 1 < at_least.size(); ++s) {
      const std::size_t mult = at_least[s] - at_least[s + 1];
      for (std::size_t i = 0; i < mult; ++i) out.push_back({q, static_cast<int>(s)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<JordanChain> chains_impl(std::span<const RatMatrix> blocks) {
  const std::size_t n = blocks.size();
  std::vector<JordanChain> out;
  if (n == 0) return out;
  std::vector<std::size_t> dim(n);
  std::size_t total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (blocks[i].rows() != blocks[(i + 1) % n].cols()) {
      throw Error(ErrorKind::ShapeMismatch, "graded block " + std::to_string(i + 1));
    }
    dim[i] = blocks[i].cols();
    total += dim[i];
  }
  if (total == 0) return out;

  // kernels[a][j] = basis of ker(N^j) inside V_a. x lies in ker(N^j) iff
  // N x lies in ker(N^(j-1)) one grade up; stop once no level grows.
  std::vector<std::vector<RatMatrix>> kernels(n);
  for (std::size_t a = 0; a < n; ++a) kernels[a].push_back(RatMatrix(dim[a], 0));
  std::size_t top = 0;
  for (bool grew = true; grew;) {
    grew = false;
    ++top;
    for (std::size_t a = 0; a < n; ++a) {
      const RatMatrix& below = kernels[(a + 1) % n][top - 1];
      RatMatrix neg = below;
      neg *= Rational(-1);
      const RatMatrix sol = nullspace(RatMatrix::hcat(blocks[a], neg));
      kernels[a].push_back(sol.block(0, 0, dim[a], sol.cols()));
      grew = grew || kernels[a][top].cols() != kernels[a][top - 1].cols();
    }
  }

  for (std::size_t len = 1; len < top; ++len) {
    for (std::size_t a = 0; a < n; ++a) {
      const RatMatrix& kl = kernels[a][len];
      if (kl.cols() == 0) continue;
      const std::size_t prev = (a + n - 1) % n;
      const RatMatrix image = blocks[prev] * kernels[prev][len + 1];
      const RatMatrix lower = RatMatrix::hcat(kernels[a][len - 1], image);
      const Echelon e = rref(RatMatrix::hcat(lower, kl));
      for (auto piv : e.pivots) {
        if (piv < lower.cols()) continue;
        JordanChain chain;
        chain.start_grade = a + 1;
        chain.length = len;
        std::vector<Rational> x = kl.col(piv - lower.cols());
        for (std::size_t k = 0; k < len; ++k) {
          chain.vectors.push_back(x);
          const RatMatrix& nk = blocks[(a + k) % n];
          std::vector<Rational> y(nk.rows());
          for (std::size_t r = 0; r < nk.rows(); ++r)
            for (std::size_t c = 0; c < nk.cols(); ++c) y[r] += nk(r, c) * x[c];
          x = std::move(y);
        }
        out.push_back(std::move(chain));
      }
    }
  }
  return out;
}

}  // namespace

std::vector<JordanChain> graded_jordan_chains(std::span<const RatMatrix> blocks) {
  auto chains = chains_impl(blocks);
  std::size_t covered = 0, total = 0;
  for (const auto& c : chains) covered += c.length;
  for (const auto& b : blocks) total += b.cols();
  if (covered != total) throw Error(ErrorKind::NotNilpotent, "cyclic composite is not nilpotent");
  return chains;
}

std::vector<JordanChain> graded_nil_chains(std::span<const RatMatrix> blocks) { return chains_impl(blocks); }

}  // namespace tdr
