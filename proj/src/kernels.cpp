#include "tdr/kernels.hpp"

#include <cstdint>

#include "tdr/error.hpp"

namespace tdr::kernels {

namespace {

// Below this many scalar operations the OpenMP fork costs more than it saves.
constexpr std::size_t kParallelThreshold = 2048;

void check_matmul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows()) {
    throw Error(ErrorKind::ShapeMismatch, "matmul " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()) + " by " +
                                              std::to_string(b.rows()) + "x" +
                                              std::to_string(b.cols()));
  }
}

void matmul_row(const RatMatrix& a, const RatMatrix& b, RatMatrix& c, std::size_t i) {
  Rational t;
  for (std::size_t k = 0; k < a.cols(); ++k) {
    const Rational& aik = a(i, k);
    if (aik == 0) continue;
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (b(k, j) == 0) continue;
      t = aik * b(k, j);
      c(i, j) += t;
    }
  }
}

void kron_row(const RatMatrix& a, const RatMatrix& b, RatMatrix& out, std::size_t r) {
  const std::size_t ra = r / b.rows(), rb = r % b.rows();
  for (std::size_t ca = 0; ca < a.cols(); ++ca) {
    const Rational& x = a(ra, ca);
    for (std::size_t cb = 0; cb < b.cols(); ++cb) {
      if (x == 0) {
        out(r, ca * b.cols() + cb) = 0;
      } else {
        out(r, ca * b.cols() + cb) = x * b(rb, cb);
      }
    }
  }
}

struct PermutePlan {
  std::vector<std::size_t> out_dims;
  std::vector<std::size_t> in_strides;  // stride in the input of output axis k
  std::size_t total = 1;
};

PermutePlan plan_permute(std::span<const std::size_t> dims, std::span<const std::size_t> perm) {
  if (perm.size() != dims.size()) throw Error(ErrorKind::ShapeMismatch, "permutation rank");
  std::vector<std::size_t> strides(dims.size(), 1);
  for (std::size_t k = dims.size(); k-- > 1;) strides[k - 1] = strides[k] * dims[k];
  PermutePlan plan;
  std::vector<bool> seen(dims.size(), false);
  for (std::size_t k = 0; k < perm.size(); ++k) {
    if (perm[k] >= dims.size() || seen[perm[k]]) {
      throw Error(ErrorKind::ShapeMismatch, "not a permutation");
    }
    seen[perm[k]] = true;
    plan.out_dims.push_back(dims[perm[k]]);
    plan.in_strides.push_back(strides[perm[k]]);
    plan.total *= dims[perm[k]];
  }
  return plan;
}

std::size_t source_index(const PermutePlan& plan, std::size_t out) {
  std::size_t src = 0;
  for (std::size_t k = plan.out_dims.size(); k-- > 0;) {
    const std::size_t d = plan.out_dims[k];
    src += (out % d) * plan.in_strides[k];
    out /= d;
  }
  return src;
}

void bareiss_update_row(std::vector<Integer>& m, std::size_t cols, std::size_t pr,
                        std::size_t pc, std::size_t i, const Integer& prev) {
  Integer* row = m.data() + i * cols;
  const Integer* prow = m.data() + pr * cols;
  const Integer& pivot = prow[pc];
  Integer t;
  for (std::size_t j = pc + 1; j < cols; ++j) {
    row[j] *= pivot;
    t = row[pc] * prow[j];
    row[j] -= t;
    mpz_divexact(row[j].get_mpz_t(), row[j].get_mpz_t(), prev.get_mpz_t());
  }
  row[pc] = 0;
}

std::size_t find_pivot(const std::vector<Integer>& m, std::size_t rows, std::size_t cols,
                       std::size_t r, std::size_t c) {
  for (std::size_t p = r; p < rows; ++p)
    if (m[p * cols + c] != 0) return p;
  return rows;
}

void swap_rows(std::vector<Integer>& m, std::size_t cols, std::size_t a, std::size_t b) {
  for (std::size_t j = 0; j < cols; ++j) mpz_swap(m[a * cols + j].get_mpz_t(), m[b * cols + j].get_mpz_t());
}

}  // namespace

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  check_matmul(a, b);
  RatMatrix c(a.rows(), b.cols());
  const auto n = static_cast<std::int64_t>(a.rows());
  const bool par = a.rows() * a.cols() * b.cols() >= kParallelThreshold;
#pragma omp parallel for schedule(dynamic) if (par)
  for (std::int64_t i = 0; i < n; ++i) matmul_row(a, b, c, static_cast<std::size_t>(i));
  return c;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  const auto n = static_cast<std::int64_t>(out.rows());
  const bool par = out.size() >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t r = 0; r < n; ++r) kron_row(a, b, out, static_cast<std::size_t>(r));
  return out;
}

std::vector<Rational> permute_axes(std::span<const Rational> data, std::span<const std::size_t> dims,
                                   std::span<const std::size_t> perm) {
  const PermutePlan plan = plan_permute(dims, perm);
  if (plan.total != data.size()) throw Error(ErrorKind::ShapeMismatch, "tensor data size");
  std::vector<Rational> out(plan.total);
  const auto n = static_cast<std::int64_t>(plan.total);
  const bool par = plan.total >= kParallelThreshold;
#pragma omp parallel for schedule(static) if (par)
  for (std::int64_t o = 0; o < n; ++o) {
    out[static_cast<std::size_t>(o)] = data[source_index(plan, static_cast<std::size_t>(o))];
  }
  return out;
}

std::vector<std::size_t> bareiss_eliminate(std::vector<Integer>& m, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    const std::size_t p = find_pivot(m, rows, cols, r, c);
    if (p == rows) continue;
    if (p != r) swap_rows(m, cols, p, r);
    const auto lo = static_cast<std::int64_t>(r + 1), hi = static_cast<std::int64_t>(rows);
    const bool par = (rows - r) * (cols - c) >= kParallelThreshold;
#pragma omp parallel for schedule(dynamic) if (par)
    for (std::int64_t i = lo; i < hi; ++i) {
      bareiss_update_row(m, cols, r, c, static_cast<std::size_t>(i), prev);
    }
    prev = m[r * cols + c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

namespace serial {

RatMatrix matmul(const RatMatrix& a, const RatMatrix& b) {
  check_matmul(a, b);
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      c(i, j) = s;
    }
  return c;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t ra = 0; ra < a.rows(); ++ra)
    for (std::size_t ca = 0; ca < a.cols(); ++ca)
      for (std::size_t rb = 0; rb < b.rows(); ++rb)
        for (std::size_t cb = 0; cb < b.cols(); ++cb)
          out(ra * b.rows() + rb, ca * b.cols() + cb) = a(ra, ca) * b(rb, cb);
  return out;
}

std::vector<Rational> permute_axes(std::span<const Rational> data, std::span<const std::size_t> dims,
                                   std::span<const std::size_t> perm) {
  const PermutePlan plan = plan_permute(dims, perm);
  if (plan.total != data.size()) throw Error(ErrorKind::ShapeMismatch, "tensor data size");
  std::vector<Rational> out;
  out.reserve(plan.total);
  // Odometer over the output multi-index.
  std::vector<std::size_t> idx(plan.out_dims.size(), 0);
  for (std::size_t o = 0; o < plan.total; ++o) {
    std::size_t src = 0;
    for (std::size_t k = 0; k < idx.size(); ++k) src += idx[k] * plan.in_strides[k];
    out.push_back(data[src]);
    for (std::size_t k = idx.size(); k-- > 0;) {
      if (++idx[k] < plan.out_dims[k]) break;
      idx[k] = 0;
    }
  }
  return out;
}

std::vector<std::size_t> bareiss_eliminate(std::vector<Integer>& m, std::size_t rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    const std::size_t p = find_pivot(m, rows, cols, r, c);
    if (p == rows) continue;
    if (p != r) swap_rows(m, cols, p, r);
    for (std::size_t i = r + 1; i < rows; ++i) bareiss_update_row(m, cols, r, c, i, prev);
    prev = m[r * cols + c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace serial

}  // namespace tdr::kernels
