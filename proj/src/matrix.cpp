#include "tdr/matrix.hpp"

#include <algorithm>

#include "tdr/error.hpp"
#include "tdr/kernels.hpp"

namespace tdr {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows_ * cols_) {
    throw Error(ErrorKind::ShapeMismatch, "matrix data does not match its shape");
  }
}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorKind::ShapeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::column(std::span<const Rational> v) {
  return RatMatrix(v.size(), 1, std::vector<Rational>(v.begin(), v.end()));
}

bool RatMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

std::vector<Rational> RatMatrix::col(std::size_t c) const {
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw Error(ErrorKind::ShapeMismatch, "block out of range");
  RatMatrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void RatMatrix::set_block(std::size_t r0, std::size_t c0, const RatMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
    throw Error(ErrorKind::ShapeMismatch, "block out of range");
  }
  for (std::size_t r = 0; r < b.rows_; ++r)
    for (std::size_t c = 0; c < b.cols_; ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

RatMatrix RatMatrix::columns(std::span<const std::size_t> which) const {
  RatMatrix out(rows_, which.size());
  for (std::size_t k = 0; k < which.size(); ++k)
    for (std::size_t r = 0; r < rows_; ++r) out(r, k) = (*this)(r, which[k]);
  return out;
}

RatMatrix RatMatrix::hcat(const RatMatrix& a, const RatMatrix& b) {
  if (a.rows_ != b.rows_) throw Error(ErrorKind::ShapeMismatch, "hcat row mismatch");
  RatMatrix out(a.rows_, a.cols_ + b.cols_);
  out.set_block(0, 0, a);
  out.set_block(0, a.cols_, b);
  return out;
}

RatMatrix RatMatrix::vcat(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.cols_) throw Error(ErrorKind::ShapeMismatch, "vcat column mismatch");
  RatMatrix out(a.rows_ + b.rows_, a.cols_);
  out.set_block(0, 0, a);
  out.set_block(a.rows_, 0, b);
  return out;
}

RatMatrix RatMatrix::direct_sum(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix out(a.rows_ + b.rows_, a.cols_ + b.cols_);
  out.set_block(0, 0, a);
  out.set_block(a.rows_, a.cols_, b);
  return out;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix sum");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorKind::ShapeMismatch, "matrix difference");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rational& s) {
  for (auto& q : data_) q *= s;
  return *this;
}

RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) { return kernels::matmul(a, b); }
RatMatrix operator*(const Rational& s, RatMatrix a) { return a *= s; }
RatMatrix kron(const RatMatrix& a, const RatMatrix& b) { return kernels::kron(a, b); }

std::ostream& operator<<(std::ostream& os, const RatMatrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << to_string(m(r, c));
  }
  return os << "] (" << m.rows() << "x" << m.cols() << ")";
}

}  // namespace tdr
