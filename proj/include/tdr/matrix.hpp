#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <vector>

#include "tdr/rational.hpp"

namespace tdr {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> data);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t rows, std::size_t cols) { return RatMatrix(rows, cols); }
  static RatMatrix column(std::span<const Rational> v);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> data() noexcept { return data_; }
  std::span<const Rational> data() const noexcept { return data_; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::vector<Rational> col(std::size_t c) const;
  RatMatrix transpose() const;
  RatMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const RatMatrix& b);
  RatMatrix columns(std::span<const std::size_t> which) const;

  /// Concatenations; shapes must agree on the shared dimension.
  static RatMatrix hcat(const RatMatrix& a, const RatMatrix& b);
  static RatMatrix vcat(const RatMatrix& a, const RatMatrix& b);
  static RatMatrix direct_sum(const RatMatrix& a, const RatMatrix& b);

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rational& s);

  friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

RatMatrix operator+(RatMatrix a, const RatMatrix& b);
RatMatrix operator-(RatMatrix a, const RatMatrix& b);
RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
RatMatrix operator*(const Rational& s, RatMatrix a);

/// Kronecker product; row index of the result is (row of a) slowest.
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

std::ostream& operator<<(std::ostream& os, const RatMatrix& m);

}  // namespace tdr
