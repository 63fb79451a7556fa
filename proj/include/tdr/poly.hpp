#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tdr/matrix.hpp"

namespace tdr {

/// Univariate polynomial over Q, coefficients lowest degree first.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs) : RatPoly(std::vector<Rational>(coeffs)) {}

  static RatPoly constant(const Rational& c) { return RatPoly({c}); }
  static RatPoly x() { return RatPoly({Rational(0), Rational(1)}); }
  /// x - root
  static RatPoly linear(const Rational& root) { return RatPoly({-root, Rational(1)}); }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }
  bool is_monic() const { return !is_zero() && leading() == 1; }

  RatPoly monic() const;
  RatPoly derivative() const;
  RatPoly pow(unsigned e) const;
  Rational eval(const Rational& x) const;
  RatMatrix eval(const RatMatrix& m) const;

  /// Quotient and remainder; throws ZeroPolynomial on a zero divisor.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;

  RatPoly& operator+=(const RatPoly& o);
  RatPoly& operator-=(const RatPoly& o);

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }
  /// Degree first, then coefficients from the top down.
  friend std::strong_ordering operator<=>(const RatPoly& a, const RatPoly& b);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

RatPoly operator+(RatPoly a, const RatPoly& b);
RatPoly operator-(RatPoly a, const RatPoly& b);
RatPoly operator*(const RatPoly& a, const RatPoly& b);
RatPoly operator*(const Rational& s, const RatPoly& a);

/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Companion matrix of a monic polynomial: ones on the subdiagonal, last
/// column -c_0 .. -c_{k-1}.
RatMatrix companion(const RatPoly& monic);

/// Human-readable form such as "x^2 - 2*x + 1/2".
std::string to_string(const RatPoly& p);

}  // namespace tdr
