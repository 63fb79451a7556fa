#include "tdr/poly.hpp"

#include <sstream>

#include "tdr/error.hpp"

namespace tdr {

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

RatPoly RatPoly::monic() const {
  if (is_zero()) throw Error(ErrorKind::ZeroPolynomial, "monic of zero");
  RatPoly out = *this;
  const Rational lc = leading();
  for (auto& c : out.coeffs_) c /= lc;
  return out;
}

RatPoly RatPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return RatPoly(std::move(d));
}

RatPoly RatPoly::pow(unsigned e) const {
  RatPoly result = constant(1);
  RatPoly base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatMatrix RatPoly::eval(const RatMatrix& m) const {
  if (!m.is_square()) throw Error(ErrorKind::NotSquare, "polynomial at matrix");
  RatMatrix acc(m.rows(), m.cols());
  const RatMatrix id = RatMatrix::identity(m.rows());
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * m + *it * id;
  return acc;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  if (d.is_zero()) throw Error(ErrorKind::ZeroPolynomial, "division by zero polynomial");
  if (degree() < d.degree()) return {RatPoly(), *this};
  std::vector<Rational> rem = coeffs_;
  std::vector<Rational> quo(coeffs_.size() - d.coeffs_.size() + 1);
  const Rational lc = d.leading();
  for (std::size_t k = quo.size(); k-- > 0;) {
    const Rational q = rem[k + d.coeffs_.size() - 1] / lc;
    quo[k] = q;
    if (q == 0) continue;
    for (std::size_t j = 0; j < d.coeffs_.size(); ++j) rem[k + j] -= q * d.coeffs_[j];
  }
  return {RatPoly(std::move(quo)), RatPoly(std::move(rem))};
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

std::strong_ordering operator<=>(const RatPoly& a, const RatPoly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    const int s = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (s != 0) return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) c[i + j] += a.coeffs()[i] * b.coeffs()[j];
  }
  return RatPoly(std::move(c));
}

RatPoly operator*(const Rational& s, const RatPoly& a) {
  std::vector<Rational> c = a.coeffs();
  for (auto& x : c) x *= s;
  return RatPoly(std::move(c));
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x.divmod(y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.is_zero() ? x : x.monic();
}

RatMatrix companion(const RatPoly& monic) {
  if (!monic.is_monic()) throw Error(ErrorKind::InvalidDescriptor, "companion needs a monic polynomial");
  const auto k = static_cast<std::size_t>(monic.degree());
  RatMatrix c(k, k);
  for (std::size_t i = 1; i < k; ++i) c(i, i - 1) = 1;
  for (std::size_t i = 0; i < k; ++i) c(i, k - 1) = -monic.coeff(i);
  return c;
}

std::string to_string(const RatPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    Rational c = p.coeffs()[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    c = abs(c);
    first = false;
    if (i == 0) {
      os << to_string(c);
      continue;
    }
    if (c != 1) os << to_string(c) << "*";
    os << "x";
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace tdr
