#include "tdr/rational.hpp"

#include <cctype>

#include "tdr/error.hpp"

namespace tdr {

Rational make_rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator");
  Rational q;
  mpz_set_si(q.get_num_mpz_t(), num);
  mpz_set_si(q.get_den_mpz_t(), den);
  q.canonicalize();
  return q;
}

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  if (!is_integer_literal(num, true)) {
    throw Error(ErrorKind::ParseError, "bad rational \"" + std::string(text) + "\"");
  }
  Rational q;
  q.get_num() = parse_integer(num);
  if (slash == std::string_view::npos) {
    q.get_den() = 1;
    return q;
  }
  std::string_view den = text.substr(slash + 1);
  if (!is_integer_literal(den, false)) {
    throw Error(ErrorKind::ParseError, "bad rational \"" + std::string(text) + "\"");
  }
  q.get_den() = parse_integer(den);
  if (q.get_den() == 0) {
    throw Error(ErrorKind::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  }
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace tdr
