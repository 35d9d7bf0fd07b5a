#include "bihom/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace bihom {

namespace {

bool is_integer_token(const std::string& s, bool allow_sign) {
  if (s.empty()) return false;
  std::size_t i = 0;
  if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  const std::size_t slash = text.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(text, true)) {
      throw std::invalid_argument("malformed rational: '" + text + "'");
    }
    return Rational(mpz_class(text, 10));
  }
  const std::string num = text.substr(0, slash);
  const std::string den = text.substr(slash + 1);
  if (!is_integer_token(num, true) || !is_integer_token(den, false)) {
    throw std::invalid_argument("malformed rational: '" + text + "'");
  }
  mpz_class q(den, 10);
  if (q == 0) {
    throw std::invalid_argument("malformed rational (zero denominator): '" + text + "'");
  }
  Rational r(mpz_class(num, 10), q);
  r.canonicalize();
  return r;
}

std::string rational_to_string(const Rational& x) {
  return x.get_str();
}

}  // namespace bihom
