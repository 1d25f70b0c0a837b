#include "walldiv/arith.hpp"

#include <boost/multiprecision/integer.hpp>

#include <cctype>
#include <limits>

namespace walldiv {

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a);
  Integer y = abs(b);
  while (y != 0) {
    Integer t = x % y;
    x = y;
    y = t;
  }
  return x;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("floor_div: division by zero");
  Integer q = a / b;  // truncates toward zero
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  return -floor_div(-a, b);
}

Integer mod_floor(const Integer& a, const Integer& m) {
  if (m == 0) throw DomainError("mod_floor: zero modulus");
  Integer am = abs(m);
  Integer r = a % am;
  if (r < 0) r += am;
  return r;
}

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

bool is_square(const Integer& n) {
  if (n < 0) return false;
  Integer s = isqrt(n);
  return s * s == n;
}

Integer numerator_of(const Rational& r) { return Integer(boost::multiprecision::numerator(r)); }
Integer denominator_of(const Rational& r) { return Integer(boost::multiprecision::denominator(r)); }

Integer floor(const Rational& r) { return floor_div(numerator_of(r), denominator_of(r)); }
Integer ceil(const Rational& r) { return ceil_div(numerator_of(r), denominator_of(r)); }

bool is_integral(const Rational& r) { return denominator_of(r) == 1; }

Integer to_integer(const Rational& r) {
  if (!is_integral(r)) throw ContractViolation("expected an integer, got " + to_fraction_string(r));
  return numerator_of(r);
}

std::string to_fraction_string(const Rational& r) {
  return numerator_of(r).str() + "/" + denominator_of(r).str();
}

namespace {

Integer parse_integer(std::string_view text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ContractViolation("malformed integer '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ContractViolation("malformed integer '" + std::string(text) + "'");
    }
  }
  std::string digits(text.substr(text[0] == '+' ? 1 : 0));
  return Integer(digits);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  Integer num = parse_integer(text.substr(0, slash));
  Integer den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw ContractViolation("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::int64_t to_int64(const Integer& n) {
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min()) {
    throw DomainError("integer " + n.str() + " does not fit in 64 bits");
  }
  return n.convert_to<std::int64_t>();
}

}  // namespace walldiv
