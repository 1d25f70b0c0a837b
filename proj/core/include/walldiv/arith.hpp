#pragma once

// Exact integer and rational arithmetic used throughout walldiv.
// Nothing in this library touches floating point.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace walldiv {

using Integer = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::cpp_rational_backend,
                                               boost::multiprecision::et_off>;

/// A mathematical precondition failed (negative moduli dimension, zero class, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The caller broke an interface contract (dimension mismatch, dependent basis, ...).
class ContractViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

struct ExtendedGcd {
  Integer g;  // always >= 0
  Integer x;
  Integer y;  // a*x + b*y == g
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
/// Least nonnegative residue of a modulo |m|.
Integer mod_floor(const Integer& a, const Integer& m);

/// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);

Integer floor(const Rational& r);
Integer ceil(const Rational& r);
Integer numerator_of(const Rational& r);
Integer denominator_of(const Rational& r);
bool is_integral(const Rational& r);
/// Throws ContractViolation when r is not an integer.
Integer to_integer(const Rational& r);

/// Always "num/den" with den >= 1, e.g. "-5/2", "3/1".
std::string to_fraction_string(const Rational& r);
/// Accepts "num/den" or a bare integer; throws ContractViolation on malformed text.
Rational parse_rational(std::string_view text);

std::int64_t to_int64(const Integer& n);

}  // namespace walldiv
