#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace subspace_bounds {

/// Arbitrary-precision integer.
using BigInt = mpz_class;

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator. Every model coefficient is built in this type
/// and only converted to floating point at solver entry.
using Rational = mpq_class;

/// Order of the finite field F_q. Only q >= 2 is checked; prime-power
/// structure is never needed by the formulas.
class FieldOrder {
 public:
  explicit FieldOrder(int q);
  int value() const { return q_; }
  friend bool operator==(FieldOrder, FieldOrder) = default;

 private:
  int q_;
};

/// base^exponent for a possibly negative exponent.
Rational power(int base, int exponent);
BigInt power_int(int base, unsigned exponent);

BigInt floor(const Rational& value);
BigInt ceil(const Rational& value);

/// Nearest double (ties to even); mpq_get_d truncates, this does not.
double to_double(const Rational& value);

/// Exact rational value of a finite double.
Rational rational_from_double(double value);

/// Parses "p", "p/q" or a decimal with optional exponent exactly.
Rational parse_rational(std::string_view text);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

/// Decimal with 17 significant digits of the nearest double.
std::string to_decimal17(const Rational& value);

inline int ceil_div2(int v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }
inline int floor_div2(int v) { return v >= 0 ? v / 2 : -((-v + 1) / 2); }

}  // namespace subspace_bounds
