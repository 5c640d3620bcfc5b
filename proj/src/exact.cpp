#include "subspace_bounds/exact.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace subspace_bounds {

FieldOrder::FieldOrder(int q) : q_(q) {
  if (q < 2) throw std::invalid_argument("field order q must be >= 2, got " + std::to_string(q));
}

BigInt power_int(int base, unsigned exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), static_cast<unsigned long>(std::abs(base)), exponent);
  if (base < 0 && (exponent % 2 == 1)) result = -result;
  return result;
}

Rational power(int base, int exponent) {
  if (exponent >= 0) return Rational(power_int(base, static_cast<unsigned>(exponent)));
  if (base == 0) throw std::domain_error("0 raised to a negative power");
  Rational r(BigInt(1), power_int(base, static_cast<unsigned>(-exponent)));
  r.canonicalize();
  return r;
}

BigInt floor(const Rational& value) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

BigInt ceil(const Rational& value) {
  BigInt out;
  mpz_cdiv_q(out.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return out;
}

Rational rational_from_double(double value) {
  if (!std::isfinite(value)) throw std::domain_error("non-finite double has no rational value");
  Rational r;
  mpq_set_d(r.get_mpq_t(), value);
  return r;
}

double to_double(const Rational& value) {
  if (value == 0) return 0.0;
  const double truncated = mpq_get_d(value.get_mpq_t());
  const double away = std::nextafter(truncated, value > 0 ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(away)) return truncated;
  Rational err_t = abs(value - rational_from_double(truncated));
  Rational err_a = abs(value - rational_from_double(away));
  if (err_a < err_t) return away;
  if (err_t < err_a) return truncated;
  // tie: pick the even mantissa
  int exp_t = 0;
  const double m = std::frexp(truncated, &exp_t);
  const auto bits = static_cast<long long>(std::ldexp(std::fabs(m), 53));
  return (bits % 2 == 0) ? truncated : away;
}

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  std::size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw std::invalid_argument("empty number");

  if (s.find('/') != std::string::npos) {
    if (s[0] == '+') s.erase(0, 1);
    if (s.empty() || s[0] == '+' || s.find_first_of("+", 0) != std::string::npos)
      throw std::invalid_argument("bad rational: " + std::string(text));
    Rational r;
    if (r.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (r.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    r.canonicalize();
    return r;
  }

  // decimal: [sign] digits [. digits] [e|E [sign] digits]
  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  int frac_digits = 0;
  bool seen_point = false;
  bool any_digit = false;
  for (; pos < s.size(); ++pos) {
    const char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      any_digit = true;
      if (seen_point) ++frac_digits;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!any_digit) throw std::invalid_argument("bad number: " + s);
  long exponent = 0;
  if (pos < s.size()) {
    if (s[pos] != 'e' && s[pos] != 'E') throw std::invalid_argument("bad number: " + s);
    ++pos;
    std::size_t used = 0;
    try {
      exponent = std::stol(s.substr(pos), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent: " + s);
    }
    if (pos + used != s.size()) throw std::invalid_argument("bad number: " + s);
  }
  BigInt mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  const long scale = exponent - frac_digits;
  Rational r(mantissa);
  if (scale > 0) r *= Rational(power_int(10, static_cast<unsigned>(scale)));
  if (scale < 0) r /= Rational(power_int(10, static_cast<unsigned>(-scale)));
  r.canonicalize();
  return r;
}

std::string to_string(const BigInt& value) { return value.get_str(10); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str(10);
  return value.get_num().get_str(10) + "/" + value.get_den().get_str(10);
}

std::string to_decimal17(const Rational& value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", to_double(value));
  return buf;
}

}  // namespace subspace_bounds
