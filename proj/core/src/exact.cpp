#include "dobinski/exact.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace dobinski {

Rational to_rational(double value) {
  if (!std::isfinite(value)) {
    throw std::domain_error("to_rational: non-finite value");
  }
  if (value == 0.0) return Rational(0);
  int exponent = 0;
  const double mantissa = std::frexp(value, &exponent);
  // 53 mantissa bits are exactly representable in an int64.
  const auto scaled = static_cast<long long>(std::ldexp(mantissa, 53));
  exponent -= 53;
  Rational result{Integer(scaled)};
  if (exponent > 0) {
    result *= Rational(Integer(1) << exponent);
  } else if (exponent < 0) {
    result /= Rational(Integer(1) << -exponent);
  }
  return result;
}

double to_double(const Rational& value) {
  mpfr_t tmp;
  mpfr_init2(tmp, 53);
  mpfr_set_q(tmp, value.backend().data(), MPFR_RNDN);
  const double out = mpfr_get_d(tmp, MPFR_RNDN);
  mpfr_clear(tmp);
  return out;
}

Integer factorial(unsigned n) {
  Integer result(1);
  for (unsigned i = 2; i <= n; ++i) result *= i;
  return result;
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer result(1);
  for (unsigned i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("malformed integer '" + std::string(s) + "'");
  }
  const auto first = s.find_first_not_of('0');
  Integer v{first == std::string_view::npos ? std::string("0") : std::string(s.substr(first))};
  return negative ? Integer(-v) : v;
}

// [sign] digits [. digits] [e [sign] digits]
Rational parse_decimal(std::string_view s) {
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  int exponent = 0;
  if (const auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    exponent = static_cast<int>(parse_integer(s.substr(e + 1)).convert_to<long>());
    s = s.substr(0, e);
  }
  std::string digits;
  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    const auto whole = s.substr(0, dot);
    const auto frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty())) {
      throw std::invalid_argument("malformed number");
    }
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<int>(frac.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number");
    digits = std::string(s);
  }
  const auto first = digits.find_first_not_of('0');
  digits = first == std::string::npos ? "0" : digits.substr(first);  // a leading 0 would select octal
  Rational r{Integer(digits)};
  const Integer scale = ipow(Integer(10), static_cast<unsigned>(std::abs(exponent)));
  if (exponent >= 0) {
    r *= Rational(scale);
  } else {
    r /= Rational(scale);
  }
  return negative ? Rational(-r) : r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  if (s.empty()) throw std::invalid_argument("empty rational");
  try {
    if (const auto slash = s.find('/'); slash != std::string_view::npos) {
      const Integer num = parse_integer(trim(s.substr(0, slash)));
      const Integer den = parse_integer(trim(s.substr(slash + 1)));
      if (den == 0) throw std::invalid_argument("zero denominator");
      return Rational(num, den);
    }
    return parse_decimal(s);
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("cannot parse rational '" + std::string(s) + "'");
  }
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto comma = text.find(',', start);
    const auto end = comma == std::string_view::npos ? text.size() : comma;
    out.push_back(parse_rational(text.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string to_string(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

bool is_canonical(const Rational& value) {
  const Integer num = boost::multiprecision::numerator(value);
  const Integer den = boost::multiprecision::denominator(value);
  return den > 0 && boost::multiprecision::gcd(num, den) == 1;
}

}  // namespace dobinski
