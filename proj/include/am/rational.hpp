#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace am {

// All probabilities and pointer ratios in this library are exact rationals.
// Decimal strings are derived renderings only, never fed back into arithmetic.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(BigInt base, unsigned exp) {
  BigInt result = 1;
  while (exp > 0) {
    if (exp & 1u) result *= base;
    base *= base;
    exp >>= 1u;
  }
  return result;
}

namespace detail {

inline BigInt pow10(int k) {
  return ipow(BigInt(10), static_cast<unsigned>(k));
}

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// cpp_int's string constructor reads a leading 0 as an octal prefix; strip it
inline BigInt from_digits(std::string_view s) {
  while (s.size() > 1 && s.front() == '0') s.remove_prefix(1);
  return BigInt{std::string(s)};
}

}  // namespace detail

// Accepts "3", "-4/13", "0.35". No exponent notation.
inline Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);

  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  const auto fail = [&] {
    throw std::invalid_argument("not a rational: '" + std::string(text) + "'");
  };
  if (s.empty()) fail();

  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) fail();
    BigInt d = detail::from_digits(den);
    if (d == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
    value = Rational(detail::from_digits(num), d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail();
    if (!whole.empty() && !detail::all_digits(whole)) fail();
    if (!frac.empty() && !detail::all_digits(frac)) fail();
    BigInt scaled = detail::from_digits(std::string(whole) + std::string(frac));
    value = Rational(scaled, detail::pow10(static_cast<int>(frac.size())));
  } else {
    if (!detail::all_digits(s)) fail();
    value = Rational(detail::from_digits(s));
  }
  return negative ? Rational(-value) : value;
}

// Round-half-even decimal rendering at the given number of significant
// digits; trailing zeros after the point are trimmed.
inline std::string to_decimal_string(const Rational& value, int significant_digits = 12) {
  if (significant_digits < 1) throw std::invalid_argument("significant_digits must be >= 1");
  if (value == 0) return "0";

  BigInt n = numerator(value);
  BigInt d = denominator(value);
  const bool negative = n < 0;
  if (negative) n = -n;

  // decimal exponent e with 10^e <= n/d < 10^(e+1)
  const auto at_least_pow = [&](int k) {
    return k >= 0 ? n >= d * detail::pow10(k) : n * detail::pow10(-k) >= d;
  };
  int e = static_cast<int>(n.str().size()) - static_cast<int>(d.str().size());
  while (!at_least_pow(e)) --e;
  while (at_least_pow(e + 1)) ++e;

  // integer significand with `significant_digits` digits, rounded half-even
  const int shift = significant_digits - 1 - e;
  BigInt num = n;
  BigInt den = d;
  if (shift >= 0)
    num *= detail::pow10(shift);
  else
    den *= detail::pow10(-shift);
  BigInt q = num / den;
  const BigInt twice_rem = (num % den) * 2;
  if (twice_rem > den || (twice_rem == den && q % 2 == 1)) ++q;

  std::string digits = q.str();
  if (static_cast<int>(digits.size()) > significant_digits) {
    digits.pop_back();  // rounding carried into a new leading digit
    ++e;
  }

  std::string out;
  if (e >= significant_digits - 1) {
    out = digits + std::string(e - (significant_digits - 1), '0');
  } else if (e >= 0) {
    out = digits.substr(0, e + 1) + "." + digits.substr(e + 1);
  } else {
    out = "0." + std::string(-e - 1, '0') + digits;
  }
  if (out.find('.') != std::string::npos) {
    while (out.back() == '0') out.pop_back();
    if (out.back() == '.') out.pop_back();
  }
  return negative ? "-" + out : out;
}

inline std::string to_fraction_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) out += "/" + denominator(value).str();
  return out;
}

}  // namespace am
