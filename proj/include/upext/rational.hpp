#ifndef UPEXT_RATIONAL_HPP
#define UPEXT_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace upext {

/// Exact rational number (GMP backed, always canonical).
using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }
inline double to_double(double v) { return v; }

/// Canonical "p/q" form; integers are printed without a denominator.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "p/q" or a plain decimal such as "-0.3" or "2.5e-3" into an
/// exact rational (decimals are read as the decimal number they spell, not
/// as the nearest double).
inline Rational parse_rational(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty rational literal");

  if (s.find_first_of(".eE") == std::string::npos) {
    Rational q;
    if (s.front() == '+') s.erase(0, 1);
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    q.canonicalize();
    return q;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
  std::string digits;
  long exponent = 0;
  bool seen_point = false, seen_digit = false;
  for (; pos < s.size() && s[pos] != 'e' && s[pos] != 'E'; ++pos) {
    char c = s[pos];
    if (c == '.') {
      if (seen_point) throw std::invalid_argument("bad decimal literal '" + std::string(text) + "'");
      seen_point = true;
    } else if (c >= '0' && c <= '9') {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --exponent;
    } else {
      throw std::invalid_argument("bad decimal literal '" + std::string(text) + "'");
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad decimal literal '" + std::string(text) + "'");
  if (pos < s.size()) {
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(s.substr(pos + 1), &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
    }
    if (used != s.size() - pos - 1) throw std::invalid_argument("bad exponent in '" + std::string(text) + "'");
    exponent += e;
  }
  mpz_class num(digits, 10);
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
  Rational q = exponent < 0 ? Rational(num, scale) : Rational(num * scale);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace upext

#endif  // UPEXT_RATIONAL_HPP
