#pragma once

#include <gmpxx.h>

#include <cctype>
#include <string>
#include <string_view>

#include "grammarcalc/errors.hpp"

namespace grammarcalc {

using Integer = mpz_class;
using Rational = mpq_class;

inline std::string to_string(const Integer& value) { return value.get_str(); }
inline std::string to_string(const Rational& value) { return value.get_str(); }

/// Parses "3", "-1/2", "+4/6" into a canonical rational.
inline Rational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  auto fail = [&](const char* what) -> Rational { throw ParseError(what, 1, pos + 1); };
  bool negative = false;
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    negative = text[pos] == '-';
    ++pos;
  }
  const std::size_t num_begin = pos;
  while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
  if (pos == num_begin) return fail("expected digits");
  Integer numerator(std::string(text.substr(num_begin, pos - num_begin)));
  Integer denominator = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    const std::size_t den_begin = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == den_begin) return fail("expected denominator digits");
    denominator = Integer(std::string(text.substr(den_begin, pos - den_begin)));
    if (denominator == 0) return fail("zero denominator");
  }
  if (pos != text.size()) return fail("trailing characters in rational");
  Rational result(negative ? Integer(-numerator) : numerator, denominator);
  result.canonicalize();
  return result;
}

/// num/den in lowest terms.
inline Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

inline Integer binomial(unsigned n, unsigned k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

inline Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("negative power of zero");
    return pow(Rational(1) / base, -exponent);
  }
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return result;
}

}  // namespace grammarcalc
