#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "grammarcalc/errors.hpp"
#include "grammarcalc/polynomial.hpp"

namespace grammarcalc {

inline Symbol default_series_variable() { return Symbol("t"); }

/// Power series c_0 + c_1 t + ... + c_N t^N with Laurent-polynomial
/// coefficients. Coefficients are ordinary (not divided by n!); use
/// `egf_coefficient` for the exponential convention.
class TruncatedSeries {
 public:
  TruncatedSeries(Symbol variable, std::vector<Polynomial> coeffs)
      : variable_(variable), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw DomainError("a truncated series needs at least one coefficient");
    for (const auto& c : coeffs_)
      if (c.contains(variable_))
        throw DomainError("series variable '" + variable_.name() + "' appears inside a coefficient");
  }

  static TruncatedSeries constant(const Polynomial& c, unsigned order, Symbol variable = default_series_variable()) {
    std::vector<Polynomial> coeffs(order + 1);
    coeffs[0] = c;
    return {variable, std::move(coeffs)};
  }

  Symbol variable() const noexcept { return variable_; }
  unsigned order() const noexcept { return static_cast<unsigned>(coeffs_.size() - 1); }
  const std::vector<Polynomial>& coefficients() const noexcept { return coeffs_; }
  const Polynomial& operator[](unsigned n) const { return coeffs_.at(n); }

  /// n! times the coefficient of t^n.
  Polynomial egf_coefficient(unsigned n) const { return coeffs_.at(n) * Rational(factorial(n)); }

  TruncatedSeries truncated(unsigned order) const {
    if (order > this->order()) throw RangeError("cannot extend a truncated series");
    return {variable_, {coeffs_.begin(), coeffs_.begin() + order + 1}};
  }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Polynomial& c) { return c.is_zero(); });
  }

  std::string to_string() const {
    std::string out;
    for (unsigned n = 0; n <= order(); ++n) {
      if (coeffs_[n].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += '(' + coeffs_[n].to_string() + ')';
      if (n > 0) out += '*' + variable_.name() + (n > 1 ? '^' + std::to_string(n) : std::string{});
    }
    out += " + O(" + variable_.name() + '^' + std::to_string(order() + 1) + ')';
    return out;
  }

  friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

 private:
  Symbol variable_;
  std::vector<Polynomial> coeffs_;
};

namespace detail {
inline void require_same_variable(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.variable() != b.variable())
    throw DomainError("mismatched series variables '" + a.variable().name() + "' and '" + b.variable().name() + "'");
}
}  // namespace detail

inline TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::require_same_variable(a, b);
  unsigned order = std::min(a.order(), b.order());
  std::vector<Polynomial> out(order + 1);
  for (unsigned n = 0; n <= order; ++n) out[n] = a[n] + b[n];
  return {a.variable(), std::move(out)};
}

inline TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::require_same_variable(a, b);
  unsigned order = std::min(a.order(), b.order());
  std::vector<Polynomial> out(order + 1);
  for (unsigned n = 0; n <= order; ++n) out[n] = a[n] - b[n];
  return {a.variable(), std::move(out)};
}

inline TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  detail::require_same_variable(a, b);
  unsigned order = std::min(a.order(), b.order());
  std::vector<Polynomial> out(order + 1);
  for (unsigned n = 0; n <= order; ++n) {
    std::vector<Polynomial::Term> acc;
    for (unsigned k = 0; k <= n; ++k) {
      if (a[k].is_zero() || b[n - k].is_zero()) continue;
      for (const auto& [ma, ca] : a[k].terms())
        for (const auto& [mb, cb] : b[n - k].terms()) acc.emplace_back(ma * mb, ca * cb);
    }
    out[n] = Polynomial::from_terms(std::move(acc));
  }
  return {a.variable(), std::move(out)};
}

inline TruncatedSeries operator*(const Polynomial& c, const TruncatedSeries& s) {
  std::vector<Polynomial> out(s.coefficients());
  for (auto& x : out) x = c * x;
  return {s.variable(), std::move(out)};
}

/// e^{a t} = sum a^n t^n / n!, truncated at `order`.
inline TruncatedSeries series_exp(const Polynomial& a, unsigned order, Symbol variable = default_series_variable()) {
  if (a.contains(variable)) throw DomainError("exponent contains the series variable");
  std::vector<Polynomial> out(order + 1);
  out[0] = 1;
  for (unsigned n = 1; n <= order; ++n) out[n] = out[n - 1] * a * ratio(1, n);
  return {variable, std::move(out)};
}

/// The series r with s * r = numerator through the order of s. Each
/// coefficient comes from an exact division by c_0 of s.
inline TruncatedSeries series_reciprocal(const TruncatedSeries& s, const Polynomial& numerator) {
  if (s[0].is_zero()) throw DomainError("series with zero constant term has no reciprocal");
  if (numerator.contains(s.variable())) throw DomainError("numerator contains the series variable");
  std::vector<Polynomial> r(s.order() + 1);
  for (unsigned n = 0; n <= s.order(); ++n) {
    std::vector<Polynomial::Term> acc;
    if (n == 0) acc = numerator.terms();
    for (unsigned k = 1; k <= n; ++k) {
      if (s[k].is_zero() || r[n - k].is_zero()) continue;
      for (const auto& [ma, ca] : s[k].terms())
        for (const auto& [mb, cb] : r[n - k].terms()) acc.emplace_back(ma * mb, -(ca * cb));
    }
    Polynomial known = Polynomial::from_terms(std::move(acc));
    auto q = divide_exact(known, s[0]);
    if (!q)
      throw InexactDivisionError("EGF not polynomial-coefficient: order " + std::to_string(n) + " leaves a remainder when dividing " +
                                 known.to_string() + " by " + s[0].to_string());
    r[n] = std::move(*q);
  }
  return {s.variable(), std::move(r)};
}

/// Partial derivative of a series. With respect to the series variable the
/// result loses one order; with respect to any other symbol each coefficient
/// is differentiated.
inline TruncatedSeries series_partial(const TruncatedSeries& s, Symbol wrt) {
  if (wrt == s.variable()) {
    if (s.order() == 0) throw RangeError("cannot differentiate an order-0 series in its variable");
    std::vector<Polynomial> out(s.order());
    for (unsigned n = 0; n < s.order(); ++n) out[n] = s[n + 1] * Rational(n + 1);
    return {s.variable(), std::move(out)};
  }
  std::vector<Polynomial> out(s.order() + 1);
  for (unsigned n = 0; n <= s.order(); ++n) out[n] = partial_derivative(s[n], wrt);
  return {s.variable(), std::move(out)};
}

}  // namespace grammarcalc
