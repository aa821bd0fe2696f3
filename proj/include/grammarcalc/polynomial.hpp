#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grammarcalc/errors.hpp"
#include "grammarcalc/monomial.hpp"
#include "grammarcalc/rational.hpp"
#include "grammarcalc/symbol.hpp"

namespace grammarcalc {

/// Sparse multivariate Laurent polynomial with exact rational coefficients.
///
/// Terms are stored sorted by the internal monomial order with no zero
/// coefficients; the zero polynomial has no terms. Values are immutable once
/// built, so sharing them across threads is safe.
class Polynomial {
 public:
  using Term = std::pair<Monomial, Rational>;

  Polynomial() = default;
  Polynomial(int c) : Polynomial(Rational(c)) {}
  Polynomial(const Rational& c) {
    if (c != 0) terms_.emplace_back(Monomial{}, c);
  }
  Polynomial(Symbol s) { terms_.emplace_back(Monomial::variable(s), Rational(1)); }
  Polynomial(Monomial m, const Rational& c = 1) {
    if (c != 0) terms_.emplace_back(std::move(m), c);
  }

  /// Builds a polynomial from arbitrary terms, combining like monomials.
  static Polynomial from_terms(std::vector<Term> terms) {
    Polynomial p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  static Polynomial parse(std::string_view text);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.first < key; });
    if (it != terms_.end() && it->first == m) return it->second;
    return 0;
  }

  /// The value of a constant polynomial, or nothing if any symbol occurs.
  std::optional<Rational> constant_value() const {
    if (terms_.empty()) return Rational(0);
    if (terms_.size() == 1 && terms_.front().first.is_one()) return terms_.front().second;
    return std::nullopt;
  }

  bool is_single_term() const noexcept { return terms_.size() == 1; }

  bool contains(Symbol s) const {
    return std::any_of(terms_.begin(), terms_.end(), [s](const Term& t) { return t.first.contains(s); });
  }

  std::vector<Symbol> symbols() const {
    std::set<Symbol> seen;
    for (const auto& [m, c] : terms_)
      for (const auto& [s, e] : m.entries()) seen.insert(s);
    return {seen.begin(), seen.end()};
  }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& t : p.terms_) t.second = -t.second;
    return p;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) { return merge(a, b, false); }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return merge(a, b, true); }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (b.terms_.size() == 1 && b.terms_.front().first.is_one()) return a * b.terms_.front().second;
    if (a.terms_.size() == 1 && a.terms_.front().first.is_one()) return b * a.terms_.front().second;
    std::vector<Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) products.emplace_back(ma * mb, ca * cb);
    return from_terms(std::move(products));
  }

  friend Polynomial operator*(const Polynomial& a, const Rational& c) {
    if (c == 0) return {};
    Polynomial p = a;
    for (auto& t : p.terms_) t.second *= c;
    return p;
  }
  friend Polynomial operator*(const Rational& c, const Polynomial& a) { return a * c; }
  friend Polynomial operator*(const Polynomial& a, int c) { return a * Rational(c); }
  friend Polynomial operator*(int c, const Polynomial& a) { return a * Rational(c); }

  Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
  Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
  Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

  /// Multiplies every term by the monomial `m` (a unit in the Laurent ring).
  Polynomial shifted(const Monomial& m) const {
    Polynomial p;
    p.terms_.reserve(terms_.size());
    for (const auto& [tm, c] : terms_) p.terms_.emplace_back(tm * m, c);
    std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    return p;
  }

  /// Nonnegative powers only; negative powers exist just for single terms,
  /// see `invert_term`.
  Polynomial pow(unsigned k) const {
    Polynomial result = 1;
    Polynomial base = *this;
    while (k > 0) {
      if (k & 1u) result *= base;
      k >>= 1u;
      if (k > 0) base *= base;
    }
    return result;
  }

  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

 private:
  void normalize() {
    std::sort(terms_.begin(), terms_.end(), [](const Term& x, const Term& y) { return x.first < y.first; });
    auto out = terms_.begin();
    for (auto it = terms_.begin(); it != terms_.end();) {
      Term acc = std::move(*it++);
      while (it != terms_.end() && it->first == acc.first) acc.second += (it++)->second;
      if (acc.second != 0) *out++ = std::move(acc);
    }
    terms_.erase(out, terms_.end());
  }

  static Polynomial merge(const Polynomial& a, const Polynomial& b, bool subtract) {
    Polynomial p;
    p.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto i = a.terms_.begin();
    auto j = b.terms_.begin();
    while (i != a.terms_.end() || j != b.terms_.end()) {
      if (j == b.terms_.end() || (i != a.terms_.end() && i->first < j->first)) {
        p.terms_.push_back(*i++);
      } else if (i == a.terms_.end() || j->first < i->first) {
        p.terms_.emplace_back(j->first, subtract ? Rational(-j->second) : j->second);
        ++j;
      } else {
        Rational c = subtract ? Rational(i->second - j->second) : Rational(i->second + j->second);
        if (c != 0) p.terms_.emplace_back(i->first, std::move(c));
        ++i;
        ++j;
      }
    }
    return p;
  }

  std::vector<Term> terms_;
};

using Bindings = std::map<Symbol, Polynomial>;

/// (c*m)^-1 for a single nonzero term.
inline Polynomial invert_term(const Polynomial& p) {
  if (!p.is_single_term()) throw DomainError("only a single nonzero term is invertible");
  const auto& [m, c] = p.terms().front();
  return Polynomial(m.inverse(), Rational(1) / c);
}

/// Integer power that accepts negative exponents for invertible terms.
inline Polynomial laurent_pow(const Polynomial& p, Exponent e) {
  if (e >= 0) return p.pow(static_cast<unsigned>(e));
  if (p.is_zero()) throw DomainError("negative power of zero in substitution");
  if (!p.is_single_term()) throw DomainError("negative power of a non-invertible polynomial in substitution");
  return invert_term(p).pow(static_cast<unsigned>(-static_cast<long long>(e)));
}

/// Simultaneous substitution of the bound symbols.
inline Polynomial substitute(const Polynomial& p, const Bindings& bindings) {
  if (bindings.empty()) return p;
  std::map<std::pair<Symbol, Exponent>, Polynomial> powers;
  auto power_of = [&](Symbol s, Exponent e, const Polynomial& value) -> const Polynomial& {
    auto key = std::make_pair(s, e);
    auto it = powers.find(key);
    if (it == powers.end()) it = powers.emplace(key, laurent_pow(value, e)).first;
    return it->second;
  };
  std::vector<Polynomial::Term> out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<Monomial::Entry> kept;
    Polynomial factor = c;
    for (const auto& [s, e] : m.entries()) {
      auto b = bindings.find(s);
      if (b == bindings.end()) {
        kept.emplace_back(s, e);
      } else {
        factor = factor * power_of(s, e, b->second);
        if (factor.is_zero()) break;
      }
    }
    if (factor.is_zero()) continue;
    Monomial rest = Monomial::from_entries(kept);
    for (const auto& [fm, fc] : factor.terms()) out.emplace_back(fm * rest, fc);
  }
  return Polynomial::from_terms(std::move(out));
}

inline Polynomial partial_derivative(const Polynomial& p, Symbol v) {
  std::vector<Polynomial::Term> out;
  for (const auto& [m, c] : p.terms()) {
    Exponent e = m.exponent(v);
    if (e == 0) continue;
    out.emplace_back(m.with_exponent(v, checked_add(e, -1)), c * e);
  }
  return Polynomial::from_terms(std::move(out));
}

/// Exact quotient a / b in the Laurent ring, or nothing if b does not divide a.
inline std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("division by the zero polynomial");
  if (a.is_zero()) return Polynomial{};
  if (b.is_single_term()) return a * invert_term(b);

  // Strip monomial content so both sides are ordinary polynomials; monomials
  // are units, so divisibility is unchanged.
  auto content = [](const Polynomial& p) {
    Monomial floor = p.terms().front().first;
    for (const auto& [m, c] : p.terms()) floor = monomial_floor(floor, m);
    return floor;
  };
  const Monomial ca = content(a);
  const Monomial cb = content(b);
  Polynomial remainder = a.shifted(ca.inverse());
  const Polynomial divisor = b.shifted(cb.inverse());

  auto leading = [](const Polynomial& p) -> const Polynomial::Term& {
    const Polynomial::Term* best = &p.terms().front();
    for (const auto& t : p.terms())
      if (lex_greater(t.first, best->first)) best = &t;
    return *best;
  };
  const auto& [lead_m, lead_c] = leading(divisor);
  std::vector<Polynomial::Term> quotient;
  while (!remainder.is_zero()) {
    const auto& [rm, rc] = leading(remainder);
    if (!divides(lead_m, rm)) return std::nullopt;
    Polynomial step(rm * lead_m.inverse(), rc / lead_c);
    quotient.push_back(step.terms().front());
    remainder -= step * divisor;
  }
  return Polynomial::from_terms(std::move(quotient)).shifted(ca * cb.inverse());
}

// ---------------------------------------------------------------------------
// Text format
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Monomial::Entry> alphabetical_entries(const Monomial& m) {
  std::vector<Monomial::Entry> entries(m.entries().begin(), m.entries().end());
  std::sort(entries.begin(), entries.end(),
            [](const Monomial::Entry& a, const Monomial::Entry& b) { return a.first.name() < b.first.name(); });
  return entries;
}

// Graded order: total degree ascending, then lexicographic descending over
// alphabetically ordered symbols.
inline bool canonical_before(const Monomial& a, const Monomial& b) {
  long long da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  auto ea = alphabetical_entries(a);
  auto eb = alphabetical_entries(b);
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first.name() < eb[j].first.name())) return ea[i].second > 0;
    if (i == ea.size() || eb[j].first.name() < ea[i].first.name()) return eb[j].second < 0;
    if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second;
    ++i;
    ++j;
  }
  return false;
}

inline std::string monomial_text(const Monomial& m) {
  std::string out;
  for (const auto& [s, e] : alphabetical_entries(m)) {
    if (!out.empty()) out += '*';
    out += s.name();
    if (e != 1) out += '^' + std::to_string(e);
  }
  return out;
}

}  // namespace detail

/// Terms of `p` in canonical display order.
inline std::vector<Polynomial::Term> canonical_terms(const Polynomial& p) {
  std::vector<Polynomial::Term> terms = p.terms();
  std::stable_sort(terms.begin(), terms.end(), [](const Polynomial::Term& a, const Polynomial::Term& b) {
    return detail::canonical_before(a.first, b.first);
  });
  return terms;
}

inline std::string monomial_to_string(const Monomial& m) { return m.is_one() ? "1" : detail::monomial_text(m); }

inline std::string Polynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : canonical_terms(*this)) {
    const bool negative = c < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    Rational magnitude = abs(c);
    if (m.is_one()) {
      out += grammarcalc::to_string(magnitude);
    } else {
      if (magnitude != 1) out += grammarcalc::to_string(magnitude) + '*';
      out += detail::monomial_text(m);
    }
  }
  return out;
}

namespace detail {

// Character cursor with line/column tracking shared by the polynomial and
// grammar parsers.
class TextCursor {
 public:
  explicit TextCursor(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  char get() {
    char c = text_[pos_++];
    if (c == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    return c;
  }
  bool consume(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    for (std::size_t i = 0; i < token.size(); ++i) get();
    return true;
  }

  // Skips blanks and comments; newlines too unless `newline_is_token`.
  void skip_space(bool newline_is_token) {
    while (!at_end()) {
      char c = peek();
      if (c == '#') {
        while (!at_end() && peek() != '\n') get();
      } else if (c == '\n' && newline_is_token) {
        return;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        get();
      } else {
        return;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, line_, column_); }

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

inline std::string read_digits(TextCursor& in) {
  std::string digits;
  while (std::isdigit(static_cast<unsigned char>(in.peek()))) digits += in.get();
  return digits;
}

inline Polynomial parse_factor(TextCursor& in, bool newline_is_token) {
  char c = in.peek();
  if (std::isdigit(static_cast<unsigned char>(c))) {
    std::string text = read_digits(in);
    if (in.peek() == '/') {
      in.get();
      std::string den = read_digits(in);
      if (den.empty()) in.fail("expected denominator");
      text += '/' + den;
    }
    try {
      return parse_rational(text);
    } catch (const ParseError&) {
      in.fail("invalid rational '" + text + "'");
    }
  }
  if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
    std::string name;
    while (std::isalnum(static_cast<unsigned char>(in.peek())) || in.peek() == '_') name += in.get();
    Symbol s(name);
    in.skip_space(newline_is_token);
    if (in.peek() != '^') return Polynomial(s);
    in.get();
    in.skip_space(newline_is_token);
    bool negative = false;
    if (in.peek() == '-' || in.peek() == '+') negative = in.get() == '-';
    std::string digits = read_digits(in);
    if (digits.empty()) in.fail("expected integer exponent");
    long long value = 0;
    for (char d : digits) {
      value = value * 10 + (d - '0');
      if (value > INT32_MAX) throw ExponentOverflowError("exponent out of range in '" + name + "^" + digits + "'");
    }
    return Polynomial(Monomial::variable(s, checked_exponent(negative ? -value : value)));
  }
  if (in.at_end() || (c == '\n' && newline_is_token)) in.fail("unexpected end of polynomial");
  in.fail(std::string("unexpected character '") + c + "'");
}

inline Polynomial parse_term(TextCursor& in, bool newline_is_token) {
  in.skip_space(newline_is_token);
  Polynomial term = parse_factor(in, newline_is_token);
  for (;;) {
    in.skip_space(newline_is_token);
    if (in.peek() != '*') return term;
    in.get();
    in.skip_space(newline_is_token);
    term = term * parse_factor(in, newline_is_token);
  }
}

// Parses a polynomial and stops at the first character that cannot continue
// it; the caller decides whether that is a valid terminator.
inline Polynomial parse_polynomial(TextCursor& in, bool newline_is_token) {
  in.skip_space(newline_is_token);
  bool negative = false;
  if (in.peek() == '-' || in.peek() == '+') negative = in.get() == '-';
  Polynomial sum = parse_term(in, newline_is_token);
  if (negative) sum = -sum;
  for (;;) {
    in.skip_space(newline_is_token);
    char c = in.peek();
    if (c != '+' && c != '-') return sum;
    in.get();
    Polynomial term = parse_term(in, newline_is_token);
    sum = c == '+' ? sum + term : sum - term;
  }
}

}  // namespace detail

inline Polynomial Polynomial::parse(std::string_view text) {
  detail::TextCursor in(text);
  Polynomial p = detail::parse_polynomial(in, false);
  in.skip_space(false);
  if (!in.at_end()) in.fail(std::string("unexpected character '") + in.peek() + "'");
  return p;
}

}  // namespace grammarcalc
