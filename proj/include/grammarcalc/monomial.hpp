#pragma once

#include <boost/container/small_vector.hpp>

#include <algorithm>
#include <compare>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "grammarcalc/errors.hpp"
#include "grammarcalc/symbol.hpp"

namespace grammarcalc {

using Exponent = std::int32_t;

inline Exponent checked_add(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_add_overflow(a, b, &out)) throw ExponentOverflowError("exponent overflow in addition");
  return out;
}

inline Exponent checked_mul(Exponent a, Exponent b) {
  Exponent out;
  if (__builtin_mul_overflow(a, b, &out)) throw ExponentOverflowError("exponent overflow in multiplication");
  return out;
}

inline Exponent checked_exponent(long long value) {
  if (value < INT32_MIN || value > INT32_MAX) throw ExponentOverflowError("exponent out of range");
  return static_cast<Exponent>(value);
}

/// A product of symbols raised to nonzero integer powers. Entries are kept
/// sorted by symbol id and never hold a zero exponent, so equality is
/// structural.
class Monomial {
 public:
  using Entry = std::pair<Symbol, Exponent>;

  Monomial() = default;

  static Monomial variable(Symbol s, Exponent e = 1) {
    Monomial m;
    if (e != 0) m.entries_.emplace_back(s, e);
    return m;
  }

  static Monomial from_entries(std::span<const Entry> entries) {
    Monomial m;
    m.entries_.assign(entries.begin(), entries.end());
    std::sort(m.entries_.begin(), m.entries_.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    auto out = m.entries_.begin();
    for (auto it = m.entries_.begin(); it != m.entries_.end();) {
      Entry acc = *it++;
      while (it != m.entries_.end() && it->first == acc.first) acc.second = checked_add(acc.second, (it++)->second);
      if (acc.second != 0) *out++ = acc;
    }
    m.entries_.erase(out, m.entries_.end());
    return m;
  }

  std::span<const Entry> entries() const noexcept { return {entries_.data(), entries_.size()}; }
  bool is_one() const noexcept { return entries_.empty(); }

  Exponent exponent(Symbol s) const noexcept {
    for (const auto& [sym, e] : entries_)
      if (sym == s) return e;
    return 0;
  }

  bool contains(Symbol s) const noexcept { return exponent(s) != 0; }

  long long total_degree() const noexcept {
    long long d = 0;
    for (const auto& entry : entries_) d += entry.second;
    return d;
  }

  bool has_negative_exponent() const noexcept {
    return std::any_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second < 0; });
  }

  /// Same monomial with the exponent of `s` replaced by `e`.
  Monomial with_exponent(Symbol s, Exponent e) const {
    Monomial m;
    bool placed = false;
    for (const auto& entry : entries_) {
      if (!placed && s < entry.first) {
        if (e != 0) m.entries_.emplace_back(s, e);
        placed = true;
      }
      if (entry.first == s) {
        if (e != 0) m.entries_.emplace_back(s, e);
        placed = true;
      } else {
        m.entries_.push_back(entry);
      }
    }
    if (!placed && e != 0) m.entries_.emplace_back(s, e);
    return m;
  }

  Monomial without(Symbol s) const { return with_exponent(s, 0); }

  Monomial inverse() const {
    Monomial m = *this;
    for (auto& entry : m.entries_) entry.second = checked_mul(entry.second, -1);
    return m;
  }

  Monomial pow(Exponent k) const {
    if (k == 0) return {};
    Monomial m = *this;
    for (auto& entry : m.entries_) entry.second = checked_mul(entry.second, k);
    return m;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    m.entries_.reserve(a.entries_.size() + b.entries_.size());
    auto i = a.entries_.begin();
    auto j = b.entries_.begin();
    while (i != a.entries_.end() && j != b.entries_.end()) {
      if (i->first < j->first) {
        m.entries_.push_back(*i++);
      } else if (j->first < i->first) {
        m.entries_.push_back(*j++);
      } else {
        Exponent e = checked_add(i->second, j->second);
        if (e != 0) m.entries_.emplace_back(i->first, e);
        ++i;
        ++j;
      }
    }
    m.entries_.insert(m.entries_.end(), i, a.entries_.end());
    m.entries_.insert(m.entries_.end(), j, b.entries_.end());
    return m;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.entries_ == b.entries_; }
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    return std::lexicographical_compare_three_way(a.entries_.begin(), a.entries_.end(), b.entries_.begin(),
                                                  b.entries_.end());
  }

 private:
  boost::container::small_vector<Entry, 4> entries_;
};

/// Per-symbol minimum of two monomials, treating absent symbols as exponent 0.
inline Monomial monomial_floor(const Monomial& a, const Monomial& b) {
  std::vector<Monomial::Entry> out;
  auto ea = a.entries();
  auto eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) {
      if (ea[i].second < 0) out.push_back(ea[i]);
      ++i;
    } else if (i == ea.size() || eb[j].first < ea[i].first) {
      if (eb[j].second < 0) out.push_back(eb[j]);
      ++j;
    } else {
      out.emplace_back(ea[i].first, std::min(ea[i].second, eb[j].second));
      ++i;
      ++j;
    }
  }
  return Monomial::from_entries(out);
}

/// Lexicographic term order by symbol id with larger exponents ranking higher.
/// A genuine monomial order on nonnegative exponent vectors.
inline bool lex_greater(const Monomial& a, const Monomial& b) {
  auto ea = a.entries();
  auto eb = b.entries();
  std::size_t i = 0, j = 0;
  while (i < ea.size() || j < eb.size()) {
    if (j == eb.size() || (i < ea.size() && ea[i].first < eb[j].first)) return ea[i].second > 0;
    if (i == ea.size() || eb[j].first < ea[i].first) return eb[j].second < 0;
    if (ea[i].second != eb[j].second) return ea[i].second > eb[j].second;
    ++i;
    ++j;
  }
  return false;
}

/// True when b / a has no negative exponent.
inline bool divides(const Monomial& a, const Monomial& b) {
  return !(b * a.inverse()).has_negative_exponent();
}

}  // namespace grammarcalc
