#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "grammarcalc/errors.hpp"
#include "grammarcalc/polynomial.hpp"

namespace grammarcalc {

enum class GroupFamily { Symmetric, Hyperoctahedral };
enum class ElementFilter { None, Derangement, Up };

enum class Statistic {
  Exc,
  AexcA,
  Cyc,
  Fix,
  Dc,
  DesB,
  AscB,
  Neg,
  Pos,
  AltRuns,
  UpDownRuns,
  LeftPeaks,
  RunsB,
  Wexc,
  AexcB,
  Single,
  CycB,
};

namespace detail {
struct StatisticInfo {
  Statistic stat;
  std::string_view name;
  bool symmetric;
  bool hyperoctahedral;
};

inline constexpr std::array<StatisticInfo, 17> kStatistics{{
    {Statistic::Exc, "exc", true, false},
    {Statistic::AexcA, "aexcA", true, false},
    {Statistic::Cyc, "cyc", true, false},
    {Statistic::Fix, "fix", true, true},
    {Statistic::Dc, "dc", true, false},
    {Statistic::DesB, "desB", false, true},
    {Statistic::AscB, "ascB", false, true},
    {Statistic::Neg, "neg", false, true},
    {Statistic::Pos, "pos", false, true},
    {Statistic::AltRuns, "altruns", true, false},
    {Statistic::UpDownRuns, "updownruns", true, false},
    {Statistic::LeftPeaks, "leftpeaks", true, false},
    {Statistic::RunsB, "runsB", false, true},
    {Statistic::Wexc, "wexc", false, true},
    {Statistic::AexcB, "aexcB", false, true},
    {Statistic::Single, "single", false, true},
    {Statistic::CycB, "cycB", false, true},
}};

inline const StatisticInfo& info(Statistic s) {
  for (const auto& i : kStatistics)
    if (i.stat == s) return i;
  throw LookupError("unknown statistic");
}
}  // namespace detail

inline std::string_view statistic_name(Statistic s) { return detail::info(s).name; }

inline Statistic parse_statistic(std::string_view name) {
  for (const auto& i : detail::kStatistics)
    if (i.name == name) return i.stat;
  throw LookupError("unknown statistic '" + std::string(name) + "'");
}

inline bool statistic_applies(Statistic s, GroupFamily f) {
  const auto& i = detail::info(s);
  return f == GroupFamily::Symmetric ? i.symmetric : i.hyperoctahedral;
}

inline std::string_view family_name(GroupFamily f) { return f == GroupFamily::Symmetric ? "sym" : "hyp"; }

inline GroupFamily parse_family(std::string_view name) {
  if (name == "sym") return GroupFamily::Symmetric;
  if (name == "hyp") return GroupFamily::Hyperoctahedral;
  throw LookupError("unknown group family '" + std::string(name) + "'");
}

inline std::string_view filter_name(ElementFilter f) {
  switch (f) {
    case ElementFilter::None: return "none";
    case ElementFilter::Derangement: return "derangement";
    case ElementFilter::Up: return "up";
  }
  return "none";
}

inline ElementFilter parse_filter(std::string_view name) {
  if (name == "none") return ElementFilter::None;
  if (name == "derangement") return ElementFilter::Derangement;
  if (name == "up") return ElementFilter::Up;
  throw LookupError("unknown filter '" + std::string(name) + "'");
}

/// Largest n the oracle will enumerate for each family.
struct OracleLimits {
  static constexpr unsigned kCompiledMaxSymmetric = 9;
  static constexpr unsigned kCompiledMaxHyperoctahedral = 7;

  unsigned max_symmetric = kCompiledMaxSymmetric;
  unsigned max_hyperoctahedral = kCompiledMaxHyperoctahedral;

  unsigned max_for(GroupFamily f) const {
    return f == GroupFamily::Symmetric ? max_symmetric : max_hyperoctahedral;
  }

  /// Compiled bounds, lowered (never raised) by GRAMMARCALC_MAX_N.
  static OracleLimits from_environment() {
    OracleLimits limits;
    if (const char* env = std::getenv("GRAMMARCALC_MAX_N"); env != nullptr && *env != '\0') {
      char* end = nullptr;
      unsigned long value = std::strtoul(env, &end, 10);
      if (end != nullptr && *end == '\0') {
        limits.max_symmetric = static_cast<unsigned>(std::min<unsigned long>(value, kCompiledMaxSymmetric));
        limits.max_hyperoctahedral = static_cast<unsigned>(std::min<unsigned long>(value, kCompiledMaxHyperoctahedral));
      }
    }
    return limits;
  }
};

// ---------------------------------------------------------------------------
// Statistics on windows. `w[i-1]` holds pi(i); signed windows use negative
// values for barred entries.
// ---------------------------------------------------------------------------

namespace detail {

inline int image(std::span<const int> w, int i) { return i == 0 ? 0 : (i > 0 ? w[i - 1] : -w[-i - 1]); }

// Alternating runs of a word; a word of length <= 1 has none.
inline unsigned alternating_runs(std::span<const int> word) {
  if (word.size() < 2) return 0;
  unsigned runs = 1;
  for (std::size_t i = 1; i + 1 < word.size(); ++i) {
    bool up_before = word[i - 1] < word[i];
    bool up_after = word[i] < word[i + 1];
    if (up_before != up_after) ++runs;
  }
  return runs;
}

inline unsigned zero_prefixed_runs(std::span<const int> w) {
  std::vector<int> word;
  word.reserve(w.size() + 1);
  word.push_back(0);
  word.insert(word.end(), w.begin(), w.end());
  return alternating_runs(word);
}

inline unsigned cycles_of_absolute(std::span<const int> w) {
  std::vector<char> seen(w.size(), 0);
  unsigned cycles = 0;
  for (std::size_t start = 0; start < w.size(); ++start) {
    if (seen[start]) continue;
    ++cycles;
    for (std::size_t i = start; !seen[i]; i = static_cast<std::size_t>(std::abs(w[i])) - 1) seen[i] = 1;
  }
  return cycles;
}

inline unsigned compute_statistic(std::span<const int> w, Statistic s) {
  const int n = static_cast<int>(w.size());
  unsigned count = 0;
  switch (s) {
    case Statistic::Exc:
      for (int i = 1; i <= n; ++i) count += w[i - 1] > i;
      return count;
    case Statistic::AexcA:
      for (int i = 1; i <= n; ++i) count += w[i - 1] <= i;
      return count;
    case Statistic::Cyc:
    case Statistic::CycB:
      return cycles_of_absolute(w);
    case Statistic::Fix:
      for (int i = 1; i <= n; ++i) count += w[i - 1] == i;
      return count;
    case Statistic::Dc:
      for (int i = 1; i <= n; ++i) count += w[i - 1] < i;
      return count;
    case Statistic::DesB:
      for (int i = 0; i < n; ++i) count += image(w, i) > image(w, i + 1);
      return count;
    case Statistic::AscB:
      for (int i = 0; i < n; ++i) count += image(w, i) < image(w, i + 1);
      return count;
    case Statistic::Neg:
      for (int v : w) count += v < 0;
      return count;
    case Statistic::Pos:
      for (int v : w) count += v > 0;
      return count;
    case Statistic::AltRuns:
      return alternating_runs(w);
    case Statistic::UpDownRuns:
    case Statistic::RunsB:
      return zero_prefixed_runs(w);
    case Statistic::LeftPeaks:
      for (int i = 1; i < n; ++i) count += image(w, i - 1) < image(w, i) && image(w, i) > image(w, i + 1);
      return count;
    case Statistic::Wexc:
      for (int i = 1; i <= n; ++i) {
        int v = w[i - 1];
        count += v == i || image(w, std::abs(v)) > v;
      }
      return count;
    case Statistic::AexcB:
      for (int i = 1; i <= n; ++i) {
        int v = w[i - 1];
        count += image(w, std::abs(v)) < v;
      }
      return count;
    case Statistic::Single:
      for (int i = 1; i <= n; ++i) count += w[i - 1] == -i;
      return count;
  }
  throw LookupError("unknown statistic");
}

}  // namespace detail

/// An element of S_n in window notation.
class Permutation {
 public:
  explicit Permutation(std::vector<int> window) : window_(std::move(window)) {
    std::vector<char> seen(window_.size() + 1, 0);
    for (int v : window_) {
      if (v < 1 || v > static_cast<int>(window_.size()) || seen[v]) throw DomainError("window is not a permutation");
      seen[v] = 1;
    }
  }

  std::size_t size() const noexcept { return window_.size(); }
  std::span<const int> window() const noexcept { return window_; }
  int operator()(int i) const { return detail::image(window_, i); }

  unsigned statistic(Statistic s) const {
    if (!statistic_applies(s, GroupFamily::Symmetric))
      throw DomainError("statistic '" + std::string(statistic_name(s)) + "' is not defined on S_n");
    return detail::compute_statistic(window_, s);
  }

 private:
  std::vector<int> window_;
};

/// An element of B_n in window notation; pi(-i) = -pi(i) and pi(0) = 0.
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
    std::vector<char> seen(window_.size() + 1, 0);
    for (int v : window_) {
      int a = std::abs(v);
      if (a < 1 || a > static_cast<int>(window_.size()) || seen[a])
        throw DomainError("window is not a signed permutation");
      seen[a] = 1;
    }
  }

  std::size_t size() const noexcept { return window_.size(); }
  std::span<const int> window() const noexcept { return window_; }
  int operator()(int i) const { return detail::image(window_, i); }

  unsigned statistic(Statistic s) const {
    if (!statistic_applies(s, GroupFamily::Hyperoctahedral))
      throw DomainError("statistic '" + std::string(statistic_name(s)) + "' is not defined on B_n");
    return detail::compute_statistic(window_, s);
  }

 private:
  std::vector<int> window_;
};

inline unsigned statistic(GroupFamily family, std::span<const int> window, Statistic s) {
  if (!statistic_applies(s, family))
    throw DomainError("statistic '" + std::string(statistic_name(s)) + "' is not defined for family " +
                      std::string(family_name(family)));
  return detail::compute_statistic(window, s);
}

/// Single-consumer stream over S_n or B_n (optionally filtered) in a fixed
/// order: value permutations lexicographically, and for B_n, sign patterns
/// nested inside with position 1 most significant and + before -.
class GroupEnumerator {
 public:
  GroupEnumerator(GroupFamily family, unsigned n, ElementFilter filter,
                  const OracleLimits& limits = OracleLimits::from_environment())
      : family_(family), n_(n), filter_(filter) {
    if (filter == ElementFilter::Up && family != GroupFamily::Hyperoctahedral)
      throw DomainError("filter 'up' applies only to the hyperoctahedral group");
    if (filter == ElementFilter::Up && n == 0) throw RangeError("up signed permutations need n >= 1");
    if (n > limits.max_for(family))
      throw RangeError("n = " + std::to_string(n) + " exceeds the enumeration bound " +
                       std::to_string(limits.max_for(family)) + " for family " + std::string(family_name(family)));
    values_.resize(n);
    std::iota(values_.begin(), values_.end(), 1);
    current_.resize(n);
  }

  /// Advances to the next element; false once exhausted.
  bool next() {
    for (;;) {
      if (!advance()) return false;
      if (accepted()) return true;
    }
  }

  std::span<const int> current() const noexcept { return current_; }
  GroupFamily family() const noexcept { return family_; }

 private:
  bool advance() {
    const std::uint64_t sign_patterns = family_ == GroupFamily::Hyperoctahedral ? (std::uint64_t{1} << n_) : 1;
    if (!started_) {
      started_ = true;
      signs_ = 0;
    } else if (++signs_ == sign_patterns) {
      if (!std::next_permutation(values_.begin(), values_.end())) return false;
      signs_ = 0;
    }
    for (unsigned i = 0; i < n_; ++i) {
      bool negative = (signs_ >> (n_ - 1 - i)) & 1u;
      current_[i] = negative ? -values_[i] : values_[i];
    }
    return true;
  }

  bool accepted() const {
    switch (filter_) {
      case ElementFilter::None: return true;
      case ElementFilter::Derangement:
        for (unsigned i = 0; i < n_; ++i)
          if (current_[i] == static_cast<int>(i + 1)) return false;
        return true;
      case ElementFilter::Up: return current_[0] > 0;
    }
    return true;
  }

  GroupFamily family_;
  unsigned n_;
  ElementFilter filter_;
  std::vector<int> values_;
  std::vector<int> current_;
  std::uint64_t signs_ = 0;
  bool started_ = false;
};

/// Every element of the filtered group, materialized.
inline std::vector<std::vector<int>> enumerate_group(GroupFamily family, unsigned n, ElementFilter filter,
                                                     const OracleLimits& limits = OracleLimits::from_environment()) {
  GroupEnumerator it(family, n, filter, limits);
  std::vector<std::vector<int>> out;
  while (it.next()) out.emplace_back(it.current().begin(), it.current().end());
  return out;
}

/// A statistic tracked by a symbol; the element contributes
/// symbol^(multiplier * value).
struct StatWeight {
  Statistic stat;
  Symbol symbol;
  int multiplier = 1;
};

/// Sum over the filtered group of the product of symbol^statistic.
inline Polynomial distribution(GroupFamily family, unsigned n, std::span<const StatWeight> weights,
                               ElementFilter filter = ElementFilter::None,
                               const OracleLimits& limits = OracleLimits::from_environment()) {
  for (const auto& w : weights)
    if (!statistic_applies(w.stat, family))
      throw DomainError("statistic '" + std::string(statistic_name(w.stat)) + "' is not defined for family " +
                        std::string(family_name(family)));

  std::map<std::vector<unsigned>, std::uint64_t> counts;
  GroupEnumerator it(family, n, filter, limits);
  std::vector<unsigned> key(weights.size());
  while (it.next()) {
    for (std::size_t i = 0; i < weights.size(); ++i) key[i] = detail::compute_statistic(it.current(), weights[i].stat);
    ++counts[key];
  }

  std::vector<Polynomial::Term> terms;
  terms.reserve(counts.size());
  std::vector<Monomial::Entry> entries;
  for (const auto& [values, count] : counts) {
    entries.clear();
    for (std::size_t i = 0; i < weights.size(); ++i)
      entries.emplace_back(weights[i].symbol, checked_mul(weights[i].multiplier, static_cast<Exponent>(values[i])));
    terms.emplace_back(Monomial::from_entries(entries), Rational(Integer(std::to_string(count))));
  }
  return Polynomial::from_terms(std::move(terms));
}

inline Polynomial distribution(GroupFamily family, unsigned n, std::initializer_list<StatWeight> weights,
                               ElementFilter filter = ElementFilter::None,
                               const OracleLimits& limits = OracleLimits::from_environment()) {
  return distribution(family, n, std::span<const StatWeight>(weights.begin(), weights.size()), filter, limits);
}

}  // namespace grammarcalc
