#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "grammarcalc/errors.hpp"
#include "grammarcalc/polynomial.hpp"

namespace grammarcalc {

// ---------------------------------------------------------------------------
// Number triangles
// ---------------------------------------------------------------------------

enum class TriangleName { EulerA, EulerB, RunsR, UpDownM, LeftPeakP, RunsT };

inline constexpr std::array<std::pair<TriangleName, std::string_view>, 6> kTriangleNames{{
    {TriangleName::EulerA, "eulerA"},
    {TriangleName::EulerB, "eulerB"},
    {TriangleName::RunsR, "runsR"},
    {TriangleName::UpDownM, "updownM"},
    {TriangleName::LeftPeakP, "leftpeakP"},
    {TriangleName::RunsT, "runsT"},
}};

inline std::string_view triangle_name(TriangleName t) {
  for (const auto& [value, name] : kTriangleNames)
    if (value == t) return name;
  throw LookupError("unknown triangle");
}

inline TriangleName parse_triangle_name(std::string_view name) {
  for (const auto& [value, text] : kTriangleNames)
    if (text == name) return value;
  throw LookupError("unknown triangle '" + std::string(name) + "'");
}

/// Inclusive range of k stored for a row.
struct KRange {
  int lo;
  int hi;
};

/// First row each triangle defines. P(0,0) = 1 and M(0,0) = 1 describe the
/// empty permutation; R and T start at their stated initial rows.
inline unsigned triangle_first_row(TriangleName t) {
  return t == TriangleName::RunsR || t == TriangleName::RunsT ? 1u : 0u;
}

inline KRange triangle_k_range(TriangleName t, unsigned n) {
  const int m = static_cast<int>(n);
  switch (t) {
    case TriangleName::EulerA: return {0, std::max(m - 1, 0)};
    case TriangleName::EulerB: return {0, m};
    case TriangleName::RunsR: return {0, m - 1};
    case TriangleName::UpDownM: return {0, m};
    case TriangleName::LeftPeakP: return {0, m / 2};
    case TriangleName::RunsT: return {1, m};
  }
  throw LookupError("unknown triangle");
}

class Triangle {
 public:
  Triangle(TriangleName name, std::vector<std::vector<Integer>> rows) : name_(name), rows_(std::move(rows)) {}

  TriangleName name() const noexcept { return name_; }
  unsigned first_row() const noexcept { return triangle_first_row(name_); }
  unsigned last_row() const noexcept { return first_row() + static_cast<unsigned>(rows_.size()) - 1; }
  KRange k_range(unsigned n) const { return triangle_k_range(name_, n); }

  /// Entries of row n over its declared k-range.
  const std::vector<Integer>& row(unsigned n) const {
    check_row(n);
    return rows_[n - first_row()];
  }

  /// Entry (n, k); zero for k outside the declared range.
  Integer at(unsigned n, int k) const {
    const auto& r = row(n);
    KRange range = k_range(n);
    if (k < range.lo || k > range.hi) return 0;
    return r[static_cast<std::size_t>(k - range.lo)];
  }

  Integer row_sum(unsigned n) const {
    Integer sum = 0;
    for (const auto& v : row(n)) sum += v;
    return sum;
  }

  /// Copy with one entry replaced.
  Triangle with_entry(unsigned n, int k, const Integer& value) const {
    check_row(n);
    KRange range = k_range(n);
    if (k < range.lo || k > range.hi) throw RangeError("entry outside the declared k-range");
    Triangle copy = *this;
    copy.rows_[n - first_row()][static_cast<std::size_t>(k - range.lo)] = value;
    return copy;
  }

  /// One line per row, entries comma-separated.
  std::string to_csv() const {
    std::string out;
    for (unsigned n = first_row(); n <= last_row(); ++n) {
      const auto& r = row(n);
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (i > 0) out += ',';
        out += r[i].get_str();
      }
      out += '\n';
    }
    return out;
  }

 private:
  void check_row(unsigned n) const {
    if (n < first_row() || n > last_row())
      throw RangeError("row " + std::to_string(n) + " of " + std::string(triangle_name(name_)) + " is not available");
  }

  TriangleName name_;
  std::vector<std::vector<Integer>> rows_;
};

/// Builds rows first_row..nmax of the named triangle from its recurrence.
inline Triangle triangle(TriangleName name, unsigned nmax) {
  const unsigned first = triangle_first_row(name);
  if (nmax < first) throw RangeError("triangle " + std::string(triangle_name(name)) + " starts at row " + std::to_string(first));

  std::vector<std::vector<Integer>> rows;
  auto prev = [&](int k) -> Integer {
    const unsigned n = first + static_cast<unsigned>(rows.size()) - 1;
    KRange r = triangle_k_range(name, n);
    if (k < r.lo || k > r.hi) return 0;
    return rows.back()[static_cast<std::size_t>(k - r.lo)];
  };

  for (unsigned n = first; n <= nmax; ++n) {
    KRange range = triangle_k_range(name, n);
    std::vector<Integer> row(static_cast<std::size_t>(range.hi - range.lo + 1));
    const int m = static_cast<int>(n);
    for (int k = range.lo; k <= range.hi; ++k) {
      Integer v = 0;
      if (n == first) {
        v = k == range.lo ? 1 : 0;  // <0,0> = B(0,0) = M(0,0) = P(0,0) = R(1,0) = T(1,1) = 1
      } else {
        switch (name) {
          case TriangleName::EulerA:
            v = (k + 1) * prev(k) + (m - k) * prev(k - 1);
            break;
          case TriangleName::EulerB:
            // B(n,k) = (2k+1) B(n-1,k) + (2n-2k+1) B(n-1,k-1)
            v = (2 * k + 1) * prev(k) + (2 * m - 2 * k + 1) * prev(k - 1);
            break;
          case TriangleName::RunsR:
            v = k * prev(k) + 2 * prev(k - 1) + (m - k) * prev(k - 2);
            break;
          case TriangleName::UpDownM:
            v = k * prev(k) + prev(k - 1) + (m - k + 1) * prev(k - 2);
            break;
          case TriangleName::LeftPeakP:
            v = (2 * k + 1) * prev(k) + (m - 2 * k + 1) * prev(k - 1);
            break;
          case TriangleName::RunsT:
            v = (2 * k - 1) * prev(k) + 3 * prev(k - 1) + (2 * m - 2 * k + 2) * prev(k - 2);
            break;
        }
      }
      row[static_cast<std::size_t>(k - range.lo)] = v;
    }
    rows.push_back(std::move(row));
  }
  return Triangle(name, std::move(rows));
}

// ---------------------------------------------------------------------------
// Three-index table d(n,i,j): type B derangements with i weak excedances and
// j anti-excedances.
// ---------------------------------------------------------------------------

class TripleTable {
 public:
  explicit TripleTable(std::vector<std::vector<std::vector<Integer>>> entries) : entries_(std::move(entries)) {}

  unsigned max_n() const noexcept { return static_cast<unsigned>(entries_.size() - 1); }

  Integer at(unsigned n, int i, int j) const {
    if (n > max_n()) throw RangeError("d(n,i,j) table has no row " + std::to_string(n));
    if (i < 0 || j < 0 || i + j > static_cast<int>(n)) return 0;
    return entries_[n][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }

  /// sum_{i,j} d(n,i,j) x^i y^j
  Polynomial generating_polynomial(unsigned n, Symbol x, Symbol y) const {
    std::vector<Polynomial::Term> terms;
    for (int i = 0; i <= static_cast<int>(n); ++i)
      for (int j = 0; i + j <= static_cast<int>(n); ++j) {
        Integer v = at(n, i, j);
        if (v != 0) terms.emplace_back(Monomial::from_entries(std::vector<Monomial::Entry>{{x, i}, {y, j}}), Rational(v));
      }
    return Polynomial::from_terms(std::move(terms));
  }

 private:
  std::vector<std::vector<std::vector<Integer>>> entries_;
};

/// d(n,i,j) for n = 0..nmax from
/// d(n+1,i,j) = d(n,i,j) + 2i d(n,i,j-1) + 2j d(n,i-1,j) + 4(n-i-j+2) d(n,i-1,j-1)
/// with d(0,0,0) = 1 (which reproduces d(1,0,0) = 1 and d(1,i,j) = 0 otherwise).
inline TripleTable d_nij_table(unsigned nmax) {
  std::vector<std::vector<std::vector<Integer>>> d(nmax + 1);
  for (unsigned n = 0; n <= nmax; ++n) d[n].assign(n + 1, std::vector<Integer>(n + 1, 0));
  d[0][0][0] = 1;
  for (unsigned n = 0; n < nmax; ++n) {
    const int m = static_cast<int>(n);
    auto get = [&](int i, int j) -> Integer {
      if (i < 0 || j < 0 || i + j > m) return 0;
      return d[n][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    };
    for (int i = 0; i <= m + 1; ++i)
      for (int j = 0; i + j <= m + 1; ++j)
        d[n + 1][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            get(i, j) + 2 * i * get(i, j - 1) + 2 * j * get(i - 1, j) + 4 * (m - i - j + 2) * get(i - 1, j - 1);
  }
  return TripleTable(std::move(d));
}

/// d_n(x,y) from the bivariate recurrence
/// d_{n+1} = (1 + 4nxy) d_n + (2xy - 4x^2 y) d_n/dx + (2xy - 4xy^2) d_n/dy, d_0 = d_1 = 1.
inline Polynomial d_xy_polynomial(unsigned n) {
  const Symbol x("x"), y("y");
  const Polynomial X(x), Y(y);
  Polynomial d = 1;
  for (unsigned k = 0; k < n; ++k) {
    d = (1 + Rational(4 * k) * X * Y) * d + (2 * X * Y - 4 * X * X * Y) * partial_derivative(d, x) +
        (2 * X * Y - 4 * X * Y * Y) * partial_derivative(d, y);
  }
  return d;
}

/// q (q+1) ... (q+n-1); the empty product for n = 0.
inline Polynomial rising_factorial(unsigned n, Symbol q = Symbol("q")) {
  Polynomial out = 1;
  for (unsigned j = 0; j < n; ++j) out *= Polynomial(q) + Polynomial(Rational(j));
  return out;
}

// ---------------------------------------------------------------------------
// Polynomial families
// ---------------------------------------------------------------------------

enum class FamilyName { A, B, qA, qB, dA, dB, dA_altsum, dB_altsum, R, M, P, T };

inline constexpr std::array<std::pair<FamilyName, std::string_view>, 12> kFamilyNames{{
    {FamilyName::A, "A"},
    {FamilyName::B, "B"},
    {FamilyName::qA, "qA"},
    {FamilyName::qB, "qB"},
    {FamilyName::dA, "dA"},
    {FamilyName::dB, "dB"},
    {FamilyName::dA_altsum, "dA_altsum"},
    {FamilyName::dB_altsum, "dB_altsum"},
    {FamilyName::R, "R"},
    {FamilyName::M, "M"},
    {FamilyName::P, "P"},
    {FamilyName::T, "T"},
}};

inline std::string_view family_polynomial_name(FamilyName f) {
  for (const auto& [value, name] : kFamilyNames)
    if (value == f) return name;
  throw LookupError("unknown family");
}

inline FamilyName parse_family_polynomial_name(std::string_view name) {
  for (const auto& [value, text] : kFamilyNames)
    if (text == name) return value;
  throw LookupError("unknown polynomial family '" + std::string(name) + "'");
}

/// Triangles and polynomial families with memoized rows. Single-entry faults
/// can be injected into triangles; every family built from a faulted triangle
/// sees the fault. Not safe for concurrent use; give each thread its own.
class SequenceTables {
 public:
  void inject_fault(TriangleName name, unsigned n, int k, Integer value) {
    faults_.push_back({name, n, k, std::move(value)});
    triangles_.erase(name);
  }

  const Triangle& triangle(TriangleName name, unsigned nmax) {
    auto it = triangles_.find(name);
    if (it == triangles_.end() || it->second.last_row() < nmax) {
      Triangle built = grammarcalc::triangle(name, std::max(nmax, 16u));
      for (const auto& f : faults_)
        if (f.name == name && f.n <= built.last_row()) built = built.with_entry(f.n, f.k, f.value);
      it = triangles_.insert_or_assign(name, std::move(built)).first;
    }
    return it->second;
  }

  Polynomial family(FamilyName name, unsigned n) {
    const Polynomial X(x_);
    switch (name) {
      case FamilyName::A: return from_row(TriangleName::EulerA, n, 0);
      case FamilyName::B: return from_row(TriangleName::EulerB, n, 0);
      case FamilyName::R:
        if (n == 0) throw RangeError("R_n is defined for n >= 1");
        return from_row(TriangleName::RunsR, n, 1);
      case FamilyName::M: return from_row(TriangleName::UpDownM, n, 0);
      case FamilyName::P: return from_row(TriangleName::LeftPeakP, n, 0);
      case FamilyName::T:
        if (n == 0) throw RangeError("T_n is defined for n >= 1");
        return from_row(TriangleName::RunsT, n, 1);
      case FamilyName::qA: return recurrence_row(qA_, n, [&](unsigned k, const std::vector<Polynomial>& prev) {
          const Polynomial& a = prev[k];
          return (Rational(k) * X + q_) * a + X * (1 - X) * partial_derivative(a, x_);
        });
      case FamilyName::qB: return recurrence_row(qB_, n, [&](unsigned k, const std::vector<Polynomial>& prev) {
          const Polynomial& b = prev[k];
          const Polynomial Q(q_);
          return ((Rational(k) + Rational(k) * Q + Q) * X + 1) * b + (1 + Q) * X * (1 - X) * partial_derivative(b, x_);
        });
      case FamilyName::dA:
        if (dA_.empty()) dA_ = {Polynomial(1), Polynomial(0)};
        return recurrence_row(dA_, n, [&](unsigned k, const std::vector<Polynomial>& prev) {
          return Rational(k) * X * (prev[k] + prev[k - 1]) + X * (1 - X) * partial_derivative(prev[k], x_);
        });
      case FamilyName::dB:
        if (dB_.empty()) dB_ = {Polynomial(1), Polynomial(1)};
        return recurrence_row(dB_, n, [&](unsigned k, const std::vector<Polynomial>& prev) {
          return Rational(2 * k) * X * (prev[k] + prev[k - 1]) + prev[k] +
                 2 * X * (1 - X) * partial_derivative(prev[k], x_);
        });
      case FamilyName::dA_altsum: {
        Polynomial sum;
        for (unsigned k = 0; k <= n; ++k) {
          Rational c((n - k) % 2 == 0 ? binomial(n, k) : Integer(-binomial(n, k)));
          sum += c * family(FamilyName::A, k);
        }
        return sum;
      }
      case FamilyName::dB_altsum: {
        Polynomial sum;
        for (unsigned k = 0; k <= n; ++k) {
          Rational c((n - k) % 2 == 0 ? binomial(n, k) : Integer(-binomial(n, k)));
          sum += c * X.pow(n - k) * family(FamilyName::B, k);
        }
        return sum;
      }
    }
    throw LookupError("unknown family");
  }

 private:
  struct Fault {
    TriangleName name;
    unsigned n;
    int k;
    Integer value;
  };

  // sum over the declared k-range with k >= k_min of T(n,k) x^k.
  Polynomial from_row(TriangleName name, unsigned n, int k_min) {
    const Triangle& t = triangle(name, n);
    KRange range = t.k_range(n);
    std::vector<Polynomial::Term> terms;
    for (int k = std::max(range.lo, k_min); k <= range.hi; ++k)
      terms.emplace_back(Monomial::variable(x_, k), Rational(t.at(n, k)));
    return Polynomial::from_terms(std::move(terms));
  }

  // Extends `rows` (seeded with its initial conditions, or {1} if empty) so
  // that rows[n] exists; step(k, rows) returns rows[k+1].
  template <typename Step>
  Polynomial recurrence_row(std::vector<Polynomial>& rows, unsigned n, Step step) {
    if (rows.empty()) rows.push_back(1);
    while (rows.size() <= n) {
      const unsigned k = static_cast<unsigned>(rows.size()) - 1;
      rows.push_back(step(k, rows));
    }
    return rows[n];
  }

  Symbol x_{"x"};
  Symbol q_{"q"};
  std::vector<Fault> faults_;
  std::map<TriangleName, Triangle> triangles_;
  std::vector<Polynomial> qA_, qB_, dA_, dB_;
};

/// Named family at n, in x (and q for the q-analogues), from a fresh table set.
inline Polynomial family_polynomial(FamilyName name, unsigned n) {
  SequenceTables tables;
  return tables.family(name, n);
}

}  // namespace grammarcalc
