#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "grammarcalc/errors.hpp"
#include "grammarcalc/grammar.hpp"
#include "grammarcalc/permutations.hpp"
#include "grammarcalc/polynomial.hpp"
#include "grammarcalc/recurrences.hpp"

namespace grammarcalc {

/// exponent = constant + per_n*n + per_k*k + per_j*j
struct AffineExponent {
  Symbol symbol;
  int constant = 0;
  int per_n = 0;
  int per_k = 0;
  int per_j = 0;

  Exponent at(long n, long k = 0, long j = 0) const {
    return checked_exponent(constant + per_n * n + per_k * k + per_j * j);
  }
};

/// factor * base^(n + base_offset) * prod symbol^(affine in n)
struct Prefactor {
  Polynomial factor = 1;
  Rational base = 1;
  int base_offset = 0;
  std::vector<AffineExponent> monomial;

  Polynomial at(unsigned n) const {
    std::vector<Monomial::Entry> entries;
    for (const auto& a : monomial) entries.emplace_back(a.symbol, a.at(n));
    return factor * pow(base, static_cast<long>(n) + base_offset) * Polynomial(Monomial::from_entries(entries));
  }
};

/// sum_k T(n + row_offset, k) * prod symbol^(affine in n, k). Without a
/// triangle the source is the d(n,i,j) table, summed over i (as k) and j.
struct TriangleSumSpec {
  std::optional<TriangleName> triangle;
  int row_offset = 0;
  std::vector<AffineExponent> exponents;
};

/// Oracle distribution over the filtered group of size n + size_offset.
struct OracleSpec {
  GroupFamily family;
  ElementFilter filter = ElementFilter::None;
  int size_offset = 0;
  std::vector<StatWeight> weights;
};

/// D^n(seed) with `lhs_bindings` applied equals the prefactor times the
/// family polynomial at n + family_offset with `rhs_bindings` applied. No
/// family means the rising factorial in q.
struct SpecializationSpec {
  Bindings lhs_bindings;
  std::optional<FamilyName> family;
  int family_offset = 0;
  Bindings rhs_bindings;
};

enum class ClaimKind { TriangleSum, OracleDistribution, Specialization };

struct Claim {
  std::string label;
  Polynomial seed;
  unsigned n_min = 0;
  unsigned n_max = 12;
  Prefactor prefactor;
  std::variant<TriangleSumSpec, OracleSpec, SpecializationSpec> rhs;

  ClaimKind kind() const { return static_cast<ClaimKind>(rhs.index()); }
};

struct CatalogEntry {
  std::string key;
  std::string description;
  Grammar grammar;
  std::vector<Polynomial> seeds;
  std::vector<Claim> claims;
};

namespace detail {

inline Polynomial P(std::string_view text) { return Polynomial::parse(text); }
inline Symbol S(std::string_view name) { return Symbol(name); }

inline Claim triangle_claim(std::string label, std::string_view seed, unsigned n_min, std::optional<TriangleName> t,
                            int row_offset, Prefactor pre, std::vector<AffineExponent> exps) {
  return Claim{std::move(label), P(seed), n_min, 12, std::move(pre), TriangleSumSpec{t, row_offset, std::move(exps)}};
}

inline Claim oracle_claim(std::string label, std::string_view seed, unsigned n_min, OracleSpec spec, Prefactor pre) {
  unsigned n_max = spec.family == GroupFamily::Symmetric ? 7 : 6;
  return Claim{std::move(label), P(seed), n_min, n_max, std::move(pre), std::move(spec)};
}

inline Claim specialization_claim(std::string label, std::string_view seed, unsigned n_min, SpecializationSpec spec,
                                  Prefactor pre) {
  return Claim{std::move(label), P(seed), n_min, 12, std::move(pre), std::move(spec)};
}

inline Prefactor factor(std::string_view text, Rational base = 1, int base_offset = 0,
                        std::vector<AffineExponent> monomial = {}) {
  return Prefactor{P(text), std::move(base), base_offset, std::move(monomial)};
}

inline std::vector<CatalogEntry> build_catalog() {
  const Symbol x = S("x"), y = S("y"), z = S("z"), u = S("u"), e = S("e"), q = S("q");
  using enum Statistic;
  const auto sym = GroupFamily::Symmetric;
  const auto hyp = GroupFamily::Hyperoctahedral;
  std::vector<CatalogEntry> out;

  out.push_back(CatalogEntry{
      "eulerian-dumont",
      "Eulerian polynomials from x -> xy, y -> xy",
      parse_grammar("x -> x*y; y -> x*y", "eulerian-dumont"),
      {P("x")},
      {
          triangle_claim("D^n(x) = x sum_k <n,k> x^k y^(n-k)", "x", 1, TriangleName::EulerA, 0, factor("1"),
                         {{x, 1, 0, 1}, {y, 0, 1, -1}}),
          oracle_claim("D^n(x) = x sum_{S_n} x^exc y^aexc", "x", 0, {sym, ElementFilter::None, 0, {{Exc, x}, {AexcA, y}}},
                       factor("x")),
      }});

  out.push_back(CatalogEntry{
      "typeB-ma",
      "type B Eulerian polynomials from x -> xy^2, y -> x^2y",
      parse_grammar("x -> x*y^2; y -> x^2*y", "typeB-ma"),
      {P("x^2"), P("x*y")},
      {
          triangle_claim("D^n(x^2) = 2^n sum_k <n,k> x^(2n-2k) y^(2k+2)", "x^2", 1, TriangleName::EulerA, 0,
                         factor("1", 2), {{x, 0, 2, -2}, {y, 2, 0, 2}}),
          triangle_claim("D^n(xy) = sum_k B(n,k) x^(2n-2k+1) y^(2k+1)", "x*y", 0, TriangleName::EulerB, 0, factor("1"),
                         {{x, 1, 2, -2}, {y, 1, 0, 2}}),
          oracle_claim("D^n(x^2) = 2^n y^2 sum_{S_n} x^(2 aexc) y^(2 exc)", "x^2", 1,
                       {sym, ElementFilter::None, 0, {{AexcA, x, 2}, {Exc, y, 2}}}, factor("y^2", 2)),
          oracle_claim("D^n(xy) = xy sum_{B_n} x^(2 asc) y^(2 des)", "x*y", 0,
                       {hyp, ElementFilter::None, 0, {{AscB, x, 2}, {DesB, y, 2}}}, factor("x*y")),
      }});

  out.push_back(CatalogEntry{
      "q-eulerian-a",
      "q-Eulerian polynomials of type A from x -> qxy, y -> yz, z -> yz",
      parse_grammar("x -> q*x*y; y -> y*z; z -> y*z", "q-eulerian-a"),
      {P("x")},
      {
          oracle_claim("D^n(x) = x sum_{S_n} y^aexc z^exc q^cyc", "x", 0,
                       {sym, ElementFilter::None, 0, {{AexcA, y}, {Exc, z}, {Cyc, q}}}, factor("x")),
          specialization_claim("D^n(x)|_{y=1} = x A_n(z;q)", "x", 0,
                               {{{y, 1}}, FamilyName::qA, 0, {{x, Polynomial(z)}}}, factor("x")),
          specialization_claim("D^n(x)|_{y=z=1} = x q(q+1)...(q+n-1)", "x", 0,
                               {{{y, 1}, {z, 1}}, std::nullopt, 0, {}}, factor("x")),
      }});

  out.push_back(CatalogEntry{
      "q-eulerian-b",
      "q-Eulerian polynomials of type B from x -> qxyu, y -> xyz, z -> yzu, u -> qxzu",
      parse_grammar("x -> q*x*y*u; y -> x*y*z; z -> y*z*u; u -> q*x*z*u", "q-eulerian-b"),
      {P("x*y")},
      {
          oracle_claim("D^n(xy) = xy sum_{B_n} (xz)^asc (yu)^des q^N", "x*y", 0,
                       {hyp, ElementFilter::None, 0, {{AscB, x}, {AscB, z}, {DesB, y}, {DesB, u}, {Neg, q}}},
                       factor("x*y")),
          specialization_claim("D^n(xy)|_{x=y=z=1} = B_n(u;q)", "x*y", 0,
                               {{{x, 1}, {y, 1}, {z, 1}}, FamilyName::qB, 0, {{x, Polynomial(u)}}}, factor("1")),
      }});

  out.push_back(CatalogEntry{
      "runs-a",
      "alternating and up-down runs from x -> xy, y -> yz, z -> y^2",
      parse_grammar("x -> x*y; y -> y*z; z -> y^2", "runs-a"),
      {P("x^2"), P("x")},
      {
          triangle_claim("D^n(x^2) = x^2 sum_k R(n+1,k) y^k z^(n-k)", "x^2", 0, TriangleName::RunsR, 1, factor("x^2"),
                         {{y, 0, 0, 1}, {z, 0, 1, -1}}),
          triangle_claim("D^n(x) = x sum_k M(n,k) y^k z^(n-k)", "x", 0, TriangleName::UpDownM, 0, factor("x"),
                         {{y, 0, 0, 1}, {z, 0, 1, -1}}),
          oracle_claim("D^n(x^2) = x^2 sum_{S_(n+1)} y^altruns z^(n-altruns)", "x^2", 0,
                       {sym, ElementFilter::None, 1, {{AltRuns, y}, {AltRuns, z, -1}}},
                       factor("x^2", 1, 0, {{z, 0, 1}})),
          oracle_claim("D^n(x) = x sum_{S_n} y^udruns z^(n-udruns)", "x", 0,
                       {sym, ElementFilter::None, 0, {{UpDownRuns, y}, {UpDownRuns, z, -1}}},
                       factor("x", 1, 0, {{z, 0, 1}})),
          specialization_claim("D^n(x^2)|_{z=1} = x^2 R_(n+1)(y)", "x^2", 1,
                               {{{z, 1}}, FamilyName::R, 1, {{x, Polynomial(y)}}}, factor("x^2")),
          specialization_claim("D^n(x)|_{z=1} = x M_n(y)", "x", 0, {{{z, 1}}, FamilyName::M, 0, {{x, Polynomial(y)}}},
                               factor("x")),
      }});

  out.push_back(CatalogEntry{
      "runs-b",
      "type B alternating runs from x -> xy^2, y -> yz^2, z -> y^4 z^-1",
      parse_grammar("x -> x*y^2; y -> y*z^2; z -> y^4*z^-1", "runs-b"),
      {P("x^3*y"), P("x*y"), P("x^2"), P("x^2*y^2"), P("y^2")},
      {
          triangle_claim("D^n(x^3y) = x^3y sum_k T(n+1,k) y^(2k-2) z^(2n-2k+2)", "x^3*y", 0, TriangleName::RunsT, 1,
                         factor("x^3*y"), {{y, -2, 0, 2}, {z, 2, 2, -2}}),
          triangle_claim("D^n(xy) = xy(y^2+z^2) sum_k T(n,k) y^(2k-2) z^(2n-2k)", "x*y", 1, TriangleName::RunsT, 0,
                         factor("x*y^3 + x*y*z^2"), {{y, -2, 0, 2}, {z, 0, 2, -2}}),
          triangle_claim("D^n(x^2) = 2^n x^2 sum_k M(n,k) y^(2k) z^(2n-2k)", "x^2", 0, TriangleName::UpDownM, 0,
                         factor("x^2", 2), {{y, 0, 0, 2}, {z, 0, 2, -2}}),
          triangle_claim("D^n(x^2y^2) = 2^(n-1) x^2(y^2+z^2) sum_k R(n+1,k) y^(2k) z^(2n-2k)", "x^2*y^2", 1,
                         TriangleName::RunsR, 1, factor("x^2*y^2 + x^2*z^2", 2, -1), {{y, 0, 0, 2}, {z, 0, 2, -2}}),
          triangle_claim("D^n(y^2) = 2^n y^2 sum_k P(n,k) y^(4k) z^(2n-4k)", "y^2", 0, TriangleName::LeftPeakP, 0,
                         factor("y^2", 2), {{y, 0, 0, 4}, {z, 0, 2, -4}}),
          oracle_claim("D^n(x^3y) = x^3y sum_{up B_(n+1)} y^(2runs-2) z^(2n-2runs+2)", "x^3*y", 0,
                       {hyp, ElementFilter::Up, 1, {{RunsB, y, 2}, {RunsB, z, -2}}},
                       factor("x^3*y^-1", 1, 0, {{z, 2, 2}})),
          oracle_claim("D^n(xy) = xy(y^2+z^2) sum_{up B_n} y^(2runs-2) z^(2n-2runs)", "x*y", 1,
                       {hyp, ElementFilter::Up, 0, {{RunsB, y, 2}, {RunsB, z, -2}}},
                       factor("x*y + x*y^-1*z^2", 1, 0, {{z, 0, 2}})),
          oracle_claim("D^n(x^2) = 2^n x^2 sum_{S_n} y^(2udruns) z^(2n-2udruns)", "x^2", 0,
                       {sym, ElementFilter::None, 0, {{UpDownRuns, y, 2}, {UpDownRuns, z, -2}}},
                       factor("x^2", 2, 0, {{z, 0, 2}})),
          oracle_claim("D^n(x^2y^2) = 2^(n-1) x^2(y^2+z^2) sum_{S_(n+1)} y^(2altruns) z^(2n-2altruns)", "x^2*y^2", 1,
                       {sym, ElementFilter::None, 1, {{AltRuns, y, 2}, {AltRuns, z, -2}}},
                       factor("x^2*y^2 + x^2*z^2", 2, -1, {{z, 0, 2}})),
          oracle_claim("D^n(y^2) = 2^n y^2 sum_{S_n} y^(4lpk) z^(2n-4lpk)", "y^2", 0,
                       {sym, ElementFilter::None, 0, {{LeftPeaks, y, 4}, {LeftPeaks, z, -4}}},
                       factor("y^2", 2, 0, {{z, 0, 2}})),
      }});

  out.push_back(CatalogEntry{
      "derangement-a-dumont",
      "excedances, drops and fixed points from x -> xy, y -> xy, z -> xy, e -> ez",
      parse_grammar("x -> x*y; y -> x*y; z -> x*y; e -> e*z", "derangement-a-dumont"),
      {P("e")},
      {
          oracle_claim("D^n(e) = e sum_{S_n} x^exc y^dc z^fix", "e", 0,
                       {sym, ElementFilter::None, 0, {{Exc, x}, {Dc, y}, {Fix, z}}}, factor("e")),
          specialization_claim("D^n(e)|_{y=e=1,z=0} = d_n(x)", "e", 0,
                               {{{y, 1}, {e, 1}, {z, 0}}, FamilyName::dA, 0, {}}, factor("1")),
      }});

  const std::string derangement_b_rules = "x -> x*y^2; y -> x^2*y; z -> x^2*y^2*z^-3; e -> e*z^4";
  out.push_back(CatalogEntry{
      "derangement-b",
      "type B derangements from x -> xy^2, y -> x^2y, z -> x^2y^2z^-3, e -> ez^4",
      parse_grammar(derangement_b_rules, "derangement-b"),
      {P("e"), P("x^2*y^2"), P("z^4")},
      {
          triangle_claim("D^n(e) = e sum_{i,j} d(n,i,j) x^(2i) y^(2j) z^(4(n-i-j))", "e", 0, std::nullopt, 0,
                         factor("e"), {{x, 0, 0, 2}, {y, 0, 0, 0, 2}, {z, 0, 4, -4, -4}}),
          oracle_claim("D^n(e) = e sum_{D_n^B} x^(2wexc) y^(2aexc) z^(4single)", "e", 0,
                       {hyp, ElementFilter::Derangement, 0, {{Wexc, x, 2}, {AexcB, y, 2}, {Single, z, 4}}},
                       factor("e")),
          specialization_claim("D^n(e)|_{y=z=1} = e d_n^B(x^2)", "e", 0,
                               {{{y, 1}, {z, 1}}, FamilyName::dB, 0, {{x, P("x^2")}}}, factor("e")),
          triangle_claim("D^n(x^2y^2) = 2^n sum_k <n+1,k> x^(2k+2) y^(2n-2k+2)", "x^2*y^2", 0, TriangleName::EulerA, 1,
                         factor("1", 2), {{x, 2, 0, 2}, {y, 2, 2, -2}}),
          triangle_claim("D^n(z^4) = 2^(n+1) sum_k <n,k> x^(2k+2) y^(2n-2k)", "z^4", 1, TriangleName::EulerA, 0,
                         factor("1", 2, 1), {{x, 2, 0, 2}, {y, 0, 2, -2}}),
      }});

  out.push_back(CatalogEntry{
      "derangement-b-q",
      "type B derangements with cycles from x -> xy^2, y -> x^2y, z -> x^2y^2z^-3, e -> qez^4",
      parse_grammar("x -> x*y^2; y -> x^2*y; z -> x^2*y^2*z^-3; e -> q*e*z^4", "derangement-b-q"),
      {P("e")},
      {
          oracle_claim("D^n(e) = e sum_{D_n^B} x^(2wexc) y^(2aexc) z^(4single) q^cyc", "e", 0,
                       {hyp, ElementFilter::Derangement, 0, {{Wexc, x, 2}, {AexcB, y, 2}, {Single, z, 4}, {CycB, q}}},
                       factor("e")),
      }});

  return out;
}

}  // namespace detail

/// Every built-in grammar with its seeds and claims, in a fixed order.
inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = detail::build_catalog();
  return entries;
}

inline const CatalogEntry& catalog_get(std::string_view key) {
  for (const auto& entry : catalog())
    if (entry.key == key) return entry;
  throw LookupError("unknown catalog key '" + std::string(key) + "'");
}

/// Evaluates both sides of catalog claims. Holds the triangle cache and the
/// oracle limits; one evaluator per thread.
class ClaimEvaluator {
 public:
  explicit ClaimEvaluator(SequenceTables& tables, OracleLimits limits = OracleLimits::from_environment())
      : tables_(tables), limits_(limits) {}

  /// The claimed right-hand side at n.
  Polynomial rhs(const Claim& claim, unsigned n) {
    if (n < claim.n_min || n > claim.n_max)
      throw RangeError("n = " + std::to_string(n) + " outside the claim range [" + std::to_string(claim.n_min) + ", " +
                       std::to_string(claim.n_max) + "] of '" + claim.label + "'");
    const Polynomial pre = claim.prefactor.at(n);
    return std::visit([&](const auto& spec) { return pre * evaluate(spec, n); }, claim.rhs);
  }

  /// The left-hand side given D^n(seed): the derived polynomial itself, or its
  /// specialization.
  Polynomial lhs(const Claim& claim, const Polynomial& derived) const {
    if (const auto* spec = std::get_if<SpecializationSpec>(&claim.rhs)) return substitute(derived, spec->lhs_bindings);
    return derived;
  }

  /// Largest n the oracle limits allow for this claim.
  unsigned oracle_cap(const Claim& claim) const {
    const auto* spec = std::get_if<OracleSpec>(&claim.rhs);
    if (spec == nullptr) return claim.n_max;
    const int cap = static_cast<int>(limits_.max_for(spec->family)) - spec->size_offset;
    return static_cast<unsigned>(std::max(cap, 0));
  }

 private:
  Polynomial evaluate(const TriangleSumSpec& spec, unsigned n) {
    std::vector<Polynomial::Term> terms;
    std::vector<Monomial::Entry> entries;
    auto add = [&](const Integer& coefficient, long k, long j) {
      if (coefficient == 0) return;
      entries.clear();
      for (const auto& a : spec.exponents) entries.emplace_back(a.symbol, a.at(n, k, j));
      terms.emplace_back(Monomial::from_entries(entries), Rational(coefficient));
    };
    if (spec.triangle) {
      const unsigned row = n + static_cast<unsigned>(spec.row_offset);
      const Triangle& t = tables_.triangle(*spec.triangle, row);
      KRange range = t.k_range(row);
      for (int k = range.lo; k <= range.hi; ++k) add(t.at(row, k), k, 0);
    } else {
      if (!dnij_ || dnij_->max_n() < n) dnij_ = d_nij_table(std::max(n, 16u));
      for (int i = 0; i <= static_cast<int>(n); ++i)
        for (int j = 0; i + j <= static_cast<int>(n); ++j) add(dnij_->at(n, i, j), i, j);
    }
    return Polynomial::from_terms(std::move(terms));
  }

  Polynomial evaluate(const OracleSpec& spec, unsigned n) const {
    const unsigned size = n + static_cast<unsigned>(spec.size_offset);
    return distribution(spec.family, size, spec.weights, spec.filter, limits_);
  }

  Polynomial evaluate(const SpecializationSpec& spec, unsigned n) {
    if (!spec.family) return rising_factorial(n);
    return substitute(tables_.family(*spec.family, n + static_cast<unsigned>(spec.family_offset)), spec.rhs_bindings);
  }

  SequenceTables& tables_;
  OracleLimits limits_;
  std::optional<TripleTable> dnij_;
};

/// Right-hand side of `claim` at n, computed from fresh tables.
inline Polynomial claim_polynomial(const CatalogEntry& entry, const Claim& claim, unsigned n) {
  bool owned = false;
  for (const auto& c : entry.claims) owned = owned || &c == &claim;
  if (!owned) throw LookupError("claim '" + claim.label + "' does not belong to entry '" + entry.key + "'");
  SequenceTables tables;
  ClaimEvaluator evaluator(tables);
  return evaluator.rhs(claim, n);
}

}  // namespace grammarcalc
