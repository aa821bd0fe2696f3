#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "grammarcalc/catalog.hpp"
#include "grammarcalc/errors.hpp"
#include "grammarcalc/grammar.hpp"
#include "grammarcalc/permutations.hpp"
#include "grammarcalc/polynomial.hpp"
#include "grammarcalc/recurrences.hpp"
#include "grammarcalc/series.hpp"

namespace grammarcalc {

/// Bounds for one verification run.
struct Profile {
  std::string name;
  unsigned identity_nmax;  // convolution, symmetry and definitional identities
  unsigned claims_nmax;    // grammar claims checked against recurrences
  unsigned oracle_sym;     // largest n enumerated over S_n
  unsigned oracle_hyp;     // largest n enumerated over B_n
  unsigned egf_order;

  static Profile quick() { return {"quick", 10, 10, 5, 5, 8}; }
  static Profile full() { return {"full", 15, 12, 7, 6, 12}; }

  /// Every bound set to `nmax`, with the oracle bounds clipped to the compiled limits.
  static Profile up_to(unsigned nmax) {
    return {"custom", nmax, nmax, std::min(nmax, OracleLimits::kCompiledMaxSymmetric - 2),
            std::min(nmax, OracleLimits::kCompiledMaxHyperoctahedral - 1), nmax};
  }

  static Profile parse(std::string_view name) {
    if (name == "quick") return quick();
    if (name == "full") return full();
    throw LookupError("unknown profile '" + std::string(name) + "' (expected quick or full)");
  }
};

/// The first failing instance of a check.
struct Witness {
  unsigned n;
  std::string lhs;
  std::string rhs;
  std::string detail;
};

struct CheckResult {
  std::string key;
  unsigned n_min = 0;
  unsigned n_max = 0;
  bool passed = true;
  std::size_t instances = 0;
  std::optional<Witness> witness;
};

/// A corrupted triangle entry, used to confirm that checks notice bad data.
struct TriangleFault {
  TriangleName triangle;
  unsigned n;
  int k;
  Integer value;
};

inline constexpr std::array<std::string_view, 20> kCheckKeys{
    "cor-2-2",       "symmetry-A",   "rising-factorial", "cor-3-3",  "prop-3-4",   "R-convolution", "bona",
    "M-convolution", "cor-4-2-poly", "cor-4-2-num",      "wexc-vs-des", "eq-8",    "grammar-claims", "egf-dA",
    "egf-dB",        "egf-G",        "pde-12",           "egf-5var", "rundef-w-A", "rundef-w-B"};

/// Names accepted by egf_reference.
inline constexpr std::array<std::string_view, 4> kEgfKeys{"egf-dA", "egf-dB", "egf-G", "egf-5var"};

namespace detail {

inline Polynomial X() { return Polynomial(Symbol("x")); }
inline Polynomial Y() { return Polynomial(Symbol("y")); }

/// sum_{k>=1} x c^k (y-x)^(k-1) t^k / k!, which is x/(y-x) (e^{c(y-x)t} - 1)
/// without the removable singularity at y = x.
inline TruncatedSeries removable_exponential(const Polynomial& c, unsigned order) {
  const Polynomial diff = Y() - X();
  std::vector<Polynomial> out(order + 1);
  Polynomial power = X();  // x c^k (y-x)^(k-1) / k!
  for (unsigned k = 1; k <= order; ++k) {
    power = power * c * ratio(1, k);
    if (k > 1) power = power * diff;
    out[k] = power;
  }
  return {default_series_variable(), std::move(out)};
}

inline Rational eval_at(const Polynomial& p, Symbol s, const Rational& value) {
  auto c = substitute(p, Bindings{{s, Polynomial(value)}}).constant_value();
  if (!c) throw DomainError("evaluation left free symbols in " + p.to_string());
  return *c;
}

}  // namespace detail

/// Closed-form right-hand side of an EGF identity, truncated at `order`, in
/// the series variable t.
inline TruncatedSeries egf_reference(std::string_view key, unsigned order) {
  const Polynomial x = detail::X();
  const Symbol t = default_series_variable();
  if (key == "egf-dA") {
    // (1-x) / (e^{xt} - x e^t)
    return series_reciprocal(series_exp(x, order, t) - x * series_exp(1, order, t), 1 - x);
  }
  if (key == "egf-dB") {
    // (1-x) / (e^{(2x-1)t} - x e^t)
    return series_reciprocal(series_exp(2 * x - 1, order, t) - x * series_exp(1, order, t), 1 - x);
  }
  if (key == "egf-G") {
    const TruncatedSeries denominator =
        TruncatedSeries::constant(1, order, t) - detail::removable_exponential(Polynomial(2), order);
    return series_exp(1 - 2 * x, order, t) * series_reciprocal(denominator, 1);
  }
  if (key == "egf-5var") {
    const Polynomial z(Symbol("z")), u(Symbol("u")), v(Symbol("v"));
    const TruncatedSeries denominator =
        TruncatedSeries::constant(1, order, t) - detail::removable_exponential(u + v, order);
    return series_exp(v * z - (u + v) * x, order, t) * series_reciprocal(denominator, 1);
  }
  throw LookupError("unknown generating function '" + std::string(key) + "'");
}

/// Runs the named checks. Each check builds its own tables, so checks are
/// independent and may run on separate threads.
class IdentitySuite {
 public:
  explicit IdentitySuite(std::vector<TriangleFault> faults = {},
                         OracleLimits limits = OracleLimits::from_environment())
      : faults_(std::move(faults)), limits_(limits) {}

  CheckResult run_check(std::string_view key, const Profile& profile) const {
    Context ctx(key, profile, limits_);
    for (const auto& f : faults_) ctx.tables.inject_fault(f.triangle, f.n, f.k, f.value);
    dispatch(ctx);
    return std::move(ctx.result);
  }

  CheckResult run_check(std::string_view key, unsigned nmax) const { return run_check(key, Profile::up_to(nmax)); }

  /// Every check in key order. `threads` = 0 uses the hardware concurrency.
  std::vector<CheckResult> run_all(const Profile& profile, unsigned threads = 0) const {
    std::vector<CheckResult> results(kCheckKeys.size());
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(kCheckKeys.size()));
    std::atomic<std::size_t> next{0};
    auto work = [&] {
      for (std::size_t i; (i = next.fetch_add(1)) < kCheckKeys.size();) results[i] = run_check(kCheckKeys[i], profile);
    };
    if (threads == 1) {
      work();
    } else {
      std::vector<std::jthread> pool;
      for (unsigned i = 0; i < threads; ++i) pool.emplace_back(work);
    }
    return results;
  }

 private:
  struct Context {
    Context(std::string_view key, const Profile& p, const OracleLimits& l) : profile(p), limits(l) {
      result.key = std::string(key);
    }

    const Profile& profile;
    const OracleLimits& limits;
    SequenceTables tables;
    CheckResult result;
    bool range_started = false;

    unsigned oracle_bound(GroupFamily f) const {
      const unsigned bound = f == GroupFamily::Symmetric ? profile.oracle_sym : profile.oracle_hyp;
      return std::min(bound, limits.max_for(f));
    }

    void compare(unsigned n, const Polynomial& lhs, const Polynomial& rhs, std::string detail = {}) {
      if (!range_started || n < result.n_min) result.n_min = n;
      if (!range_started || n > result.n_max) result.n_max = n;
      range_started = true;
      ++result.instances;
      if (lhs == rhs) return;
      result.passed = false;
      if (!result.witness || n < result.witness->n)
        result.witness = Witness{n, lhs.to_string(), rhs.to_string(), std::move(detail)};
    }

    void fail(unsigned n, std::string detail) {
      result.passed = false;
      if (!result.witness || n < result.witness->n) result.witness = Witness{n, "", "", std::move(detail)};
    }

    Polynomial fam(FamilyName f, unsigned n) { return tables.family(f, n); }
  };

  void dispatch(Context& c) const {
    using Check = void (IdentitySuite::*)(Context&) const;
    static const std::array<std::pair<std::string_view, Check>, kCheckKeys.size()> table{{
        {"cor-2-2", &IdentitySuite::cor_2_2},
        {"symmetry-A", &IdentitySuite::symmetry_a},
        {"rising-factorial", &IdentitySuite::rising},
        {"cor-3-3", &IdentitySuite::cor_3_3},
        {"prop-3-4", &IdentitySuite::prop_3_4},
        {"R-convolution", &IdentitySuite::r_convolution},
        {"bona", &IdentitySuite::bona},
        {"M-convolution", &IdentitySuite::m_convolution},
        {"cor-4-2-poly", &IdentitySuite::cor_4_2_poly},
        {"cor-4-2-num", &IdentitySuite::cor_4_2_num},
        {"wexc-vs-des", &IdentitySuite::wexc_vs_des},
        {"eq-8", &IdentitySuite::eq_8},
        {"grammar-claims", &IdentitySuite::grammar_claims},
        {"egf-dA", &IdentitySuite::egf_da},
        {"egf-dB", &IdentitySuite::egf_db},
        {"egf-G", &IdentitySuite::egf_g},
        {"pde-12", &IdentitySuite::pde_12},
        {"egf-5var", &IdentitySuite::egf_5var},
        {"rundef-w-A", &IdentitySuite::rundef_a},
        {"rundef-w-B", &IdentitySuite::rundef_b},
    }};
    for (const auto& [name, check] : table) {
      if (name != c.result.key) continue;
      try {
        (this->*check)(c);
      } catch (const Error& e) {
        c.fail(c.result.n_max, e.what());
      }
      return;
    }
    throw LookupError("unknown check key '" + c.result.key + "'");
  }

  // A_{n+1}(x;q) = q A_n(x;q) + q x sum_{k<n} C(n,k) A_k(x;q) A_{n-k}(x), n >= 1.
  void cor_2_2(Context& c) const {
    const Polynomial x = detail::X(), q(Symbol("q"));
    for (unsigned n = 1; n <= c.profile.identity_nmax; ++n) {
      Polynomial sum;
      for (unsigned k = 0; k < n; ++k) sum += Rational(binomial(n, k)) * c.fam(FamilyName::qA, k) * c.fam(FamilyName::A, n - k);
      c.compare(n, c.fam(FamilyName::qA, n + 1), q * c.fam(FamilyName::qA, n) + q * x * sum);
    }
  }

  // x^n A_n(1/x) = x A_n(x), n >= 1.
  void symmetry_a(Context& c) const {
    const Symbol x("x");
    for (unsigned n = 1; n <= c.profile.identity_nmax; ++n) {
      const Polynomial a = c.fam(FamilyName::A, n);
      const Polynomial reflected = substitute(a, {{x, laurent_pow(Polynomial(x), -1)}});
      c.compare(n, reflected.shifted(Monomial::variable(x, static_cast<Exponent>(n))), Polynomial(x) * a);
    }
  }

  // A_n(1;q) = q(q+1)...(q+n-1), and the cycle distribution over S_n agrees.
  void rising(Context& c) const {
    const Symbol x("x"), q("q");
    for (unsigned n = 0; n <= c.profile.identity_nmax; ++n) {
      const Polynomial r = rising_factorial(n, q);
      c.compare(n, substitute(c.fam(FamilyName::qA, n), {{x, 1}}), r, "recurrence");
      if (n <= c.oracle_bound(GroupFamily::Symmetric))
        c.compare(n, distribution(GroupFamily::Symmetric, n, {{Statistic::Cyc, q}}, ElementFilter::None, c.limits), r,
                  "oracle");
    }
  }

  // T_{n+1} = 2^n x M_n + (1+x) sum_{k=1}^n 2^{n-k} C(n,k) T_k M_{n-k}, n >= 0.
  void cor_3_3(Context& c) const {
    const Polynomial x = detail::X();
    for (unsigned n = 0; n <= c.profile.identity_nmax; ++n) {
      Polynomial sum;
      for (unsigned k = 1; k <= n; ++k)
        sum += Rational(binomial(n, k)) * pow(Rational(2), n - k) * c.fam(FamilyName::T, k) * c.fam(FamilyName::M, n - k);
      c.compare(n, c.fam(FamilyName::T, n + 1), pow(Rational(2), n) * x * c.fam(FamilyName::M, n) + (1 + x) * sum);
    }
  }

  // 2^{n-1} R_{n+1} = 2 T_n + ((1+x)/x) sum_{k=1}^{n-1} C(n,k) T_k T_{n-k}, n >= 2.
  void prop_3_4(Context& c) const {
    const Polynomial x = detail::X();
    const Monomial inverse_x = Monomial::variable(Symbol("x"), -1);
    for (unsigned n = 2; n <= c.profile.identity_nmax; ++n) {
      Polynomial sum;
      for (unsigned k = 1; k < n; ++k)
        sum += Rational(binomial(n, k)) * c.fam(FamilyName::T, k) * c.fam(FamilyName::T, n - k);
      c.compare(n, pow(Rational(2), n - 1) * c.fam(FamilyName::R, n + 1),
                2 * c.fam(FamilyName::T, n) + ((1 + x) * sum).shifted(inverse_x));
    }
  }

  // sum_k C(n,k) M_k(x) P_{n-k}(x^2)
  static Polynomial mp_convolution(Context& c, unsigned n) {
    const Symbol x("x");
    const Bindings squared{{x, Polynomial(x).pow(2)}};
    Polynomial sum;
    for (unsigned k = 0; k <= n; ++k)
      sum += Rational(binomial(n, k)) * c.fam(FamilyName::M, k) * substitute(c.fam(FamilyName::P, n - k), squared);
    return sum;
  }

  // (1+x) R_{n+1} = 2x sum_k C(n,k) M_k(x) P_{n-k}(x^2), n >= 1.
  void r_convolution(Context& c) const {
    const Polynomial x = detail::X();
    for (unsigned n = 1; n <= c.profile.identity_nmax; ++n)
      c.compare(n, (1 + x) * c.fam(FamilyName::R, n + 1), 2 * x * mp_convolution(c, n));
  }

  // M_n = (1+x) R_n / 2, n >= 2.
  void bona(Context& c) const {
    const Polynomial x = detail::X();
    for (unsigned n = 2; n <= c.profile.identity_nmax; ++n)
      c.compare(n, c.fam(FamilyName::M, n), ratio(1, 2) * (1 + x) * c.fam(FamilyName::R, n));
  }

  // M_{n+1} = x sum_k C(n,k) M_k(x) P_{n-k}(x^2), n >= 0.
  void m_convolution(Context& c) const {
    const Polynomial x = detail::X();
    for (unsigned n = 0; n <= c.profile.identity_nmax; ++n)
      c.compare(n, c.fam(FamilyName::M, n + 1), x * mp_convolution(c, n));
  }

  // d^B_{n+1} = d^B_n + x sum_{k<n} 2^{n-k+1} C(n,k) d^B_k A_{n-k}, n >= 1.
  void cor_4_2_poly(Context& c) const {
    const Polynomial x = detail::X();
    for (unsigned n = 1; n <= c.profile.identity_nmax; ++n) {
      Polynomial sum;
      for (unsigned k = 0; k < n; ++k)
        sum += Rational(binomial(n, k)) * pow(Rational(2), n - k + 1) * c.fam(FamilyName::dB, k) *
               c.fam(FamilyName::A, n - k);
      c.compare(n, c.fam(FamilyName::dB, n + 1), c.fam(FamilyName::dB, n) + x * sum);
    }
  }

  // d^B_{n+1} = d^B_n + n! sum_{k<n} 2^{n-k+1} d^B_k / k!, n >= 1, on the values at x = 1.
  void cor_4_2_num(Context& c) const {
    const Symbol x("x");
    auto value = [&](unsigned n) { return detail::eval_at(c.fam(FamilyName::dB, n), x, 1); };
    for (unsigned n = 1; n <= c.profile.identity_nmax; ++n) {
      Rational sum = 0;
      for (unsigned k = 0; k < n; ++k) sum += pow(Rational(2), n - k + 1) * value(k) / Rational(factorial(k));
      c.compare(n, Polynomial(value(n + 1)), Polynomial(value(n) + Rational(factorial(n)) * sum));
    }
  }

  // B_n(x) from the triangle equals the weak excedance distribution over B_n.
  void wexc_vs_des(Context& c) const {
    const Symbol x("x");
    for (unsigned n = 0; n <= c.oracle_bound(GroupFamily::Hyperoctahedral); ++n)
      c.compare(n, c.fam(FamilyName::B, n),
                distribution(GroupFamily::Hyperoctahedral, n, {{Statistic::Wexc, x}}, ElementFilter::None, c.limits));
  }

  // wexc + aexc + single = n on every type B derangement; the count is d^B_n(1).
  void eq_8(Context& c) const {
    const Symbol s("s"), x("x");
    for (unsigned n = 0; n <= c.oracle_bound(GroupFamily::Hyperoctahedral); ++n) {
      const Polynomial lhs = distribution(GroupFamily::Hyperoctahedral, n,
                                          {{Statistic::Wexc, s}, {Statistic::AexcB, s}, {Statistic::Single, s}},
                                          ElementFilter::Derangement, c.limits);
      const Rational count = detail::eval_at(c.fam(FamilyName::dB, n), x, 1);
      c.compare(n, lhs, Polynomial(Monomial::variable(s, static_cast<Exponent>(n)), count));
    }
  }

  // Every catalog claim, D^n(seed) against its right-hand side. Fails if any
  // claim goes unchecked under the profile.
  void grammar_claims(Context& c) const {
    ClaimEvaluator evaluator(c.tables, c.limits);
    for (const auto& entry : catalog()) {
      for (const auto& claim : entry.claims) {
        unsigned hi = std::min(claim.n_max, c.profile.claims_nmax);
        if (const auto* spec = std::get_if<OracleSpec>(&claim.rhs))
          hi = std::min({hi, evaluator.oracle_cap(claim), c.oracle_bound(spec->family)});
        const std::string where = entry.key + ": " + claim.label;
        if (hi < claim.n_min) {
          c.fail(claim.n_min, "claim not exercised: " + where);
          continue;
        }
        const auto derived = derive_sequence(entry.grammar, claim.seed, hi);
        for (unsigned n = claim.n_min; n <= hi; ++n)
          c.compare(n, evaluator.lhs(claim, derived[n]), evaluator.rhs(claim, n), where);
      }
    }
  }

  void egf_da(Context& c) const {
    const Symbol x("x");
    const TruncatedSeries ref = egf_reference("egf-dA", c.profile.egf_order);
    for (unsigned n = 0; n <= ref.order(); ++n) {
      const Polynomial coefficient = ref.egf_coefficient(n);
      c.compare(n, coefficient, c.fam(FamilyName::dA, n), "recurrence");
      c.compare(n, coefficient, c.fam(FamilyName::dA_altsum, n), "alternating sum");
      if (n <= c.oracle_bound(GroupFamily::Symmetric))
        c.compare(n, coefficient,
                  distribution(GroupFamily::Symmetric, n, {{Statistic::Exc, x}}, ElementFilter::Derangement, c.limits),
                  "oracle");
    }
  }

  void egf_db(Context& c) const {
    const Symbol x("x");
    const TruncatedSeries ref = egf_reference("egf-dB", c.profile.egf_order);
    for (unsigned n = 0; n <= ref.order(); ++n) {
      const Polynomial coefficient = ref.egf_coefficient(n);
      c.compare(n, coefficient, c.fam(FamilyName::dB, n), "recurrence");
      c.compare(n, coefficient, c.fam(FamilyName::dB_altsum, n), "alternating sum");
      if (n <= c.oracle_bound(GroupFamily::Hyperoctahedral))
        c.compare(n, coefficient,
                  distribution(GroupFamily::Hyperoctahedral, n, {{Statistic::Wexc, x}}, ElementFilter::Derangement,
                               c.limits),
                  "oracle");
    }
  }

  void egf_g(Context& c) const {
    const Symbol x("x"), y("y");
    const TruncatedSeries ref = egf_reference("egf-G", c.profile.egf_order);
    const TripleTable d = d_nij_table(ref.order());
    for (unsigned n = 0; n <= ref.order(); ++n) {
      const Polynomial coefficient = ref.egf_coefficient(n);
      c.compare(n, coefficient, d_xy_polynomial(n), "bivariate recurrence");
      c.compare(n, coefficient, d.generating_polynomial(n, x, y), "d(n,i,j) table");
      if (n <= std::min(c.oracle_bound(GroupFamily::Hyperoctahedral), 6u))
        c.compare(n, coefficient,
                  distribution(GroupFamily::Hyperoctahedral, n, {{Statistic::Wexc, x}, {Statistic::AexcB, y}},
                               ElementFilter::Derangement, c.limits),
                  "oracle");
    }
  }

  // (1-4xyt) G_t - G - (2xy-4x^2y) G_x - (2xy-4xy^2) G_y vanishes through order N-1.
  void pde_12(Context& c) const {
    const Symbol x("x"), y("y"), t = default_series_variable();
    const Polynomial X(x), Y(y);
    const TruncatedSeries g = egf_reference("egf-G", c.profile.egf_order);
    const unsigned order = g.order() == 0 ? 0 : g.order() - 1;
    if (g.order() == 0) return;
    const TruncatedSeries gt = series_partial(g, t);
    std::vector<Polynomial> t_gt(order + 1);
    for (unsigned n = 1; n <= order; ++n) t_gt[n] = gt[n - 1];
    const TruncatedSeries residual = gt - Polynomial(4 * X * Y) * TruncatedSeries(t, std::move(t_gt)) - g.truncated(order) -
                                     (2 * X * Y - 4 * X * X * Y) * series_partial(g, x).truncated(order) -
                                     (2 * X * Y - 4 * X * Y * Y) * series_partial(g, y).truncated(order);
    for (unsigned n = 0; n <= order; ++n) c.compare(n, residual[n], Polynomial{}, "residual coefficient");
  }

  void egf_5var(Context& c) const {
    const Symbol x("x"), y("y"), z("z"), u("u"), v("v");
    const TruncatedSeries ref = egf_reference("egf-5var", c.profile.egf_order);
    const TruncatedSeries g = egf_reference("egf-G", c.profile.egf_order);
    const Bindings collapse{{z, 1}, {u, 1}, {v, 1}};
    for (unsigned n = 0; n <= ref.order(); ++n) {
      const Polynomial coefficient = ref.egf_coefficient(n);
      c.compare(n, substitute(coefficient, collapse), g.egf_coefficient(n), "collapse to G");
      if (n <= std::min(c.oracle_bound(GroupFamily::Hyperoctahedral), 5u))
        c.compare(n, coefficient,
                  distribution(GroupFamily::Hyperoctahedral, n,
                               {{Statistic::Wexc, x},
                                {Statistic::AexcB, y},
                                {Statistic::Single, z},
                                {Statistic::Pos, u},
                                {Statistic::Neg, v}},
                               ElementFilter::Derangement, c.limits),
                  "oracle");
    }
  }

  // At x = (1-r^2)/(1+r^2) the radical w = sqrt((1-x)/(1+x)) equals r.
  static constexpr std::array<std::pair<int, int>, 3> kWPoints{{{1, 2}, {1, 3}, {2, 3}}};

  // R_n(x) = (1-w) ((1+x)/2)^{n-1} (1+w)^n A_n((1-w)/(1+w)), n >= 2.
  void rundef_a(Context& c) const {
    const Symbol x("x");
    for (unsigned n = 2; n <= c.profile.identity_nmax; ++n)
      for (auto [num, den] : kWPoints) {
        const Rational w = ratio(num, den);
        const Rational x0 = (1 - w * w) / (1 + w * w);
        const Rational rhs = (1 - w) * pow((1 + x0) / 2, n - 1) * pow(1 + w, n) *
                             detail::eval_at(c.fam(FamilyName::A, n), x, (1 - w) / (1 + w));
        c.compare(n, Polynomial(detail::eval_at(c.fam(FamilyName::R, n), x, x0)), Polynomial(rhs),
                  "w = " + to_string(w));
      }
  }

  // T_n(x) = (x/2) ((1+x)/2)^{n-1} (1+w)^n B_n((1-w)/(1+w)), n >= 2.
  void rundef_b(Context& c) const {
    const Symbol x("x");
    for (unsigned n = 2; n <= c.profile.identity_nmax; ++n)
      for (auto [num, den] : kWPoints) {
        const Rational w = ratio(num, den);
        const Rational x0 = (1 - w * w) / (1 + w * w);
        const Rational rhs = x0 / 2 * pow((1 + x0) / 2, n - 1) * pow(1 + w, n) *
                             detail::eval_at(c.fam(FamilyName::B, n), x, (1 - w) / (1 + w));
        c.compare(n, Polynomial(detail::eval_at(c.fam(FamilyName::T, n), x, x0)), Polynomial(rhs),
                  "w = " + to_string(w));
      }
  }

  std::vector<TriangleFault> faults_;
  OracleLimits limits_;
};

inline bool all_passed(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const CheckResult& r) { return r.passed; });
}

}  // namespace grammarcalc
