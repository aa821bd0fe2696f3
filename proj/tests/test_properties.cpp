#include <catch_amalgamated.hpp>

#include "grammarcalc/catalog.hpp"
#include "grammarcalc/series.hpp"
#include "random_poly.hpp"

using namespace grammarcalc;
using testing_support::RandomPolynomials;

namespace {
const Symbol x("x"), y("y"), z("z");
constexpr int kRuns = 1000;
}  // namespace

TEST_CASE("ring axioms", "[properties]") {
  RandomPolynomials gen(1, {x, y, z});
  for (int i = 0; i < kRuns; ++i) {
    const Polynomial a = gen.next(), b = gen.next(), c = gen.next();
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE((a - a).is_zero());
    REQUIRE(a * Polynomial(1) == a);
  }
}

TEST_CASE("printing round-trips through the parser", "[properties]") {
  RandomPolynomials gen(2, {x, y, z, Symbol("q")});
  for (int i = 0; i < kRuns; ++i) {
    const Polynomial a = gen.next();
    REQUIRE(Polynomial::parse(a.to_string()) == a);
  }
}

TEST_CASE("substitution is a ring homomorphism and composes", "[properties]") {
  RandomPolynomials gen(3, {x, y, z}, 0, 3);
  for (int i = 0; i < kRuns; ++i) {
    const Polynomial a = gen.next(), b = gen.next();
    const Bindings s1{{x, gen.next()}, {y, gen.next_rational()}};
    REQUIRE(substitute(a * b, s1) == substitute(a, s1) * substitute(b, s1));
    REQUIRE(substitute(a + b, s1) == substitute(a, s1) + substitute(b, s1));
    // substituting z then x equals substituting both, when the z image has no x
    const Polynomial zimg = substitute(gen.next(), {{x, 1}});
    const Bindings both{{z, zimg}, {x, substitute(s1.at(x), {{z, zimg}})}};
    REQUIRE(substitute(substitute(a, {{x, s1.at(x)}}), {{z, zimg}}) == substitute(a, both));
  }
}

TEST_CASE("partial derivatives obey the product rule", "[properties]") {
  RandomPolynomials gen(4, {x, y, z});
  for (int i = 0; i < kRuns; ++i) {
    const Polynomial a = gen.next(), b = gen.next();
    for (Symbol v : {x, y})
      REQUIRE(partial_derivative(a * b, v) == partial_derivative(a, v) * b + a * partial_derivative(b, v));
  }
}

TEST_CASE("series reciprocal round-trips", "[properties]") {
  RandomPolynomials gen(5, {x, y}, 0, 2, 3);
  for (int i = 0; i < 200; ++i) {
    Rational c0 = gen.next_rational();
    if (c0 == 0) c0 = 1;
    std::vector<Polynomial> coeffs{Polynomial(c0)};
    for (int k = 0; k < 6; ++k) coeffs.push_back(gen.next());
    const TruncatedSeries s(default_series_variable(), coeffs);
    const TruncatedSeries r = series_reciprocal(s, Polynomial(1));
    REQUIRE(s * r == TruncatedSeries::constant(1, s.order()));
  }
}

TEST_CASE("grammar derivations obey Leibniz and additivity", "[properties]") {
  std::uint32_t seed = 100;
  for (const auto& entry : catalog()) {
    INFO(entry.key);
    const auto& alpha = entry.grammar.alphabet();
    RandomPolynomials gen(seed++, {alpha.begin(), alpha.end()}, 0, 2, 3);
    for (int i = 0; i < kRuns; ++i) {
      const Polynomial a = gen.next(), b = gen.next();
      const Rational c = gen.next_rational();
      const Polynomial da = derive_once(entry.grammar, a), db = derive_once(entry.grammar, b);
      REQUIRE(derive_once(entry.grammar, a * b) == da * b + a * db);
      REQUIRE(derive_once(entry.grammar, a + Polynomial(c) * b) == da + Polynomial(c) * db);
    }
  }
}

TEST_CASE("iterated derivations compose", "[properties]") {
  RandomPolynomials gen(6, {x, y, z}, 0, 2, 3);
  const auto& g = catalog_get("derangement-b").grammar;
  for (int i = 0; i < 100; ++i) {
    const Polynomial a = gen.next(), b = gen.next();
    REQUIRE(derive_n(g, derive_n(g, a, 2), 1) == derive_n(g, a, 3));
    REQUIRE(derive_n(g, a + b, 2) == derive_n(g, a, 2) + derive_n(g, b, 2));
  }
}
