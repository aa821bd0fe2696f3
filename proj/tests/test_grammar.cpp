#include <catch_amalgamated.hpp>

#include "grammarcalc/catalog.hpp"
#include "grammarcalc/grammar.hpp"

using namespace grammarcalc;

namespace {
Polynomial P(std::string_view s) { return Polynomial::parse(s); }
}  // namespace

TEST_CASE("single derivation steps", "[grammar]") {
  const Grammar dumont = parse_grammar("x -> x*y; y -> x*y");
  CHECK(derive_once(dumont, P("x")) == P("x*y"));

  const Grammar g3 = parse_grammar("x -> q*x*y*u; y -> x*y*z; z -> y*z*u; u -> q*x*z*u");
  CHECK(derive_once(g3, P("x*y")) == P("x^2*y*z + q*x*y^2*u"));

  const Grammar thm41 = catalog_get("derangement-b").grammar;
  CHECK(derive_once(thm41, P("z^4")) == P("4*x^2*y^2"));
  CHECK(derive_once(thm41, P("z^-1")) == P("-x^2*y^2*z^-5"));
}

TEST_CASE("iterated derivation", "[grammar]") {
  const Grammar thm41 = catalog_get("derangement-b").grammar;
  CHECK(derive_n(thm41, P("e"), 0) == P("e"));
  CHECK(derive_n(thm41, P("e"), 2) == P("e*z^8 + 4*e*x^2*y^2"));

  const Grammar thm32 = catalog_get("runs-b").grammar;
  CHECK(derive_n(thm32, P("x^3*y"), 2) == P("x^3*y") * P("z^4 + 12*y^2*z^2 + 11*y^4"));

  const auto seq = derive_sequence(thm32, P("x*y"), 3);
  REQUIRE(seq.size() == 4);
  CHECK(seq[0] == P("x*y"));
  CHECK(seq[3] == derive_n(thm32, P("x*y"), 3));
}

TEST_CASE("unruled symbols", "[grammar]") {
  const Grammar lenient = parse_grammar("x -> q*x*y; y -> y*z; z -> y*z");
  CHECK_FALSE(lenient.strict());
  CHECK(derive_once(lenient, P("q^2*x")) == P("q^3*x*y"));
  const Grammar strict = lenient.with_strict(true);
  CHECK_THROWS_AS(derive_once(strict, P("q*x")), UnruledSymbolError);
  CHECK(derive_once(strict, P("x")) == P("q*x*y"));
}

TEST_CASE("grammar DSL", "[grammar]") {
  const Grammar dumont = parse_grammar("x -> x*y; y -> x*y");
  CHECK(dumont.rules().size() == 2);
  CHECK(dumont.to_string() == "x -> x*y; y -> x*y");
  CHECK(parse_grammar(dumont.to_string()).rules() == dumont.rules());

  const Grammar laurent = parse_grammar("z -> x^2*y^2*z^-3");
  CHECK(*laurent.rule(Symbol("z")) == P("x^2*y^2*z^-3"));
  CHECK(laurent.alphabet().size() == 3);

  const Grammar multi = parse_grammar("# Dumont\nx |-> x*y\n\ny -> x*y   # second rule\n");
  CHECK(multi.rules() == dumont.rules());

  CHECK_THROWS_AS(parse_grammar("x -> "), ParseError);
  CHECK_THROWS_AS(parse_grammar(""), ParseError);
  CHECK_THROWS_AS(parse_grammar("x -> y; x -> z"), ParseError);
  CHECK_THROWS_AS(parse_grammar("x = y"), ParseError);
  CHECK_THROWS_AS(parse_grammar("x -> y z"), ParseError);
  try {
    parse_grammar("x -> y\ny -> $");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 6);
  }
}

TEST_CASE("Dumont derivatives are homogeneous of degree n+1", "[grammar]") {
  const Grammar dumont = catalog_get("eulerian-dumont").grammar;
  const auto seq = derive_sequence(dumont, P("x"), 9);
  for (unsigned n = 0; n < seq.size(); ++n)
    for (const auto& [m, c] : seq[n].terms()) CHECK(m.total_degree() == static_cast<long long>(n) + 1);
}
