#include <catch_amalgamated.hpp>

#include <set>

#include "brute_force.hpp"
#include "grammarcalc/catalog.hpp"

using namespace grammarcalc;

namespace {
Polynomial P(std::string_view s) { return Polynomial::parse(s); }

const Claim& find_claim(const CatalogEntry& entry, std::string_view seed, ClaimKind kind) {
  for (const auto& c : entry.claims)
    if (c.seed == P(seed) && c.kind() == kind) return c;
  throw LookupError("no such claim");
}
}  // namespace

TEST_CASE("catalog contents", "[catalog]") {
  const std::vector<std::string> keys{"eulerian-dumont", "typeB-ma",           "q-eulerian-a",
                                      "q-eulerian-b",    "runs-a",             "runs-b",
                                      "derangement-a-dumont", "derangement-b", "derangement-b-q"};
  REQUIRE(catalog().size() == keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) CHECK(catalog()[i].key == keys[i]);

  CHECK(catalog_get("eulerian-dumont").grammar.rules().size() == 2);
  const auto& seeds = catalog_get("runs-b").seeds;
  CHECK(std::find(seeds.begin(), seeds.end(), P("y^2")) != seeds.end());
  CHECK_THROWS_AS(catalog_get("nosuch"), LookupError);
}

TEST_CASE("every claim refers to a seed of its entry and every entry has an oracle claim", "[catalog]") {
  for (const auto& entry : catalog()) {
    bool oracle = false;
    for (const auto& claim : entry.claims) {
      CHECK(std::find(entry.seeds.begin(), entry.seeds.end(), claim.seed) != entry.seeds.end());
      CHECK(claim.n_min <= claim.n_max);
      oracle = oracle || claim.kind() == ClaimKind::OracleDistribution;
    }
    CHECK(oracle);
  }
}

TEST_CASE("claim right-hand sides", "[catalog]") {
  const auto& d = catalog_get("derangement-b");
  CHECK(claim_polynomial(d, find_claim(d, "e", ClaimKind::TriangleSum), 2) == P("e*z^8 + 4*e*x^2*y^2"));

  const auto& runs = catalog_get("runs-b");
  CHECK(claim_polynomial(runs, find_claim(runs, "x^3*y", ClaimKind::TriangleSum), 3) ==
        P("x^3*y") * P("z^6 + 39*y^2*z^4 + 95*y^4*z^2 + 57*y^6"));

  // S_1 has one permutation: one anti-excedance, one cycle
  const auto s1 = brute::symmetric_group(1);
  REQUIRE(s1.size() == 1);
  CHECK(brute::cycles(s1[0]) == 1);
  CHECK(brute::excedances(s1[0]) == 0);
  const auto& qa = catalog_get("q-eulerian-a");
  CHECK(claim_polynomial(qa, find_claim(qa, "x", ClaimKind::OracleDistribution), 1) == P("x*y*q"));

  CHECK_THROWS_AS(claim_polynomial(d, find_claim(d, "e", ClaimKind::TriangleSum), 13), RangeError);
  CHECK_THROWS_AS(claim_polynomial(d, runs.claims.front(), 1), LookupError);
}

TEST_CASE("claims hold at small n", "[catalog]") {
  SequenceTables tables;
  ClaimEvaluator evaluator(tables);
  for (const auto& entry : catalog())
    for (const auto& claim : entry.claims) {
      const unsigned hi = std::min({claim.n_max, evaluator.oracle_cap(claim), 5u});
      const auto derived = derive_sequence(entry.grammar, claim.seed, hi);
      for (unsigned n = claim.n_min; n <= hi; ++n) {
        INFO(entry.key << ": " << claim.label << " at n = " << n);
        CHECK(evaluator.lhs(claim, derived[n]) == evaluator.rhs(claim, n));
      }
    }
}

TEST_CASE("specializations", "[catalog]") {
  const Symbol y("y"), z("z"), q("q");
  const auto& qa = catalog_get("q-eulerian-a");
  // D^2(x) at y = z = 1 is x q (q + 1)
  CHECK(substitute(derive_n(qa.grammar, P("x"), 2), {{y, 1}, {z, 1}}) == P("x*q^2 + x*q"));

  const auto& d = catalog_get("derangement-b");
  CHECK(derive_n(d.grammar, P("x^2*y^2"), 1) == P("2*x^2*y^4 + 2*x^4*y^2"));
}
