#include <catch_amalgamated.hpp>

#include "brute_force.hpp"
#include "grammarcalc/permutations.hpp"
#include "grammarcalc/recurrences.hpp"

using namespace grammarcalc;

namespace {
Polynomial P(std::string_view s) { return Polynomial::parse(s); }
const Symbol x("x"), y("y"), q("q");

std::vector<Integer> ints(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

std::vector<Integer> as_integers(const std::vector<long>& counts) {
  std::vector<Integer> out;
  for (long v : counts) out.emplace_back(v);
  return out;
}
}  // namespace

TEST_CASE("triangle rows", "[recurrences]") {
  const auto s4 = brute::symmetric_group(4);
  CHECK(triangle(TriangleName::EulerA, 4).row(4) == as_integers(brute::histogram(s4, brute::excedances)));
  CHECK(triangle(TriangleName::EulerA, 4).row(4) == ints({1, 11, 11, 1}));
  CHECK(triangle(TriangleName::RunsT, 4).row(4) == ints({1, 39, 95, 57}));
  const auto b1 = brute::signed_group(1);
  CHECK(triangle(TriangleName::EulerB, 1).row(1) == as_integers(brute::histogram(b1, brute::type_b_descents)));
  CHECK(triangle(TriangleName::EulerB, 1).row(1) == ints({1, 1}));
  CHECK(triangle(TriangleName::RunsR, 1).row(1) == ints({1}));
  CHECK(triangle(TriangleName::UpDownM, 1).row(1) == ints({0, 1}));
  CHECK(triangle(TriangleName::LeftPeakP, 1).row(1) == ints({1}));
  CHECK(triangle(TriangleName::EulerA, 0).row(0) == ints({1}));
}

TEST_CASE("triangle rows against direct enumeration", "[recurrences]") {
  for (int n = 2; n <= 6; ++n) {
    const auto s = brute::symmetric_group(n);
    const auto b = brute::signed_group(n);
    const auto un = static_cast<unsigned>(n);
    auto padded = [](std::vector<long> h, std::size_t width) {
      h.resize(width, 0);
      return as_integers(h);
    };
    CHECK(triangle(TriangleName::RunsR, un).row(un) == padded(brute::histogram(s, brute::alternating_runs), un));
    CHECK(triangle(TriangleName::UpDownM, un).row(un) == padded(brute::histogram(s, brute::up_down_runs), un + 1));
    CHECK(triangle(TriangleName::LeftPeakP, un).row(un) == padded(brute::histogram(s, brute::left_peaks), un / 2 + 1));
    CHECK(triangle(TriangleName::EulerB, un).row(un) == padded(brute::histogram(b, brute::type_b_descents), un + 1));
    const auto up_runs =
        brute::histogram(b, brute::signed_runs, [](const brute::Word& w) { return w[0] > 0; });
    auto expected = padded(up_runs, un + 1);
    expected.erase(expected.begin());  // runsT rows start at k = 1
    CHECK(triangle(TriangleName::RunsT, un).row(un) == expected);
  }
}

TEST_CASE("row sums", "[recurrences]") {
  for (unsigned n = 1; n <= 12; ++n) {
    const Integer f = factorial(n);
    CHECK(triangle(TriangleName::EulerA, n).row_sum(n) == f);
    CHECK(triangle(TriangleName::EulerB, n).row_sum(n) == f * (Integer(1) << n));
    CHECK(triangle(TriangleName::RunsT, n).row_sum(n) == f * (Integer(1) << (n - 1)));
    CHECK(triangle(TriangleName::UpDownM, n).row_sum(n) == f);
    CHECK(triangle(TriangleName::LeftPeakP, n).row_sum(n) == f);
    if (n >= 2) CHECK(triangle(TriangleName::RunsR, n).row_sum(n) == f);
  }
}

TEST_CASE("triangle access and export", "[recurrences]") {
  const Triangle t = triangle(TriangleName::RunsT, 4);
  CHECK(t.at(4, 0) == 0);
  CHECK(t.at(4, 7) == 0);
  CHECK(t.at(4, 2) == 39);
  CHECK_THROWS_AS(t.row(5), RangeError);
  CHECK(t.to_csv() == "1\n1,3\n1,12,11\n1,39,95,57\n");
  CHECK(t.with_entry(4, 2, 40).at(4, 2) == 40);
  CHECK_THROWS_AS(parse_triangle_name("pascal"), LookupError);
  CHECK(triangle_name(parse_triangle_name("leftpeakP")) == "leftpeakP");
}

TEST_CASE("polynomial families", "[recurrences]") {
  CHECK(substitute(family_polynomial(FamilyName::qA, 2), {{q, 1}}) == P("1 + x"));
  CHECK(family_polynomial(FamilyName::dB, 4) == P("1 + 72*x + 144*x^2 + 16*x^3"));
  CHECK(family_polynomial(FamilyName::dB, 1) == Polynomial(1));
  CHECK(family_polynomial(FamilyName::dB, 2) == P("1 + 4*x"));
  CHECK(family_polynomial(FamilyName::dB, 3) == P("1 + 20*x + 8*x^2"));
  CHECK(family_polynomial(FamilyName::dA, 1).is_zero());
  CHECK(family_polynomial(FamilyName::dA, 0) == Polynomial(1));
  CHECK(family_polynomial(FamilyName::T, 4) == P("x + 39*x^2 + 95*x^3 + 57*x^4"));
  CHECK(family_polynomial(FamilyName::R, 1).is_zero());
  CHECK(family_polynomial(FamilyName::R, 2) == P("2*x"));
  CHECK(family_polynomial(FamilyName::M, 2) == P("x + x^2"));
  CHECK(family_polynomial(FamilyName::M, 0) == Polynomial(1));
  CHECK(family_polynomial(FamilyName::P, 0) == Polynomial(1));
  CHECK_THROWS_AS(family_polynomial(FamilyName::T, 0), RangeError);
  CHECK_THROWS_AS(parse_family_polynomial_name("Z"), LookupError);
}

TEST_CASE("families agree with their alternative definitions", "[recurrences]") {
  SequenceTables tables;
  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(tables.family(FamilyName::dA, n) == tables.family(FamilyName::dA_altsum, n));
    CHECK(tables.family(FamilyName::dB, n) == tables.family(FamilyName::dB_altsum, n));
    CHECK(substitute(tables.family(FamilyName::qA, n), {{q, 1}}) == tables.family(FamilyName::A, n));
    CHECK(substitute(tables.family(FamilyName::qB, n), {{q, 1}}) == tables.family(FamilyName::B, n));
    CHECK(tables.family(FamilyName::dA, n) ==
          distribution(GroupFamily::Symmetric, n, {{Statistic::Exc, x}}, ElementFilter::Derangement));
    if (n <= 6)
      CHECK(tables.family(FamilyName::dB, n) ==
            distribution(GroupFamily::Hyperoctahedral, n, {{Statistic::Wexc, x}}, ElementFilter::Derangement));
  }
}

TEST_CASE("three-index derangement table", "[recurrences]") {
  const TripleTable d = d_nij_table(8);
  CHECK(d.at(0, 0, 0) == 1);
  CHECK(d.at(1, 0, 0) == 1);
  CHECK(d.at(1, 1, 0) == 0);
  CHECK(d.at(1, 0, 1) == 0);
  CHECK(d.at(2, 0, 0) == 1);
  CHECK(d.at(2, 1, 1) == 4);
  CHECK(d.at(3, 2, 2) == 0);

  const auto b3 = brute::signed_group(3);
  const auto derangements = std::count_if(b3.begin(), b3.end(), brute::is_derangement);
  Integer total = 0;
  for (int i = 0; i <= 3; ++i)
    for (int j = 0; i + j <= 3; ++j) total += d.at(3, i, j);
  CHECK(total == derangements);
  CHECK(total == 29);

  for (unsigned n = 0; n <= 8; ++n) {
    CHECK(d.generating_polynomial(n, x, y) == d_xy_polynomial(n));
    CHECK(substitute(d.generating_polynomial(n, x, y), {{y, 1}}) == family_polynomial(FamilyName::dB, n));
  }
  CHECK_THROWS_AS(d.at(9, 0, 0), RangeError);
}

TEST_CASE("rising factorial", "[recurrences]") {
  CHECK(rising_factorial(0) == Polynomial(1));
  CHECK(rising_factorial(2) == P("q^2 + q"));
  CHECK(substitute(rising_factorial(3), {{q, 1}}) == Polynomial(6));
  CHECK(rising_factorial(3, x) == P("x^3 + 3*x^2 + 2*x"));
}

TEST_CASE("fault injection changes only the targeted entry", "[recurrences]") {
  SequenceTables tables;
  tables.inject_fault(TriangleName::EulerA, 3, 1, 5);
  CHECK(tables.triangle(TriangleName::EulerA, 4).at(3, 1) == 5);
  CHECK(tables.triangle(TriangleName::EulerA, 4).at(4, 1) == 11);
  CHECK(tables.family(FamilyName::A, 3) == P("1 + 5*x + x^2"));
}
