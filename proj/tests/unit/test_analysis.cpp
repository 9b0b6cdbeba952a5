#include <doctest.h>

#include "oracle.hpp"
#include "pwordle/analysis.hpp"
#include "pwordle/closedform.hpp"
#include "pwordle/error.hpp"

using namespace pwordle;

namespace {

using Coeffs = std::vector<std::uint64_t>;

GFCoefficients oracle_gf(const Strategy& s) {
  oracle::Components comps;
  for (const auto& c : s.components()) comps.push_back(c.to_vector());
  GFCoefficients gf;
  gf.n = s.length();
  for (const auto& [r, count] : oracle::gf(comps)) {
    if (r == 0) {
      gf.loop_count = static_cast<std::uint64_t>(count);
      continue;
    }
    if (static_cast<int>(gf.coefficients.size()) < r) gf.coefficients.resize(static_cast<std::size_t>(r), 0);
    gf.coefficients[static_cast<std::size_t>(r - 1)] = static_cast<std::uint64_t>(count);
  }
  return gf;
}

}  // namespace

TEST_CASE("generating_function reproduces the reference inductive examples") {
  CHECK(generating_function(cyclic_shift(4)).coefficients == Coeffs{1, 11, 11, 1});
  CHECK(generating_function(inductive(Permutation{4, 3, 1, 5, 2})).coefficients == Coeffs{1, 26, 60, 25, 8});
  CHECK(generating_function(cyclic_shift_left_top(5)).coefficients == Coeffs{1, 26, 51, 26, 11, 5});
  CHECK(generating_function(inductive(Permutation{3, 5, 2, 1, 4})).coefficients == Coeffs{1, 26, 55, 27, 10, 1});
  CHECK(generating_function(inductive(Permutation{3, 5, 2, 1, 4}), GfMethod::playback).coefficients ==
        Coeffs{1, 26, 55, 27, 10, 1});
}

TEST_CASE("generating_function counts looping secrets") {
  const Strategy s = from_components({{1}, {2, 1}, {2, 3, 1}, {2, 1, 4, 3}});
  const GFCoefficients play = generating_function(s, GfMethod::playback);
  const GFCoefficients dec = generating_function(s, GfMethod::decomposition);
  CHECK(play == dec);
  CHECK(play.loop_count > 0);
  CHECK(play.total() == 24);
  CHECK(average_guesses(play).infinite);
}

TEST_CASE("average_guesses") {
  CHECK(average_guesses(generating_function(cyclic_shift(4))).value == Rational(5, 2));
  CHECK(average_guesses(generating_function(cyclic_shift(1))).value == Rational(1));
  CHECK(average_guesses(generating_function(cyclic_shift(2))).value == Rational(3, 2));
  CHECK(average_guesses(generating_function(cyclic_shift(4))).to_string() == "5/2");
}

TEST_CASE("rho_class_counts") {
  CHECK(rho_class_counts(cyclic_shift(4)) == RhoCounts{4, 6, 1});
  CHECK(rho_class_counts(cyclic_shift_left_top(4)) == RhoCounts{4, 2, 1});
  CHECK(rho_class_counts(cyclic_shift(5)) == RhoCounts{45, 20, 1});
  for (const auto& s : enumerate_strategies(5, StrategyClass::inductive)) {
    SubgameMemo memo(s);
    REQUIRE(rho_class_counts_decomposition(s, memo) == rho_class_counts(s));
  }
}

TEST_CASE("average_j2_over_derangements") {
  CHECK(average_j2_over_derangements(Permutation{2, 3, 4, 1}) == Rational(4, 3));
  CHECK(average_j2_over_derangements(Permutation{2, 1, 4, 3}) == Rational(4, 3));
  CHECK(average_j2_over_derangements(Permutation{2, 1}) == Rational(2));
  CHECK_THROWS_AS(average_j2_over_derangements(Permutation{1, 3, 2}), InvalidStrategy);
}

TEST_CASE("scan examples") {
  const ScanResult ind4 = scan(4, StrategyClass::inductive, {.threads = 1});
  CHECK(ind4.rows.size() == 6);
  CHECK(ind4.summary.max_a3.value_or_numerator == 11);
  CHECK(ind4.summary.max_a3.labels == std::vector<std::string>{"[2,3,4,1]"});
  CHECK(ind4.summary.min_a3.value_or_numerator == 7);
  CHECK(ind4.summary.min_a3.labels == std::vector<std::string>{"[4,1,2,3]"});

  const ScanResult cyc3 = scan(3, StrategyClass::cyclic, {.threads = 1});
  CHECK(cyc3.rows.size() == 2);
  for (const auto& row : cyc3.rows) CHECK(row.gf.coefficient(3) == 1);

  const ScanResult ind5 = scan(5, StrategyClass::inductive, {.threads = 2});
  CHECK(ind5.rows.size() == 24);
  CHECK(ind5.summary.max_a3.value_or_numerator == 66);
  CHECK(ind5.summary.max_a3.labels == std::vector<std::string>{"[2,3,4,5,1]"});
  CHECK(ind5.summary.min_a3.value_or_numerator == 51);
  CHECK(ind5.summary.min_a3.labels == std::vector<std::string>{"[5,1,2,3,4]"});
}

TEST_CASE("scan rows are in enumeration order and independent of thread count") {
  const ScanResult one = scan(5, StrategyClass::deranged, {.threads = 1});
  const ScanResult four = scan(5, StrategyClass::deranged, {.threads = 4});
  REQUIRE(one.rows.size() == four.rows.size());
  const StrategySpace space(5, StrategyClass::deranged);
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    REQUIRE(one.rows[i].index == i);
    REQUIRE(one.rows[i].strategy == space.at(i));
    REQUIRE(one.rows[i].gf == four.rows[i].gf);
    REQUIRE(one.rows[i].rho == four.rows[i].rho);
  }
  CHECK(one.summary.min_average.indices == four.summary.min_average.indices);
  CHECK(one.summary.max_a3.indices == four.summary.max_a3.indices);
}

TEST_CASE("scan refuses work over the cost threshold") {
  CHECK(scan_cost_estimate(4, StrategyClass::inductive) == doctest::Approx(6.0 * (1 + 2 + 9)));
  try {
    scan(7, StrategyClass::cyclic);
    FAIL("expected refusal");
  } catch (const ScanRefused& e) {
    CHECK(e.estimate() > 1e10);
  }
  CHECK_THROWS_AS(scan(5, StrategyClass::cyclic, {.max_cost = 10}), ScanRefused);
}

TEST_CASE("property: playback, decomposition and oracle agree on every cyclic strategy of length 5") {
  for (const auto& s : enumerate_strategies(5, StrategyClass::cyclic)) {
    const GFCoefficients dec = generating_function(s);
    REQUIRE(dec == generating_function(s, GfMethod::playback));
    REQUIRE(dec == oracle_gf(s));
  }
}

TEST_CASE("property: linear and quadratic coefficients over small families") {
  for (int n = 2; n <= 5; ++n) {
    for (const auto& row : scan(n, StrategyClass::deranged, {.threads = 1}).rows) {
      REQUIRE(row.gf.coefficient(1) == 1);
      REQUIRE(row.gf.coefficient(2) == static_cast<std::uint64_t>(closedform::eulerian_second(n)));
      REQUIRE(row.gf.total() == static_cast<std::uint64_t>(closedform::factorial(n)));
    }
  }
}

TEST_CASE("property: rho = 1 and rho = 3 classes are fixed across inductive strategies") {
  for (int n = 4; n <= 6; ++n) {
    for (const auto& row : scan(n, StrategyClass::inductive, {.threads = 1}).rows) {
      REQUIRE(row.rho[0] == static_cast<std::uint64_t>(closedform::rho1_closed_form(n)));
      REQUIRE(row.rho[2] == 1);
      REQUIRE(row.rho[0] + row.rho[1] + row.rho[2] == row.gf.coefficient(3));
    }
  }
}

TEST_CASE("property: derangements solved in three by cyclic shift") {
  for (int n = 3; n <= 7; ++n) {
    const Strategy cs = cyclic_shift(n);
    std::int64_t count = 0;
    for_each_permutation(n, PermClass::derangements, [&](const Permutation& d) {
      count += play(d, cs).rounds() == 3;
      return true;
    });
    CHECK(count == closedform::der2ex_count(n));
  }
}

TEST_CASE("property: a strategy and its mirror share the generating function") {
  for (int n = 3; n <= 5; ++n)
    for (const auto& s : enumerate_strategies(n, StrategyClass::deranged))
      REQUIRE(generating_function(mirror(s)) == generating_function(s));
}
