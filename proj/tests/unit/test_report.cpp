#include <doctest.h>

#include <sstream>

#include "pwordle/report.hpp"

using namespace pwordle;

TEST_CASE("gf json is byte-stable") {
  const auto j = report::to_json(generating_function(inductive(Permutation{2, 3, 4, 1})));
  CHECK(j.dump() == R"({"n":4,"coeffs":{"1":1,"2":11,"3":11,"4":1},"loops":0})");
}

TEST_CASE("polynomial rendering") {
  CHECK(report::polynomial(generating_function(cyclic_shift(4))) == "x^4 + 11x^3 + 11x^2 + x");
  CHECK(report::polynomial(generating_function(cyclic_shift_left_top(5))) ==
        "5x^6 + 11x^5 + 26x^4 + 51x^3 + 26x^2 + x");
}

TEST_CASE("scan csv columns") {
  const ScanResult res = scan(4, StrategyClass::inductive, {.threads = 1});
  std::ostringstream os;
  report::write_scan_csv(os, res);
  std::istringstream in(os.str());
  std::string header, first;
  std::getline(in, header);
  std::getline(in, first);
  CHECK(header == "strategy_id,n,a_1,a_2,a_3,a_4,loops,avg_num,avg_den,rho1,rho2,rho3");
  // Lexicographically first cyclic top of length 4 is [2,3,4,1].
  CHECK(first == "\"[2,3,4,1]\",4,1,11,11,1,0,5,2,4,6,1");
}

TEST_CASE("trace json") {
  const auto j = report::to_json(play(Permutation{4, 1, 2, 3}, cyclic_shift(4)));
  CHECK(j["status"] == "solved");
  CHECK(j["guesses"] == 2);
  CHECK(j["rounds"][1]["correct"] == nlohmann::ordered_json({1, 2, 3, 4}));
}

TEST_CASE("verification report json shape") {
  const auto j = report::to_json(verify("rho3", std::pair{4, 4}));
  CHECK(j["id"] == "rho3");
  CHECK(j["range"] == nlohmann::ordered_json({4, 4}));
  CHECK(j["status"] == "pass");
  CHECK(j["rows"][0].contains("observed"));
}
