#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "pwordle/engine.hpp"
#include "pwordle/strategy.hpp"

namespace pwordle {

using Rational = boost::rational<std::int64_t>;

/// Coefficients of f_S(x): `coefficients[r - 1]` secrets are solved in exactly
/// r guesses. Trailing zero coefficients are trimmed.
struct GFCoefficients {
  int n = 0;
  std::vector<std::uint64_t> coefficients;
  std::uint64_t loop_count = 0;

  std::uint64_t coefficient(int r) const noexcept {
    return r >= 1 && r <= static_cast<int>(coefficients.size()) ? coefficients[static_cast<std::size_t>(r - 1)] : 0;
  }
  std::uint64_t total() const noexcept;
  int max_rounds() const noexcept { return static_cast<int>(coefficients.size()); }

  friend bool operator==(const GFCoefficients&, const GFCoefficients&) = default;
};

/// Exact average guess count, infinite when some secret is never solved.
struct AverageGuesses {
  bool infinite = false;
  Rational value{0};

  std::string to_string() const;
  double to_double() const;
  friend bool operator==(const AverageGuesses&, const AverageGuesses&) = default;
  /// Finite averages order by value; infinite ones sort after all of them.
  friend bool operator<(const AverageGuesses& a, const AverageGuesses& b) {
    if (a.infinite || b.infinite) return !a.infinite && b.infinite;
    return a.value < b.value;
  }
};

/// Counts of secrets solved in exactly three guesses, split by rho = 1, 2, 3.
using RhoCounts = std::array<std::uint64_t, 3>;

enum class GfMethod { playback, decomposition };

/// f_S by playing all n! secrets.
GFCoefficients generating_function_playback(const Strategy& strategy);
/// f_S from subgame values: a_{1+t} = sum_k C(n,k) |{d in D_k : T(d) = t}|.
GFCoefficients generating_function_decomposition(const Strategy& strategy, SubgameMemo& memo);
GFCoefficients generating_function(const Strategy& strategy, GfMethod method = GfMethod::decomposition);

AverageGuesses average_guesses(const GFCoefficients& gf);

/// rho-class split of the cubic coefficient by brute-force playback.
RhoCounts rho_class_counts(const Strategy& strategy);
/// Same split computed from subgame values.
RhoCounts rho_class_counts_decomposition(const Strategy& strategy, SubgameMemo& memo);

/// Mean |J_2| over all derangement secrets when `component` drives the
/// second guess from the identity.
Rational average_j2_over_derangements(const Permutation& component);

struct ScanRow {
  std::uint64_t index = 0;
  Strategy strategy;
  GFCoefficients gf;
  AverageGuesses average;
  RhoCounts rho{};
};

struct ScanExtremum {
  std::uint64_t value_or_numerator = 0;  // a_3, rho-2 count, or average numerator over n!
  std::vector<std::uint64_t> indices;    // every strategy attaining it, increasing
  std::vector<std::string> labels;
};

struct ScanSummary {
  std::uint64_t strategies = 0;
  std::uint64_t strategies_with_loops = 0;
  ScanExtremum min_average;  // numerator of the average over denominator n!
  bool min_average_infinite = false;
  ScanExtremum max_a3;
  ScanExtremum min_a3;
  ScanExtremum max_rho2;
  ScanExtremum min_rho2;
};

struct ScanOptions {
  int threads = 0;                   // 0: hardware concurrency
  double max_cost = 1e10;            // refusal threshold in elementary subgame steps
  bool keep_rows = true;             // false: only the summary is kept
};

struct ScanResult {
  int n = 0;
  StrategyClass strategy_class = StrategyClass::cyclic;
  std::vector<ScanRow> rows;
  ScanSummary summary;
  double cost_estimate = 0;
};

/// (#strategies) x (sum of D_k for k <= n).
double scan_cost_estimate(int n, StrategyClass cls);
/// Evaluates every strategy of the family. Throws ScanRefused over the threshold.
ScanResult scan(int n, StrategyClass cls, const ScanOptions& options = {});

int resolve_threads(int requested);

}  // namespace pwordle
