#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace pwordle::closedform {

/// Eulerian number A(n, k): permutations of length n with k excedances.
std::int64_t eulerian(int n, int k);
/// A(n, 1) = 2^n - n - 1.
std::int64_t eulerian_second(int n);
/// L_1 = 1, L_2 = 3, L_n = L_{n-1} + L_{n-2}.
std::int64_t lucas(int n);
std::int64_t derangement_count(int n);
std::int64_t binomial(int n, int k);
std::int64_t factorial(int n);

/// Secrets with a fixed point that an inductive strategy solves in exactly
/// three guesses: 1 - 2^(n+1) + 3^n + (n^2 + 5n)/2 - n 2^n.
std::int64_t rho1_closed_form(int n);
/// The same count as the binomial sum over the size k of the first correct set.
std::int64_t rho1_binomial_sum(int n);
/// Derangements solved by cyclic shift in three guesses: 2^n - 2n - 1.
std::int64_t der2ex_count(int n);
/// 2^n - 2n - 2.
std::int64_t cs_rho2_count(int n);
/// L_n - n - 1.
std::int64_t csl_rho2_count(int n);
/// Cubic coefficient of the left-top strategy: 1 + rho1 + (L_n - n - 1).
std::int64_t csl_cubic(int n);

struct SequenceTable {
  std::string name;
  int offset;  // index of the first value
  std::vector<std::int64_t> values;
};

/// Hardcoded reference lists: "A284843" (n = 1..8), "csl-cubic" (n = 3..8),
/// "A385588-prefix" (n = 3..8).
const SequenceTable& reference_sequence(const std::string& name);
std::vector<std::string> reference_sequence_names();

}  // namespace pwordle::closedform
