#include "pwordle/closedform.hpp"

#include <stdexcept>

#include "pwordle/error.hpp"

namespace pwordle::closedform {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw std::domain_error(what);
}

std::int64_t pow_int(std::int64_t base, int exp) {
  std::int64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace

std::int64_t eulerian(int n, int k) {
  require(n >= 1 && n <= 20, "eulerian: n out of range 1..20");
  require(k >= 0 && k < n, "eulerian: k out of range 0..n-1");
  std::vector<std::int64_t> row = {1};  // n = 1
  for (int m = 2; m <= n; ++m) {
    std::vector<std::int64_t> next(static_cast<std::size_t>(m), 0);
    for (int j = 0; j < m; ++j) {
      const std::int64_t stay = j < m - 1 ? row[static_cast<std::size_t>(j)] : 0;
      const std::int64_t up = j > 0 ? row[static_cast<std::size_t>(j - 1)] : 0;
      next[static_cast<std::size_t>(j)] = (j + 1) * stay + (m - j) * up;
    }
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

std::int64_t eulerian_second(int n) {
  require(n >= 1 && n <= 62, "eulerian_second: n out of range");
  return pow_int(2, n) - n - 1;
}

std::int64_t lucas(int n) {
  require(n >= 1 && n <= 90, "lucas: n out of range");
  std::int64_t a = 1, b = 3;  // L_1, L_2
  if (n == 1) return a;
  for (int i = 3; i <= n; ++i) {
    const std::int64_t c = a + b;
    a = b;
    b = c;
  }
  return b;
}

std::int64_t derangement_count(int n) {
  require(n >= 0 && n <= 20, "derangement_count: n out of range 0..20");
  std::int64_t prev = 1, cur = 0;  // D_0, D_1
  if (n == 0) return prev;
  for (int m = 2; m <= n; ++m) {
    const std::int64_t next = (m - 1) * (cur + prev);
    prev = cur;
    cur = next;
  }
  return cur;
}

std::int64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::int64_t factorial(int n) {
  require(n >= 0 && n <= 20, "factorial: n out of range 0..20");
  std::int64_t r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

std::int64_t rho1_closed_form(int n) {
  require(n >= 3 && n <= 30, "rho1_closed_form: n out of range 3..30");
  const std::int64_t quad = static_cast<std::int64_t>(n) * n + 5 * n;
  if (quad % 2 != 0) throw std::logic_error("rho1_closed_form: n^2 + 5n is odd");
  return 1 - pow_int(2, n + 1) + pow_int(3, n) + quad / 2 - n * pow_int(2, n);
}

std::int64_t rho1_binomial_sum(int n) {
  require(n >= 3 && n <= 30, "rho1_binomial_sum: n out of range 3..30");
  std::int64_t sum = 0;
  for (int k = 1; k <= n - 3; ++k) sum += binomial(n, k) * (pow_int(2, n - k) - (2 * n - 2 * k + 1));
  return sum;
}

std::int64_t der2ex_count(int n) {
  require(n >= 3 && n <= 62, "der2ex_count: n out of range");
  return pow_int(2, n) - 2 * n - 1;
}

std::int64_t cs_rho2_count(int n) {
  require(n >= 4 && n <= 62, "cs_rho2_count: n out of range");
  return pow_int(2, n) - 2 * n - 2;
}

std::int64_t csl_rho2_count(int n) {
  require(n >= 4 && n <= 90, "csl_rho2_count: n out of range");
  return lucas(n) - n - 1;
}

std::int64_t csl_cubic(int n) {
  require(n >= 3 && n <= 30, "csl_cubic: n out of range 3..30");
  // At n = 3 both rho = 1 and rho = 2 classes are empty: L_3 - 3 - 1 = 0.
  return 1 + rho1_closed_form(n) + (lucas(n) - n - 1);
}

const SequenceTable& reference_sequence(const std::string& name) {
  static const std::vector<SequenceTable> tables = {
      {"A284843", 1, {0, 2, 3, 12, 55, 318, 2163, 16952}},
      {"csl-cubic", 3, {1, 7, 51, 263, 1100, 4093}},
      {"A385588-prefix", 3, {0, 4, 45, 251, 1078, 4054}},
  };
  for (const auto& t : tables)
    if (t.name == name) return t;
  throw UnknownId("unknown sequence '" + name + "'");
}

std::vector<std::string> reference_sequence_names() { return {"A284843", "csl-cubic", "A385588-prefix"}; }

}  // namespace pwordle::closedform
