#include "pwordle/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>

#include "pwordle/closedform.hpp"
#include "pwordle/error.hpp"

namespace pwordle {

namespace {

constexpr int kCachedCatalogMax = 10;

const std::vector<Permutation>& derangements_of(int k) {
  static std::array<std::once_flag, kCachedCatalogMax + 1> once;
  static std::array<std::vector<Permutation>, kCachedCatalogMax + 1> cache;
  if (k < 0 || k > kCachedCatalogMax) throw std::invalid_argument("derangement catalog: size out of range");
  std::call_once(once[static_cast<std::size_t>(k)],
                 [k] { cache[static_cast<std::size_t>(k)] = enumerate(k, PermClass::derangements); });
  return cache[static_cast<std::size_t>(k)];
}

template <typename Fn>
void for_each_derangement(int k, Fn&& fn) {
  if (k <= kCachedCatalogMax) {
    for (const auto& d : derangements_of(k)) fn(d);
  } else {
    for_each_permutation(k, PermClass::derangements, [&](const Permutation& d) {
      fn(d);
      return true;
    });
  }
}

void add_coefficient(std::vector<std::uint64_t>& coeffs, int r, std::uint64_t count) {
  if (count == 0) return;
  if (static_cast<int>(coeffs.size()) < r) coeffs.resize(static_cast<std::size_t>(r), 0);
  coeffs[static_cast<std::size_t>(r - 1)] += count;
}

void trim(std::vector<std::uint64_t>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

// Subgame value histogram over D_k: hist[t] = |{d : T(d) = t}|, hist[0] = loops.
using Histogram = std::vector<std::uint64_t>;

Histogram histogram_for_size(int k, SubgameMemo& memo) {
  Histogram hist(1, 0);
  for_each_derangement(k, [&](const Permutation& d) {
    const int t = memo.guesses(d);
    const auto slot = static_cast<std::size_t>(t == SubgameMemo::kLoop ? 0 : t);
    if (hist.size() <= slot) hist.resize(slot + 1, 0);
    ++hist[slot];
  });
  return hist;
}

struct Evaluation {
  GFCoefficients gf;
  RhoCounts rho{};
  std::uint64_t weighted_sum = 0;  // sum of r * a_r
};

// Evaluates strategies of one length, reusing per-size histograms across
// strategies that share lower components.
class Evaluator {
 public:
  Evaluator(const Strategy& first, std::shared_ptr<const SubgameMemo> frozen, int shared_max)
      : memo_(frozen ? SubgameMemo(first, std::move(frozen), shared_max) : SubgameMemo(first)),
        n_(first.length()),
        hist_(static_cast<std::size_t>(n_) + 1),
        valid_(static_cast<std::size_t>(n_) + 1, false) {}

  explicit Evaluator(SubgameMemo& external) : external_(&external), n_(external.strategy().length()),
        hist_(static_cast<std::size_t>(n_) + 1), valid_(static_cast<std::size_t>(n_) + 1, false) {}

  SubgameMemo& memo() { return external_ ? *external_ : *memo_; }

  Evaluation evaluate(const Strategy& strategy) {
    if (!external_) {
      int first_diff = n_ + 1;
      for (int k = 1; k <= n_; ++k)
        if (strategy.component(k) != memo().strategy().component(k)) {
          first_diff = k;
          break;
        }
      if (first_diff <= n_) {
        memo().rebind(strategy);
        for (int k = first_diff; k <= n_; ++k) valid_[static_cast<std::size_t>(k)] = false;
      }
    }
    Evaluation ev;
    ev.gf.n = n_;
    add_coefficient(ev.gf.coefficients, 1, 1);
    for (int k = 2; k <= n_; ++k) {
      if (!valid_[static_cast<std::size_t>(k)]) {
        hist_[static_cast<std::size_t>(k)] = histogram_for_size(k, memo());
        valid_[static_cast<std::size_t>(k)] = true;
      }
      const auto& hist = hist_[static_cast<std::size_t>(k)];
      const auto ways = static_cast<std::uint64_t>(closedform::binomial(n_, k));
      ev.gf.loop_count += ways * hist[0];
      for (std::size_t t = 1; t < hist.size(); ++t) add_coefficient(ev.gf.coefficients, static_cast<int>(t) + 1, ways * hist[t]);
      // Three guesses total means T = 2 on the unsolved part.
      if (k < n_ && hist.size() > 2) ev.rho[0] += ways * hist[2];
    }
    if (n_ >= 2) {
      const Permutation second = invert(strategy.top());
      for_each_derangement(n_, [&](const Permutation& d) {
        if (memo().guesses(d) != 2) return;
        ++ev.rho[feedback(second, d).empty() ? 2 : 1];
      });
    }
    trim(ev.gf.coefficients);
    for (int r = 1; r <= ev.gf.max_rounds(); ++r) ev.weighted_sum += static_cast<std::uint64_t>(r) * ev.gf.coefficient(r);
    return ev;
  }

 private:
  std::optional<SubgameMemo> memo_;
  SubgameMemo* external_ = nullptr;
  int n_;
  std::vector<Histogram> hist_;
  std::vector<bool> valid_;
};

void offer_max(ScanExtremum& e, bool& seen, std::uint64_t value, std::uint64_t index) {
  if (!seen || value > e.value_or_numerator) {
    e.value_or_numerator = value;
    e.indices.assign(1, index);
    seen = true;
  } else if (value == e.value_or_numerator) {
    e.indices.push_back(index);
  }
}

void offer_min(ScanExtremum& e, bool& seen, std::uint64_t value, std::uint64_t index) {
  if (!seen || value < e.value_or_numerator) {
    e.value_or_numerator = value;
    e.indices.assign(1, index);
    seen = true;
  } else if (value == e.value_or_numerator) {
    e.indices.push_back(index);
  }
}

struct LocalSummary {
  ScanSummary s;
  bool seen_avg = false, seen_max3 = false, seen_min3 = false, seen_maxr = false, seen_minr = false;
  bool avg_infinite = true;

  void add(std::uint64_t index, const Evaluation& ev) {
    ++s.strategies;
    const bool loops = ev.gf.loop_count > 0;
    if (loops) ++s.strategies_with_loops;
    // Finite averages beat infinite ones; among finite ones compare numerators.
    if (!loops) {
      if (avg_infinite) {
        avg_infinite = false;
        seen_avg = false;
      }
      offer_min(s.min_average, seen_avg, ev.weighted_sum, index);
    } else if (avg_infinite) {
      offer_min(s.min_average, seen_avg, 0, index);
    }
    offer_max(s.max_a3, seen_max3, ev.gf.coefficient(3), index);
    offer_min(s.min_a3, seen_min3, ev.gf.coefficient(3), index);
    offer_max(s.max_rho2, seen_maxr, ev.rho[1], index);
    offer_min(s.min_rho2, seen_minr, ev.rho[1], index);
  }
};

void merge_extremum(ScanExtremum& into, bool& into_seen, const ScanExtremum& from, bool from_seen, bool want_max) {
  if (!from_seen) return;
  const bool better = !into_seen || (want_max ? from.value_or_numerator > into.value_or_numerator
                                              : from.value_or_numerator < into.value_or_numerator);
  if (better) {
    into = from;
    into_seen = true;
  } else if (from.value_or_numerator == into.value_or_numerator) {
    into.indices.insert(into.indices.end(), from.indices.begin(), from.indices.end());
  }
}

}  // namespace

std::uint64_t GFCoefficients::total() const noexcept {
  std::uint64_t t = loop_count;
  for (auto c : coefficients) t += c;
  return t;
}

std::string AverageGuesses::to_string() const {
  if (infinite) return "inf";
  std::ostringstream os;
  os << value.numerator() << '/' << value.denominator();
  return os.str();
}

double AverageGuesses::to_double() const {
  if (infinite) return std::numeric_limits<double>::infinity();
  return boost::rational_cast<double>(value);
}

GFCoefficients generating_function_playback(const Strategy& strategy) {
  GFCoefficients gf;
  gf.n = strategy.length();
  for_each_permutation(gf.n, PermClass::all, [&](const Permutation& secret) {
    const GameTrace trace = play(secret, strategy);
    if (trace.solved)
      add_coefficient(gf.coefficients, trace.rounds(), 1);
    else
      ++gf.loop_count;
    return true;
  });
  trim(gf.coefficients);
  return gf;
}

GFCoefficients generating_function_decomposition(const Strategy& strategy, SubgameMemo& memo) {
  if (!(memo.strategy() == strategy)) throw std::invalid_argument("memo is bound to a different strategy");
  Evaluator ev(memo);
  return ev.evaluate(strategy).gf;
}

GFCoefficients generating_function(const Strategy& strategy, GfMethod method) {
  if (method == GfMethod::playback) return generating_function_playback(strategy);
  SubgameMemo memo(strategy);
  return generating_function_decomposition(strategy, memo);
}

AverageGuesses average_guesses(const GFCoefficients& gf) {
  if (gf.loop_count > 0) return {true, Rational(0)};
  std::int64_t weighted = 0;
  std::int64_t total = 0;
  for (int r = 1; r <= gf.max_rounds(); ++r) {
    weighted += r * static_cast<std::int64_t>(gf.coefficient(r));
    total += static_cast<std::int64_t>(gf.coefficient(r));
  }
  if (total == 0) throw std::invalid_argument("average_guesses: empty generating function");
  return {false, Rational(weighted, total)};
}

RhoCounts rho_class_counts(const Strategy& strategy) {
  if (strategy.length() < 3) throw InvalidStrategy("rho_class_counts requires n >= 3");
  RhoCounts counts{};
  for_each_permutation(strategy.length(), PermClass::all, [&](const Permutation& secret) {
    const GameTrace trace = play(secret, strategy);
    if (trace.rounds() == 3) ++counts[static_cast<std::size_t>(*rho(trace) - 1)];
    return true;
  });
  return counts;
}

RhoCounts rho_class_counts_decomposition(const Strategy& strategy, SubgameMemo& memo) {
  if (strategy.length() < 3) throw InvalidStrategy("rho_class_counts requires n >= 3");
  if (!(memo.strategy() == strategy)) throw std::invalid_argument("memo is bound to a different strategy");
  Evaluator ev(memo);
  return ev.evaluate(strategy).rho;
}

Rational average_j2_over_derangements(const Permutation& component) {
  if (!is_derangement(component))
    throw InvalidStrategy("component [" + component.to_string() + "] is not a derangement");
  const Permutation second = invert(component);
  std::int64_t matches = 0;
  std::int64_t count = 0;
  for_each_derangement(component.size(), [&](const Permutation& d) {
    matches += feedback(second, d).size();
    ++count;
  });
  return Rational(matches, count);
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

double scan_cost_estimate(int n, StrategyClass cls) {
  StrategySpace space(n, cls);
  double per_strategy = 0;
  for (int k = 2; k <= n; ++k) per_strategy += static_cast<double>(closedform::derangement_count(k));
  return static_cast<double>(space.size()) * per_strategy;
}

ScanResult scan(int n, StrategyClass cls, const ScanOptions& options) {
  ScanResult result;
  result.n = n;
  result.strategy_class = cls;
  result.cost_estimate = scan_cost_estimate(n, cls);
  if (result.cost_estimate > options.max_cost) {
    std::ostringstream os;
    os << "scan of " << to_string(cls) << " strategies at n=" << n << " needs ~" << result.cost_estimate
       << " subgame steps, over the threshold " << options.max_cost << " (raise --max-cost to run it)";
    throw ScanRefused(os.str(), result.cost_estimate, options.max_cost);
  }

  const StrategySpace space(n, cls);
  const std::uint64_t total = space.size();

  // Inductive strategies all share the cyclic shift below the top: evaluate
  // those sizes once and share them read-only.
  std::shared_ptr<const SubgameMemo> frozen;
  int shared_max = 1;
  if (cls == StrategyClass::inductive) {
    auto base = std::make_shared<SubgameMemo>(cyclic_shift(n));
    base->populate(n - 1);
    frozen = std::move(base);
    shared_max = n - 1;
  }

  const int threads = std::max(1, std::min<int>(resolve_threads(options.threads), static_cast<int>(total)));
  constexpr std::uint64_t kChunk = 64;
  std::atomic<std::uint64_t> next{0};
  std::vector<LocalSummary> locals(static_cast<std::size_t>(threads));
  std::vector<std::vector<ScanRow>> local_rows(static_cast<std::size_t>(threads));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));

  auto worker = [&](int w) {
    try {
      std::optional<Evaluator> evaluator;
      while (true) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= total) break;
        const std::uint64_t end = std::min(total, begin + kChunk);
        for (std::uint64_t i = begin; i < end; ++i) {
          Strategy s = space.at(i);
          if (!evaluator) evaluator.emplace(s, frozen, shared_max);
          Evaluation ev = evaluator->evaluate(s);
          locals[static_cast<std::size_t>(w)].add(i, ev);
          if (options.keep_rows) {
            AverageGuesses avg = average_guesses(ev.gf);
            local_rows[static_cast<std::size_t>(w)].push_back(
                ScanRow{i, std::move(s), std::move(ev.gf), avg, ev.rho});
          }
        }
      }
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  // Merge: finite-average workers take precedence over all-infinite ones.
  ScanSummary& sum = result.summary;
  bool seen_avg = false, seen_max3 = false, seen_min3 = false, seen_maxr = false, seen_minr = false;
  bool any_finite = std::any_of(locals.begin(), locals.end(),
                                [](const LocalSummary& l) { return l.s.strategies > 0 && !l.avg_infinite; });
  for (const auto& l : locals) {
    if (l.s.strategies == 0) continue;
    sum.strategies += l.s.strategies;
    sum.strategies_with_loops += l.s.strategies_with_loops;
    if (!any_finite || !l.avg_infinite) merge_extremum(sum.min_average, seen_avg, l.s.min_average, l.seen_avg, false);
    merge_extremum(sum.max_a3, seen_max3, l.s.max_a3, l.seen_max3, true);
    merge_extremum(sum.min_a3, seen_min3, l.s.min_a3, l.seen_min3, false);
    merge_extremum(sum.max_rho2, seen_maxr, l.s.max_rho2, l.seen_maxr, true);
    merge_extremum(sum.min_rho2, seen_minr, l.s.min_rho2, l.seen_minr, false);
  }
  sum.min_average_infinite = !any_finite;
  for (ScanExtremum* e : {&sum.min_average, &sum.max_a3, &sum.min_a3, &sum.max_rho2, &sum.min_rho2}) {
    std::sort(e->indices.begin(), e->indices.end());
    for (auto i : e->indices) e->labels.push_back(space.at(i).label());
  }

  if (options.keep_rows) {
    result.rows.reserve(total);
    for (auto& rows : local_rows)
      for (auto& r : rows) result.rows.push_back(std::move(r));
    std::sort(result.rows.begin(), result.rows.end(),
              [](const ScanRow& a, const ScanRow& b) { return a.index < b.index; });
  }
  return result;
}

}  // namespace pwordle
