#include "pwordle/engine.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "pwordle/error.hpp"

namespace pwordle {

namespace {

constexpr int kDenseMaxSize = 9;
constexpr std::int16_t kUnknown = 0;
constexpr std::int16_t kInProgress = -2;

constexpr std::array<std::uint32_t, kDenseMaxSize + 1> kFactorial = {1, 1, 2, 6, 24, 120, 720, 5040, 40320, 362880};

// Lehmer rank in [0, k!).
std::uint32_t rank_of(const Permutation& p) {
  std::uint32_t r = 0;
  const int k = p.size();
  for (int i = 0; i < k; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < k; ++j) smaller += p[j] < p[i];
    r += static_cast<std::uint32_t>(smaller) * kFactorial[static_cast<std::size_t>(k - 1 - i)];
  }
  return r;
}

}  // namespace

PositionSet PositionSet::from_positions(const std::vector<int>& one_based) {
  std::uint16_t bits = 0;
  for (int p : one_based) {
    if (p < 1 || p > kMaxLength) throw std::out_of_range("position out of range");
    bits = static_cast<std::uint16_t>(bits | (1u << (p - 1)));
  }
  return PositionSet(bits);
}

std::vector<int> PositionSet::to_vector() const {
  std::vector<int> out;
  for (int i = 0; i < 16; ++i)
    if ((bits_ >> i) & 1u) out.push_back(i + 1);
  return out;
}

PositionSet feedback(const Permutation& guess, const Permutation& secret) {
  if (guess.size() != secret.size())
    throw LengthMismatch("feedback: guess length " + std::to_string(guess.size()) + " vs secret length " +
                         std::to_string(secret.size()));
  std::uint16_t bits = 0;
  for (int i = 0; i < guess.size(); ++i)
    if (guess[i] == secret[i]) bits = static_cast<std::uint16_t>(bits | (1u << i));
  return PositionSet(bits);
}

Permutation next_guess(const Permutation& current, PositionSet correct, const Strategy& strategy) {
  const int n = current.size();
  if (strategy.length() != n)
    throw LengthMismatch("next_guess: strategy length " + std::to_string(strategy.length()) +
                         " vs guess length " + std::to_string(n));
  std::array<int, kMaxLength> wrong{};
  int k = 0;
  for (int i = 0; i < n; ++i)
    if (!correct.contains(i + 1)) wrong[static_cast<std::size_t>(k++)] = i;
  if (k == 0) throw IllegalMove("next_guess: every position is already correct");
  if (k == 1) throw IllegalMove("next_guess: a single incorrect position is impossible");

  const Permutation& sigma = strategy.component(k);
  PermutationBuilder b(n);
  for (int i = 0; i < n; ++i)
    if (correct.contains(i + 1)) b.set(i, current[i]);
  for (int j = 0; j < k; ++j) b.set(wrong[static_cast<std::size_t>(sigma[j] - 1)], current[wrong[static_cast<std::size_t>(j)]]);
  return b.get();
}

GameTrace play(const Permutation& secret, const Strategy& strategy) {
  const int n = secret.size();
  if (strategy.length() != n)
    throw LengthMismatch("play: strategy length " + std::to_string(strategy.length()) + " vs secret length " +
                         std::to_string(n));
  GameTrace trace{secret, {}, {}, false};
  Permutation guess = identity(n);
  // The locked set only grows, so a repeat can only happen among guesses made
  // since it last changed.
  std::vector<std::uint64_t> since_progress;
  PositionSet locked;
  while (true) {
    const PositionSet correct = feedback(guess, secret);
    trace.guesses.push_back(guess);
    trace.correct_sets.push_back(correct);
    if (correct.size() == n) {
      trace.solved = true;
      return trace;
    }
    if (correct != locked) {
      locked = correct;
      since_progress.clear();
    }
    const auto key = guess.pack();
    for (auto seen : since_progress)
      if (seen == key) return trace;
    since_progress.push_back(key);
    guess = next_guess(guess, correct, strategy);
  }
}

PlayOutcome play_outcome(const Permutation& secret, const Strategy& strategy) {
  const GameTrace trace = play(secret, strategy);
  PlayOutcome out;
  out.rounds = trace.rounds();
  out.rho = rho(trace).value_or(0);
  return out;
}

std::optional<int> rho(const GameTrace& trace) {
  for (std::size_t r = 0; r < trace.correct_sets.size(); ++r)
    if (!trace.correct_sets[r].empty()) return static_cast<int>(r) + 1;
  return std::nullopt;
}

std::optional<int> rho(const Permutation& secret, const Strategy& strategy) { return rho(play(secret, strategy)); }

Permutation relative_derangement(const Permutation& current, const Permutation& secret, PositionSet correct) {
  const int n = current.size();
  std::array<int, kMaxLength + 1> slot_of_value{};
  std::array<int, kMaxLength> wrong{};
  int k = 0;
  for (int i = 0; i < n; ++i) {
    if (correct.contains(i + 1)) continue;
    wrong[static_cast<std::size_t>(k)] = i;
    slot_of_value[static_cast<std::size_t>(current[i])] = ++k;
  }
  PermutationBuilder b(k);
  for (int j = 0; j < k; ++j)
    b.set(j, slot_of_value[static_cast<std::size_t>(secret[wrong[static_cast<std::size_t>(j)]])]);
  return b.get();
}

// ---------------------------------------------------------------------------
// SubgameMemo

void SubgameMemo::Table::clear() {
  std::fill(dense.begin(), dense.end(), kUnknown);
  sparse.clear();
}

SubgameMemo::SubgameMemo(const Strategy& strategy) : strategy_(strategy) {
  const int n = strategy.length();
  tables_.resize(static_cast<std::size_t>(n) + 1);
  first_guess_.reserve(static_cast<std::size_t>(n) + 1);
  first_guess_.push_back(identity(1));
  for (int k = 1; k <= n; ++k) first_guess_.push_back(invert(strategy.component(k)));
}

SubgameMemo::SubgameMemo(const Strategy& strategy, std::shared_ptr<const SubgameMemo> frozen, int shared_max_size)
    : SubgameMemo(strategy) {
  if (!frozen) throw std::invalid_argument("SubgameMemo: null frozen memo");
  if (shared_max_size > frozen->strategy().length() || shared_max_size > strategy.length())
    throw std::invalid_argument("SubgameMemo: shared size exceeds a strategy length");
  for (int k = 1; k <= shared_max_size; ++k)
    if (frozen->strategy().component(k) != strategy.component(k))
      throw std::invalid_argument("SubgameMemo: frozen memo disagrees at component " + std::to_string(k));
  frozen_ = std::move(frozen);
  shared_max_size_ = shared_max_size;
}

void SubgameMemo::rebind(const Strategy& strategy) {
  if (strategy.length() != strategy_.length()) throw LengthMismatch("SubgameMemo::rebind: length differs");
  int first_diff = strategy.length() + 1;
  for (int k = 1; k <= strategy.length(); ++k) {
    if (strategy.component(k) != strategy_.component(k)) {
      first_diff = k;
      break;
    }
  }
  if (first_diff <= shared_max_size_)
    throw std::invalid_argument("SubgameMemo::rebind: strategy differs inside the frozen range");
  for (int k = first_diff; k <= strategy.length(); ++k) {
    tables_[static_cast<std::size_t>(k)].clear();
    first_guess_[static_cast<std::size_t>(k)] = invert(strategy.component(k));
  }
  strategy_ = strategy;
}

std::int16_t* SubgameMemo::slot(const Permutation& d) {
  const int k = d.size();
  Table& t = tables_[static_cast<std::size_t>(k)];
  if (k <= kDenseMaxSize) {
    if (t.dense.empty()) t.dense.assign(kFactorial[static_cast<std::size_t>(k)], kUnknown);
    return &t.dense[rank_of(d)];
  }
  return &t.sparse[d.pack()];
}

const std::int16_t* SubgameMemo::find(const Permutation& d) const {
  const int k = d.size();
  if (k >= static_cast<int>(tables_.size())) return nullptr;
  const Table& t = tables_[static_cast<std::size_t>(k)];
  if (k <= kDenseMaxSize) {
    if (t.dense.empty()) return nullptr;
    const auto* v = &t.dense[rank_of(d)];
    return *v == kUnknown || *v == kInProgress ? nullptr : v;
  }
  auto it = t.sparse.find(d.pack());
  return it == t.sparse.end() || it->second == kInProgress ? nullptr : &it->second;
}

int SubgameMemo::lookup(const Permutation& d) const {
  if (d.size() <= shared_max_size_ && frozen_) return frozen_->lookup(d);
  if (const auto* v = find(d)) return *v;
  throw std::logic_error("SubgameMemo::lookup: [" + d.to_string() + "] not evaluated");
}

int SubgameMemo::guesses(const Permutation& d) {
  const int k = d.size();
  if (k < 2 || k > strategy_.length())
    throw std::invalid_argument("subgame size " + std::to_string(k) + " outside 2.." +
                                std::to_string(strategy_.length()));
  if (k <= shared_max_size_ && frozen_) return frozen_->lookup(d);

  std::int16_t* entry = slot(d);
  if (*entry == kInProgress) return kLoop;  // revisited without progress
  if (*entry != kUnknown) return *entry;
  *entry = kInProgress;

  const Permutation& g = first_guess_[static_cast<std::size_t>(k)];
  const PositionSet correct = feedback(g, d);
  int result;
  if (correct.size() == k) {
    result = 1;
  } else {
    const int sub = guesses(relative_derangement(g, d, correct));
    result = sub == kLoop ? kLoop : sub + 1;
  }
  // The recursive call may have grown a sparse table; refetch.
  entry = slot(d);
  *entry = static_cast<std::int16_t>(result);
  return result;
}

void SubgameMemo::populate(int max_size) {
  if (max_size > strategy_.length()) throw std::invalid_argument("populate: size exceeds strategy length");
  for (int k = 2; k <= max_size; ++k)
    for_each_permutation(k, PermClass::derangements, [&](const Permutation& d) {
      guesses(d);
      return true;
    });
}

}  // namespace pwordle
