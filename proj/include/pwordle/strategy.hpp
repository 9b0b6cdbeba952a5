#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pwordle/permutation.hpp"

namespace pwordle {

/// Which family a strategy was built as (or belongs to, when inferred).
enum class StrategyClass { cyclic, deranged, inductive };

StrategyClass parse_strategy_class(const std::string& name);
std::string to_string(StrategyClass cls);

/// A guessing strategy: component `i` (length i) is applied to the incorrect
/// positions whenever exactly i positions are wrong.
///
/// Invariants: component 1 is [1], component 2 is [2,1], every component of
/// length >= 2 is a derangement.
class Strategy {
 public:
  int length() const noexcept { return static_cast<int>(components_.size()); }
  /// Component used when `k` positions are incorrect (1-based, like S[k]).
  const Permutation& component(int k) const { return components_.at(static_cast<std::size_t>(k - 1)); }
  const Permutation& top() const { return components_.back(); }
  const std::vector<Permutation>& components() const noexcept { return components_; }
  StrategyClass strategy_class() const noexcept { return class_; }

  /// Every component below the top equals the cyclic shift and the top is a
  /// single cycle (length >= 3).
  bool is_inductive() const noexcept;

  /// Canonical textual form "1;2,1;2,3,1"; doubles as the strategy identity.
  std::string to_string() const;
  /// Short label for reports: "[2,4,1,3]" for inductive strategies, the
  /// full identity otherwise.
  std::string label() const;

  friend bool operator==(const Strategy& a, const Strategy& b) noexcept { return a.components_ == b.components_; }

 private:
  Strategy(std::vector<Permutation> components, StrategyClass cls)
      : components_(std::move(components)), class_(cls) {}

  std::vector<Permutation> components_;
  StrategyClass class_;

  friend Strategy cyclic_shift(int n);
  friend Strategy inductive(const Permutation& top);
  friend Strategy from_components(std::vector<Permutation> components);
  friend class StrategySpace;
};

/// The length-k right cyclic shift [2,3,...,k,1].
Permutation cyclic_shift_component(int k);

Strategy cyclic_shift(int n);
/// Right shift below the top, left shift [n,1,...,n-1] on top. Requires n >= 3.
Strategy cyclic_shift_left_top(int n);
/// Cyclic shift below `top`. Throws NotCyclic unless top is a single cycle of length >= 3.
Strategy inductive(const Permutation& top);
/// Conjugates every component by the reversal i -> k+1-i. Reversing both
/// positions and values maps games onto games, so a strategy and its mirror
/// have the same generating function. The mirror of cyclic shift shifts
/// left at every length.
Strategy mirror(const Strategy& strategy);
/// General strategy; the class is inferred (cyclic if every component is a cycle).
Strategy from_components(std::vector<Permutation> components);

/// Indexable enumeration of a strategy family, in lexicographic order of the
/// component tuple (S[3], ..., S[n]) with the top component varying fastest.
class StrategySpace {
 public:
  StrategySpace(int n, StrategyClass cls);

  int length() const noexcept { return n_; }
  StrategyClass strategy_class() const noexcept { return class_; }
  std::uint64_t size() const noexcept { return size_; }
  Strategy at(std::uint64_t index) const;

 private:
  int n_;
  StrategyClass class_;
  std::uint64_t size_ = 1;
  // choices_[k] lists the candidate components of length k (k >= 3).
  std::vector<std::vector<Permutation>> choices_;
};

std::vector<Strategy> enumerate_strategies(int n, StrategyClass cls);

/// Parses the textual strategy format:
///   "1;2,1;2,3,1;2,3,4,1"   explicit components
///   "inductive:2,4,1,3"     cyclic shift below the given top
///   "cs" / "cs:N" / "csl" / "csl:N"
/// `n_hint` supplies the length for the bare "cs"/"csl" forms.
Strategy parse_strategy(const std::string& text, std::optional<int> n_hint = std::nullopt);

}  // namespace pwordle
