#pragma once

#include <bit>
#include <cstdint>
#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "pwordle/permutation.hpp"
#include "pwordle/strategy.hpp"

namespace pwordle {

/// A set of positions, bit i standing for position i+1.
class PositionSet {
 public:
  constexpr PositionSet() = default;
  constexpr explicit PositionSet(std::uint16_t bits) : bits_(bits) {}
  static PositionSet from_positions(const std::vector<int>& one_based);
  static constexpr PositionSet full(int n) { return PositionSet(static_cast<std::uint16_t>((1u << n) - 1)); }

  constexpr bool contains(int position) const { return (bits_ >> (position - 1)) & 1u; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint16_t bits() const { return bits_; }
  /// Sorted one-based positions.
  std::vector<int> to_vector() const;

  friend constexpr bool operator==(PositionSet, PositionSet) = default;

 private:
  std::uint16_t bits_ = 0;
};

/// Record of one game. `correct_sets[r]` is the feedback on `guesses[r]`.
struct GameTrace {
  Permutation secret;
  std::vector<Permutation> guesses;
  std::vector<PositionSet> correct_sets;
  bool solved = false;

  /// Guess count when solved, 0 when the game looped.
  int rounds() const noexcept { return solved ? static_cast<int>(guesses.size()) : 0; }
  bool looped() const noexcept { return !solved; }
};

PositionSet feedback(const Permutation& guess, const Permutation& secret);

/// Locks the correct positions and moves the value at the j-th incorrect
/// position (in increasing position order) to the sigma(j)-th incorrect
/// position, sigma being the strategy component for the incorrect count.
/// Throws IllegalMove when fewer than two positions are incorrect.
Permutation next_guess(const Permutation& current, PositionSet correct, const Strategy& strategy);

/// Plays from the identity until solved or a state repeats.
GameTrace play(const Permutation& secret, const Strategy& strategy);

/// Compact playback outcome used by exhaustive loops.
struct PlayOutcome {
  int rounds = 0;  // 0 when looped
  int rho = 0;     // index of the first non-empty correct set, 0 if none was seen
  bool looped() const noexcept { return rounds == 0; }
};

PlayOutcome play_outcome(const Permutation& secret, const Strategy& strategy);

/// Index of the first guess with a non-empty correct set, or nullopt
/// ("no rho") when a looped game never matched any position.
std::optional<int> rho(const Permutation& secret, const Strategy& strategy);
std::optional<int> rho(const GameTrace& trace);

/// Relative derangement of the unsolved part of a game: slot j is the j-th
/// incorrect position; values are relabelled by the slot they occupy in
/// `current`, so that the current guess becomes the identity.
Permutation relative_derangement(const Permutation& current, const Permutation& secret, PositionSet correct);

/// Memoized subgame values T(d) for one strategy.
///
/// T(d) is the number of further guesses needed from a state where every one
/// of k positions is wrong and the secret, relative to the current guess,
/// is the derangement d. A frozen memo can be shared read-only by several
/// workers for the sizes where their strategies agree.
class SubgameMemo {
 public:
  static constexpr int kLoop = -1;

  explicit SubgameMemo(const Strategy& strategy);
  /// Sizes <= `shared_max_size` are answered by `frozen`, which must be
  /// fully populated up to that size and bound to a strategy with identical
  /// components there.
  SubgameMemo(const Strategy& strategy, std::shared_ptr<const SubgameMemo> frozen, int shared_max_size);

  const Strategy& strategy() const noexcept { return strategy_; }

  /// Switches to another strategy of the same length, keeping entries for
  /// every size below the first component that differs.
  void rebind(const Strategy& strategy);

  /// T(d), or kLoop when play from this state never finishes.
  int guesses(const Permutation& d);
  /// Read-only lookup; throws std::logic_error if `d` has not been evaluated.
  int lookup(const Permutation& d) const;

  /// Evaluates every derangement of length 2..max_size.
  void populate(int max_size);

 private:
  struct Table {
    std::vector<std::int16_t> dense;
    std::unordered_map<std::uint64_t, std::int16_t> sparse;
    void clear();
  };

  std::int16_t* slot(const Permutation& d);
  const std::int16_t* find(const Permutation& d) const;

  Strategy strategy_;
  std::vector<Permutation> first_guess_;  // by size: invert(component)
  std::vector<Table> tables_;
  std::shared_ptr<const SubgameMemo> frozen_;
  int shared_max_size_ = 1;
};

}  // namespace pwordle
