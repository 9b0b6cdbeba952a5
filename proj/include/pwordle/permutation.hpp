#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace pwordle {

/// Longest supported permutation. 12! still fits comfortably in 64 bits.
inline constexpr int kMaxLength = 12;

/// A permutation of {1..n} in one-line notation.
///
/// Storage is a fixed-capacity array so permutations are cheap to copy and
/// to use as hash keys. Indexing is zero-based, values are one-based:
/// `p[0]` is the image of position 1.
class Permutation {
 public:
  using value_type = std::uint8_t;

  /// Validates that `entries` is a bijection on {1..n}.
  explicit Permutation(std::span<const int> entries);
  Permutation(std::initializer_list<int> entries);

  static Permutation identity(int n);

  int size() const noexcept { return size_; }
  int operator[](int i) const noexcept { return entries_[static_cast<std::size_t>(i)]; }

  std::vector<int> to_vector() const;
  /// Comma-separated one-line notation, e.g. "2,3,1".
  std::string to_string() const;
  /// Injective 64-bit key (4 bits per entry plus length).
  std::uint64_t pack() const noexcept;

  friend bool operator==(const Permutation& a, const Permutation& b) noexcept {
    return a.size_ == b.size_ && a.entries_ == b.entries_;
  }
  friend auto operator<=>(const Permutation& a, const Permutation& b) noexcept {
    if (auto c = a.size_ <=> b.size_; c != 0) return c;
    return a.entries_ <=> b.entries_;
  }

 private:
  struct Unchecked {};
  Permutation(Unchecked, int n) noexcept : size_(static_cast<std::uint8_t>(n)) {}

  std::array<value_type, kMaxLength> entries_{};
  std::uint8_t size_ = 0;

  friend class PermutationBuilder;
};

/// Internal fast path for code that builds permutations it knows are valid.
class PermutationBuilder {
 public:
  explicit PermutationBuilder(int n) noexcept : perm_(Permutation::Unchecked{}, n) {}
  void set(int i, int value) noexcept {
    perm_.entries_[static_cast<std::size_t>(i)] = static_cast<Permutation::value_type>(value);
  }
  const Permutation& get() const noexcept { return perm_; }

 private:
  Permutation perm_;
};

Permutation identity(int n);

/// result[i] = p[q[i]].
Permutation compose(const Permutation& p, const Permutation& q);
Permutation invert(const Permutation& p);

bool is_derangement(const Permutation& p) noexcept;
/// True iff p is a single n-cycle. [1] counts as a trivial 1-cycle.
bool is_cyclic(const Permutation& p) noexcept;
int excedance_count(const Permutation& p) noexcept;
int fixed_point_count(const Permutation& p) noexcept;

enum class PermClass { all, derangements, cyclic };

PermClass parse_perm_class(const std::string& name);
std::string to_string(PermClass cls);

/// Lexicographic enumeration; `fn` may return false to stop early.
void for_each_permutation(int n, PermClass cls, const std::function<bool(const Permutation&)>& fn);
std::vector<Permutation> enumerate(int n, PermClass cls);

/// Parses "2,3,1" (whitespace tolerated). Throws ParseError on malformed text.
Permutation parse_permutation(const std::string& text);

}  // namespace pwordle

template <>
struct std::hash<pwordle::Permutation> {
  std::size_t operator()(const pwordle::Permutation& p) const noexcept {
    return std::hash<std::uint64_t>{}(p.pack());
  }
};
