#include "pwordle/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "pwordle/error.hpp"

namespace pwordle {

namespace {

void check_length(std::size_t n) {
  if (n == 0) throw InvalidPermutation("permutation length must be at least 1");
  if (n > static_cast<std::size_t>(kMaxLength))
    throw InvalidPermutation("permutation length " + std::to_string(n) + " exceeds supported maximum " +
                             std::to_string(kMaxLength));
}

}  // namespace

Permutation::Permutation(std::span<const int> entries) {
  check_length(entries.size());
  const int n = static_cast<int>(entries.size());
  std::array<bool, kMaxLength + 1> seen{};
  for (int i = 0; i < n; ++i) {
    const int v = entries[static_cast<std::size_t>(i)];
    if (v < 1 || v > n)
      throw InvalidPermutation("entry " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(v)]) throw InvalidPermutation("entry " + std::to_string(v) + " repeated");
    seen[static_cast<std::size_t>(v)] = true;
    entries_[static_cast<std::size_t>(i)] = static_cast<value_type>(v);
  }
  size_ = static_cast<std::uint8_t>(n);
}

Permutation::Permutation(std::initializer_list<int> entries)
    : Permutation(std::span<const int>(entries.begin(), entries.size())) {}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InvalidPermutation("identity requires n >= 1, got " + std::to_string(n));
  check_length(static_cast<std::size_t>(n));
  PermutationBuilder b(n);
  for (int i = 0; i < n; ++i) b.set(i, i + 1);
  return b.get();
}

std::vector<int> Permutation::to_vector() const {
  return {entries_.begin(), entries_.begin() + size_};
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < size_; ++i) {
    if (i) out += ',';
    out += std::to_string((*this)[i]);
  }
  return out;
}

std::uint64_t Permutation::pack() const noexcept {
  std::uint64_t key = size_;
  for (int i = 0; i < size_; ++i) key |= static_cast<std::uint64_t>((*this)[i] - 1) << (8 + 4 * i);
  return key;
}

Permutation identity(int n) { return Permutation::identity(n); }

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw LengthMismatch("compose: lengths " + std::to_string(p.size()) + " and " + std::to_string(q.size()));
  PermutationBuilder b(p.size());
  for (int i = 0; i < p.size(); ++i) b.set(i, p[q[i] - 1]);
  return b.get();
}

Permutation invert(const Permutation& p) {
  PermutationBuilder b(p.size());
  for (int i = 0; i < p.size(); ++i) b.set(p[i] - 1, i + 1);
  return b.get();
}

bool is_derangement(const Permutation& p) noexcept { return fixed_point_count(p) == 0; }

bool is_cyclic(const Permutation& p) noexcept {
  int len = 0;
  int at = 0;
  do {
    at = p[at] - 1;
    ++len;
  } while (at != 0);
  return len == p.size();
}

int excedance_count(const Permutation& p) noexcept {
  int count = 0;
  for (int i = 0; i < p.size(); ++i) count += p[i] > i + 1;
  return count;
}

int fixed_point_count(const Permutation& p) noexcept {
  int count = 0;
  for (int i = 0; i < p.size(); ++i) count += p[i] == i + 1;
  return count;
}

PermClass parse_perm_class(const std::string& name) {
  if (name == "all") return PermClass::all;
  if (name == "derangements" || name == "deranged") return PermClass::derangements;
  if (name == "cyclic") return PermClass::cyclic;
  throw UnknownId("unknown permutation class '" + name + "'");
}

std::string to_string(PermClass cls) {
  switch (cls) {
    case PermClass::all: return "all";
    case PermClass::derangements: return "derangements";
    case PermClass::cyclic: return "cyclic";
  }
  return "?";
}

void for_each_permutation(int n, PermClass cls, const std::function<bool(const Permutation&)>& fn) {
  if (n < 1) throw InvalidPermutation("enumerate requires n >= 1");
  check_length(static_cast<std::size_t>(n));
  std::array<int, kMaxLength> work{};
  std::iota(work.begin(), work.begin() + n, 1);
  do {
    PermutationBuilder b(n);
    for (int i = 0; i < n; ++i) b.set(i, work[static_cast<std::size_t>(i)]);
    const Permutation& p = b.get();
    const bool keep = cls == PermClass::all || (cls == PermClass::derangements && is_derangement(p)) ||
                      (cls == PermClass::cyclic && is_cyclic(p));
    if (keep && !fn(p)) return;
  } while (std::next_permutation(work.begin(), work.begin() + n));
}

std::vector<Permutation> enumerate(int n, PermClass cls) {
  std::vector<Permutation> out;
  for_each_permutation(n, cls, [&](const Permutation& p) {
    out.push_back(p);
    return true;
  });
  return out;
}

Permutation parse_permutation(const std::string& text) {
  std::vector<int> values;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i < text.size() && text[i] == '[') ++i;
  while (true) {
    skip_ws();
    if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
      throw ParseError("expected a positive integer in permutation '" + text + "'", i);
    int v = 0;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      v = v * 10 + (text[i] - '0');
      if (v > 1000) throw ParseError("permutation entry too large in '" + text + "'", i);
      ++i;
    }
    values.push_back(v);
    skip_ws();
    if (i < text.size() && text[i] == ',') {
      ++i;
      continue;
    }
    if (i < text.size() && text[i] == ']') {
      ++i;
      skip_ws();
    }
    if (i != text.size()) throw ParseError("unexpected character in permutation '" + text + "'", i);
    break;
  }
  try {
    return Permutation(std::span<const int>(values));
  } catch (const InvalidPermutation& e) {
    throw ParseError(std::string("invalid permutation '") + text + "': " + e.what(), 0);
  }
}

}  // namespace pwordle
