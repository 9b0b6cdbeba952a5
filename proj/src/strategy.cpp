#include "pwordle/strategy.hpp"

#include <algorithm>
#include <cctype>

#include "pwordle/error.hpp"

namespace pwordle {

namespace {

std::vector<Permutation> cyclic_shift_prefix(int n) {
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) out.push_back(cyclic_shift_component(k));
  return out;
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

StrategyClass parse_strategy_class(const std::string& name) {
  if (name == "cyclic") return StrategyClass::cyclic;
  if (name == "deranged") return StrategyClass::deranged;
  if (name == "inductive") return StrategyClass::inductive;
  throw UnknownId("unknown strategy class '" + name + "' (expected cyclic, deranged or inductive)");
}

std::string to_string(StrategyClass cls) {
  switch (cls) {
    case StrategyClass::cyclic: return "cyclic";
    case StrategyClass::deranged: return "deranged";
    case StrategyClass::inductive: return "inductive";
  }
  return "?";
}

Permutation cyclic_shift_component(int k) {
  if (k < 1 || k > kMaxLength) throw InvalidStrategy("cyclic shift component length out of range");
  PermutationBuilder b(k);
  for (int i = 0; i < k; ++i) b.set(i, (i + 1) % k + 1);
  return b.get();
}

bool Strategy::is_inductive() const noexcept {
  const int n = length();
  if (n < 3 || !is_cyclic(top())) return false;
  for (int k = 1; k < n; ++k)
    if (components_[static_cast<std::size_t>(k - 1)] != cyclic_shift_component(k)) return false;
  return true;
}

std::string Strategy::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components_.size(); ++i) {
    if (i) out += ';';
    out += components_[i].to_string();
  }
  return out;
}

std::string Strategy::label() const {
  if (is_inductive()) return "[" + top().to_string() + "]";
  return to_string();
}

Strategy cyclic_shift(int n) {
  if (n < 1) throw InvalidStrategy("cyclic_shift requires n >= 1");
  return Strategy(cyclic_shift_prefix(n), StrategyClass::cyclic);
}

Strategy cyclic_shift_left_top(int n) {
  if (n < 3) throw InvalidStrategy("cyclic_shift_left_top requires n >= 3 (left and right shift coincide below)");
  PermutationBuilder b(n);
  for (int i = 0; i < n; ++i) b.set(i, i == 0 ? n : i);
  return inductive(b.get());
}

Strategy inductive(const Permutation& top) {
  const int n = top.size();
  if (n < 3) throw InvalidStrategy("inductive strategies need a top component of length >= 3");
  if (!is_cyclic(top)) throw NotCyclic("top component [" + top.to_string() + "] is not a single " +
                                       std::to_string(n) + "-cycle");
  auto comps = cyclic_shift_prefix(n - 1);
  comps.push_back(top);
  return Strategy(std::move(comps), StrategyClass::inductive);
}

Strategy from_components(std::vector<Permutation> components) {
  if (components.empty()) throw InvalidStrategy("strategy needs at least one component");
  bool all_cyclic = true;
  for (std::size_t i = 0; i < components.size(); ++i) {
    const int expected = static_cast<int>(i) + 1;
    const auto& c = components[i];
    if (c.size() != expected)
      throw InvalidStrategy("component " + std::to_string(expected) + " has length " + std::to_string(c.size()));
    if (expected >= 2 && !is_derangement(c))
      throw InvalidStrategy("component " + std::to_string(expected) + " [" + c.to_string() +
                            "] is not a derangement");
    all_cyclic = all_cyclic && is_cyclic(c);
  }
  return Strategy(std::move(components), all_cyclic ? StrategyClass::cyclic : StrategyClass::deranged);
}

Strategy mirror(const Strategy& strategy) {
  std::vector<Permutation> comps;
  for (const auto& c : strategy.components()) {
    const int k = c.size();
    PermutationBuilder b(k);
    for (int i = 0; i < k; ++i) b.set(i, k + 1 - c[k - 1 - i]);
    comps.push_back(b.get());
  }
  return from_components(std::move(comps));
}

StrategySpace::StrategySpace(int n, StrategyClass cls) : n_(n), class_(cls) {
  if (n < 1 || n > kMaxLength) throw InvalidStrategy("strategy length out of range");
  if (cls == StrategyClass::inductive && n < 3) throw InvalidStrategy("inductive strategies need n >= 3");
  choices_.resize(static_cast<std::size_t>(n) + 1);
  for (int k = 3; k <= n; ++k) {
    auto& slot = choices_[static_cast<std::size_t>(k)];
    if (cls == StrategyClass::inductive && k < n)
      slot.push_back(cyclic_shift_component(k));
    else
      slot = enumerate(k, cls == StrategyClass::deranged ? PermClass::derangements : PermClass::cyclic);
    size_ *= slot.size();
  }
}

Strategy StrategySpace::at(std::uint64_t index) const {
  if (index >= size_) throw std::out_of_range("strategy index out of range");
  std::vector<std::size_t> digit(static_cast<std::size_t>(n_) + 1, 0);
  for (int k = n_; k >= 3; --k) {
    const auto radix = choices_[static_cast<std::size_t>(k)].size();
    digit[static_cast<std::size_t>(k)] = index % radix;
    index /= radix;
  }
  std::vector<Permutation> comps;
  comps.reserve(static_cast<std::size_t>(n_));
  for (int k = 1; k <= n_; ++k)
    comps.push_back(k < 3 ? cyclic_shift_component(k)
                          : choices_[static_cast<std::size_t>(k)][digit[static_cast<std::size_t>(k)]]);
  return Strategy(std::move(comps), class_);
}

std::vector<Strategy> enumerate_strategies(int n, StrategyClass cls) {
  StrategySpace space(n, cls);
  std::vector<Strategy> out;
  out.reserve(space.size());
  for (std::uint64_t i = 0; i < space.size(); ++i) out.push_back(space.at(i));
  return out;
}

Strategy parse_strategy(const std::string& raw, std::optional<int> n_hint) {
  const std::string text = trim(raw);
  const auto colon = text.find(':');
  const std::string head = lower(trim(text.substr(0, colon)));

  auto length_arg = [&](const char* what) -> int {
    if (colon != std::string::npos) {
      const std::string arg = trim(text.substr(colon + 1));
      if (arg.empty() || !std::all_of(arg.begin(), arg.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw ParseError(std::string("expected a length after '") + what + ":'", colon + 1);
      return std::stoi(arg);
    }
    if (!n_hint) throw ParseError(std::string("strategy '") + what + "' needs a length (use " + what + ":N)", 0);
    return *n_hint;
  };

  if (head == "cs") return cyclic_shift(length_arg("cs"));
  if (head == "csl") return cyclic_shift_left_top(length_arg("csl"));
  if (head == "inductive") {
    if (colon == std::string::npos) throw ParseError("expected 'inductive:<top component>'", text.size());
    return inductive(parse_permutation(text.substr(colon + 1)));
  }
  if (colon != std::string::npos) throw ParseError("unknown strategy form '" + head + "'", 0);

  std::vector<Permutation> comps;
  std::size_t start = 0;
  while (true) {
    const auto semi = text.find(';', start);
    const std::string piece = text.substr(start, semi == std::string::npos ? std::string::npos : semi - start);
    try {
      comps.push_back(parse_permutation(piece));
    } catch (const ParseError& e) {
      throw ParseError("component " + std::to_string(comps.size() + 1) + ": " + e.message(), start + e.position());
    }
    if (semi == std::string::npos) break;
    start = semi + 1;
  }
  return from_components(std::move(comps));
}

}  // namespace pwordle
