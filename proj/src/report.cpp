#include "pwordle/report.hpp"

#include <iomanip>
#include <sstream>

namespace pwordle::report {

namespace {

ordered_json positions(PositionSet s) { return ordered_json(s.to_vector()); }

ordered_json extremum_json(const ScanExtremum& e) {
  return {{"value", e.value_or_numerator}, {"indices", e.indices}, {"strategies", e.labels}};
}

std::string row_id(const ScanRow& row, StrategyClass cls) {
  return cls == StrategyClass::inductive ? row.strategy.label() : row.strategy.to_string();
}

}  // namespace

std::string position_set_string(PositionSet set) {
  if (set.empty()) return "{}";
  std::string out = "{";
  bool first = true;
  for (int p : set.to_vector()) {
    if (!first) out += ',';
    out += std::to_string(p);
    first = false;
  }
  return out + "}";
}

std::string polynomial(const GFCoefficients& gf) {
  std::string out;
  for (int r = gf.max_rounds(); r >= 1; --r) {
    const auto c = gf.coefficient(r);
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (c != 1) out += std::to_string(c);
    out += r == 1 ? "x" : "x^" + std::to_string(r);
  }
  if (gf.loop_count > 0) out += (out.empty() ? "" : " + ") + std::to_string(gf.loop_count) + " looping";
  return out.empty() ? "0" : out;
}

ordered_json to_json(const GameTrace& trace) {
  ordered_json rounds = ordered_json::array();
  for (std::size_t r = 0; r < trace.guesses.size(); ++r)
    rounds.push_back({{"guess", trace.guesses[r].to_vector()}, {"correct", positions(trace.correct_sets[r])}});
  ordered_json j = {{"secret", trace.secret.to_vector()},
                    {"status", trace.solved ? "solved" : "looped"},
                    {"guesses", trace.solved ? trace.rounds() : static_cast<int>(trace.guesses.size())},
                    {"rounds", std::move(rounds)}};
  return j;
}

ordered_json to_json(const GFCoefficients& gf) {
  ordered_json coeffs = ordered_json::object();
  for (int r = 1; r <= gf.max_rounds(); ++r)
    if (gf.coefficient(r) != 0) coeffs[std::to_string(r)] = gf.coefficient(r);
  return {{"n", gf.n}, {"coeffs", std::move(coeffs)}, {"loops", gf.loop_count}};
}

ordered_json to_json(const AverageGuesses& avg) {
  if (avg.infinite) return {{"infinite", true}, {"num", nullptr}, {"den", nullptr}};
  return {{"infinite", false}, {"num", avg.value.numerator()}, {"den", avg.value.denominator()}};
}

ordered_json to_json(const ScanResult& scan) {
  ordered_json rows = ordered_json::array();
  for (const auto& row : scan.rows) {
    rows.push_back({{"index", row.index},
                    {"strategy", row_id(row, scan.strategy_class)},
                    {"gf", to_json(row.gf)},
                    {"average", to_json(row.average)},
                    {"rho", row.rho}});
  }
  const auto& s = scan.summary;
  ordered_json summary = {{"strategies", s.strategies},
                          {"strategies_with_loops", s.strategies_with_loops},
                          {"min_average", extremum_json(s.min_average)},
                          {"min_average_infinite", s.min_average_infinite},
                          {"max_a3", extremum_json(s.max_a3)},
                          {"min_a3", extremum_json(s.min_a3)},
                          {"max_rho2", extremum_json(s.max_rho2)},
                          {"min_rho2", extremum_json(s.min_rho2)}};
  return {{"n", scan.n},
          {"class", to_string(scan.strategy_class)},
          {"cost_estimate", scan.cost_estimate},
          {"rows", std::move(rows)},
          {"summary", std::move(summary)}};
}

ordered_json to_json(const VerificationReport& report) {
  ordered_json rows = ordered_json::array();
  for (const auto& r : report.rows)
    rows.push_back({{"n", r.n}, {"observed", r.observed}, {"expected", r.expected}, {"ok", r.ok}});
  ordered_json j = {{"id", report.id},
                    {"range", {report.min_n, report.max_n}},
                    {"rows", std::move(rows)},
                    {"status", to_string(report.status)},
                    {"seconds", report.seconds}};
  if (!report.notes.empty()) j["notes"] = report.notes;
  if (!report.counterexample.empty()) j["counterexample"] = report.counterexample;
  return j;
}

void write_scan_csv(std::ostream& out, const ScanResult& scan) {
  int width = 0;
  for (const auto& row : scan.rows) width = std::max(width, row.gf.max_rounds());
  out << "strategy_id,n";
  for (int r = 1; r <= width; ++r) out << ",a_" << r;
  out << ",loops,avg_num,avg_den,rho1,rho2,rho3\n";
  for (const auto& row : scan.rows) {
    out << '"' << row_id(row, scan.strategy_class) << '"' << ',' << scan.n;
    for (int r = 1; r <= width; ++r) out << ',' << row.gf.coefficient(r);
    out << ',' << row.gf.loop_count;
    if (row.average.infinite)
      out << ",inf,0";
    else
      out << ',' << row.average.value.numerator() << ',' << row.average.value.denominator();
    out << ',' << row.rho[0] << ',' << row.rho[1] << ',' << row.rho[2] << '\n';
  }
}

void write_gf_csv(std::ostream& out, const GFCoefficients& gf) {
  out << "r,count\n";
  for (int r = 1; r <= gf.max_rounds(); ++r) out << r << ',' << gf.coefficient(r) << '\n';
  out << "loops," << gf.loop_count << '\n';
}

void write_text(std::ostream& out, const GameTrace& trace) {
  out << "secret " << trace.secret.to_string() << '\n';
  for (std::size_t r = 0; r < trace.guesses.size(); ++r)
    out << "guess " << r + 1 << ": " << trace.guesses[r].to_string() << "  correct "
        << position_set_string(trace.correct_sets[r]) << '\n';
  if (trace.solved)
    out << "solved in " << trace.rounds() << " guess" << (trace.rounds() == 1 ? "" : "es") << '\n';
  else
    out << "looped: guess " << trace.guesses.size() << " repeats an earlier state\n";
}

void write_text(std::ostream& out, const GFCoefficients& gf) {
  out << "n = " << gf.n << "  f(x) = " << polynomial(gf) << '\n';
}

void write_text(std::ostream& out, const ScanResult& scan) {
  out << to_string(scan.strategy_class) << " strategies, n = " << scan.n << ": " << scan.summary.strategies
      << " evaluated, " << scan.summary.strategies_with_loops << " with loops\n";
  for (const auto& row : scan.rows)
    out << "  " << std::left << std::setw(scan.strategy_class == StrategyClass::inductive ? 20 : 40)
        << row_id(row, scan.strategy_class) << std::right << "  avg " << row.average.to_string() << "  "
        << polynomial(row.gf) << '\n';
  const auto& s = scan.summary;
  auto line = [&](const char* name, const ScanExtremum& e) {
    out << name << ' ' << e.value_or_numerator << " at";
    for (const auto& l : e.labels) out << ' ' << l;
    out << '\n';
  };
  if (s.min_average_infinite) {
    out << "min average: inf (every strategy loops)\n";
  } else {
    Rational avg(static_cast<std::int64_t>(s.min_average.value_or_numerator), 1);
    std::int64_t fact = 1;
    for (int i = 2; i <= scan.n; ++i) fact *= i;
    avg /= fact;
    out << "min average " << avg.numerator() << '/' << avg.denominator() << " at";
    for (const auto& l : s.min_average.labels) out << ' ' << l;
    out << '\n';
  }
  line("max a_3", s.max_a3);
  line("min a_3", s.min_a3);
  line("max rho=2", s.max_rho2);
  line("min rho=2", s.min_rho2);
}

void write_text(std::ostream& out, const VerificationReport& report) {
  out << report.id << " [n = " << report.min_n << ".." << report.max_n << "]: " << to_string(report.status)
      << " (" << std::fixed << std::setprecision(3) << report.seconds << " s)\n";
  out.unsetf(std::ios::floatfield);
  for (const auto& r : report.rows)
    out << "  n=" << r.n << (r.ok ? "  ok   " : "  FAIL ") << "observed " << r.observed.dump() << "  expected "
        << r.expected.dump() << '\n';
  for (const auto& note : report.notes) out << "  note: " << note << '\n';
  if (!report.counterexample.empty()) out << "  first counterexample: " << report.counterexample << '\n';
}

}  // namespace pwordle::report
