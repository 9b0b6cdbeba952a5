// pwordle: command-line front end for the permutation wordle library.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "pwordle/closedform.hpp"
#include "pwordle/error.hpp"
#include "pwordle/report.hpp"
#include "pwordle/verify.hpp"

using namespace pwordle;
using nlohmann::ordered_json;

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kVerifyFailed = 2, kLooped = 3 };

struct OutputConfig {
  std::string format = "text";
  std::string output;
  int threads = 0;
  double max_cost = 1e10;
};

class Output {
 public:
  explicit Output(const OutputConfig& cfg) {
    if (cfg.output.empty() || cfg.output == "-") return;
    std::filesystem::path path(cfg.output);
    if (path.is_relative()) {
      if (const char* dir = std::getenv("PWORDLE_OUTPUT_DIR"); dir && *dir) path = std::filesystem::path(dir) / path;
    }
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    file_.open(path);
    if (!file_) throw Error("cannot open output file " + path.string());
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump() << '\n'; }

std::optional<int> optional_n(int n) { return n > 0 ? std::optional<int>(n) : std::nullopt; }

int cmd_play(const OutputConfig& cfg, const std::string& secret_text, const std::string& strategy_text) {
  const Permutation secret = parse_permutation(secret_text);
  const Strategy strategy = parse_strategy(strategy_text, secret.size());
  if (strategy.length() != secret.size())
    throw ParseError("strategy length " + std::to_string(strategy.length()) + " does not match secret length " +
                         std::to_string(secret.size()),
                     0);
  const GameTrace trace = play(secret, strategy);
  Output out(cfg);
  if (cfg.format == "json") {
    emit_json(out.stream(), report::to_json(trace));
  } else if (cfg.format == "csv") {
    out.stream() << "round,guess,correct\n";
    for (std::size_t r = 0; r < trace.guesses.size(); ++r)
      out.stream() << r + 1 << ",\"" << trace.guesses[r].to_string() << "\",\""
                   << report::position_set_string(trace.correct_sets[r]) << "\"\n";
  } else {
    report::write_text(out.stream(), trace);
  }
  return trace.solved ? kOk : kLooped;
}

int cmd_gf(const OutputConfig& cfg, const std::string& strategy_text, int n, const std::string& method) {
  const Strategy strategy = parse_strategy(strategy_text, optional_n(n));
  if (n > 0 && strategy.length() != n) throw ParseError("--n does not match the strategy length", 0);
  const GFCoefficients gf =
      generating_function(strategy, method == "playback" ? GfMethod::playback : GfMethod::decomposition);
  Output out(cfg);
  if (cfg.format == "json")
    emit_json(out.stream(), report::to_json(gf));
  else if (cfg.format == "csv")
    report::write_gf_csv(out.stream(), gf);
  else
    report::write_text(out.stream(), gf);
  return kOk;
}

int cmd_avg(const OutputConfig& cfg, const std::string& strategy_text, int n) {
  const Strategy strategy = parse_strategy(strategy_text, optional_n(n));
  const AverageGuesses avg = average_guesses(generating_function(strategy));
  Output out(cfg);
  if (cfg.format == "json") {
    ordered_json j = {{"n", strategy.length()}, {"strategy", strategy.to_string()}};
    j["average"] = report::to_json(avg);
    emit_json(out.stream(), j);
  } else if (cfg.format == "csv") {
    out.stream() << "strategy_id,n,avg_num,avg_den\n\"" << strategy.to_string() << "\"," << strategy.length() << ',';
    if (avg.infinite)
      out.stream() << "inf,0\n";
    else
      out.stream() << avg.value.numerator() << ',' << avg.value.denominator() << '\n';
  } else {
    out.stream() << "average guesses: " << avg.to_string();
    if (!avg.infinite) out.stream() << " (" << avg.to_double() << ")";
    out.stream() << '\n';
  }
  return kOk;
}

int cmd_scan(const OutputConfig& cfg, int n, const std::string& cls, bool summary_only) {
  ScanOptions options;
  options.threads = cfg.threads;
  options.max_cost = cfg.max_cost;
  options.keep_rows = !summary_only;
  const ScanResult result = scan(n, parse_strategy_class(cls), options);
  Output out(cfg);
  if (cfg.format == "json")
    emit_json(out.stream(), report::to_json(result));
  else if (cfg.format == "csv")
    report::write_scan_csv(out.stream(), result);
  else
    report::write_text(out.stream(), result);
  return kOk;
}

void write_reports(const OutputConfig& cfg, const std::vector<VerificationReport>& reports) {
  Output out(cfg);
  if (cfg.format == "json") {
    if (reports.size() == 1) {
      emit_json(out.stream(), report::to_json(reports.front()));
    } else {
      ordered_json all = ordered_json::array();
      for (const auto& r : reports) all.push_back(report::to_json(r));
      emit_json(out.stream(), all);
    }
  } else if (cfg.format == "csv") {
    out.stream() << "id,n,ok,observed,expected\n";
    for (const auto& r : reports)
      for (const auto& row : r.rows) {
        auto quote = [](std::string s) {
          std::string o = "\"";
          for (char c : s) o += c == '"' ? std::string("\"\"") : std::string(1, c);
          return o + "\"";
        };
        out.stream() << r.id << ',' << row.n << ',' << (row.ok ? 1 : 0) << ',' << quote(row.observed.dump()) << ','
                     << quote(row.expected.dump()) << '\n';
      }
  } else {
    for (const auto& r : reports) report::write_text(out.stream(), r);
  }
}

int cmd_verify(const OutputConfig& cfg, const std::string& id, int min_n, int max_n, const std::string& cls,
               bool list) {
  if (list) {
    Output out(cfg);
    for (const auto& info : theorem_catalog())
      out.stream() << info.id << "  [" << info.default_min << ".." << info.default_max << "]  " << info.summary
                   << '\n';
    return kOk;
  }
  if (id.empty()) throw ParseError("verify needs --id (or --list)", 0);
  VerifyOptions options;
  options.threads = cfg.threads;
  options.max_cost = cfg.max_cost;
  if (!cls.empty()) options.family = parse_strategy_class(cls);

  std::vector<std::string> ids;
  if (id == "all")
    for (const auto& info : theorem_catalog()) ids.push_back(info.id);
  else
    ids.push_back(id);

  std::vector<VerificationReport> reports;
  for (const auto& one : ids) {
    const TheoremInfo& info = theorem_info(one);
    std::optional<std::pair<int, int>> range;
    if (min_n > 0 || max_n > 0) range = std::pair{min_n > 0 ? min_n : info.default_min, max_n > 0 ? max_n : info.default_max};
    reports.push_back(verify(one, range, options));
  }
  write_reports(cfg, reports);
  const bool ok = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  return ok ? kOk : kVerifyFailed;
}

int cmd_sequence(const OutputConfig& cfg, const std::string& name) {
  std::vector<VerificationReport> reports;
  if (name == "all")
    for (const auto& n : closedform::reference_sequence_names()) reports.push_back(check_sequence(n));
  else
    reports.push_back(check_sequence(name));
  write_reports(cfg, reports);
  return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); }) ? kOk
                                                                                                : kVerifyFailed;
}

int cmd_tables(const OutputConfig& cfg, int which) {
  Output out(cfg);
  std::ostream& os = out.stream();
  if (which == 1) {
    const auto rows = table1();
    if (cfg.format == "json") {
      ordered_json j = ordered_json::array();
      for (const auto& r : rows)
        j.push_back({{"secret", r.secret.to_vector()},
                     {"j2_2341", r.j2_cyclic_shift.to_vector()},
                     {"j2_2143", r.j2_involution.to_vector()}});
      emit_json(os, {{"table", 1}, {"gamma2", {{"2,3,4,1", "4,1,2,3"}, {"2,1,4,3", "2,1,4,3"}}}, {"rows", j}});
    } else if (cfg.format == "csv") {
      os << "secret,j2_2341,j2_2143\n";
      for (const auto& r : rows)
        os << '"' << r.secret.to_string() << "\",\"" << report::position_set_string(r.j2_cyclic_shift) << "\",\""
           << report::position_set_string(r.j2_involution) << "\"\n";
    } else {
      os << "secret        S[4]=[2,3,4,1]   S[4]=[2,1,4,3]\n";
      os << "              g2=[4,1,2,3]     g2=[2,1,4,3]\n";
      for (const auto& r : rows) {
        std::ostringstream line;
        line << '[' << r.secret.to_string() << ']';
        std::string a = report::position_set_string(r.j2_cyclic_shift);
        std::string b = report::position_set_string(r.j2_involution);
        os << std::left << std::setw(14) << line.str() << std::setw(17) << a << b << '\n';
      }
    }
    return kOk;
  }
  if (which == 2) {
    const auto rows = table2();
    bool ok = true;
    if (cfg.format == "json") {
      ordered_json j = ordered_json::array();
      for (const auto& r : rows) {
        ordered_json row = {{"n", r.n}, {"top", r.top.to_vector()}, {"reference", r.reference},
                            {"computed", report::to_json(r.computed)}, {"matches", r.matches}};
        if (r.duplicate_of_previous) row["duplicate_row"] = true;
        j.push_back(std::move(row));
      }
      emit_json(os, {{"table", 2}, {"rows", j}});
    } else if (cfg.format == "csv") {
      os << "n,top,computed,matches,duplicate_row\n";
      for (const auto& r : rows)
        os << r.n << ",\"" << r.top.to_string() << "\",\"" << report::polynomial(r.computed) << "\","
           << (r.matches ? 1 : 0) << ',' << (r.duplicate_of_previous ? 1 : 0) << '\n';
    } else {
      for (const auto& r : rows)
        os << "n=" << r.n << "  " << std::left << std::setw(14) << ("[" + r.top.to_string() + "]")
           << report::polynomial(r.computed) << (r.matches ? "" : "   MISMATCH")
           << (r.duplicate_of_previous ? "   (listed twice)" : "") << '\n';
    }
    for (const auto& r : rows) ok = ok && r.matches;
    return ok ? kOk : kVerifyFailed;
  }
  throw ParseError("--which must be 1 or 2", 0);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation wordle: play games, compute generating functions, scan strategies, verify theorems"};
  app.require_subcommand(1);
  OutputConfig cfg;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--output,-o", cfg.output, "Output file (relative paths resolve under $PWORDLE_OUTPUT_DIR)");
    sub->add_option("--threads", cfg.threads, "Worker threads (0: all cores)")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-cost", cfg.max_cost, "Scan cost threshold in subgame steps (default 1e10)");
  };

  std::string secret, strategy_text, method = "decomposition", cls, id, name;
  int n = 0, min_n = 0, max_n = 0, which = 0;
  bool summary_only = false, list = false;

  auto* play_cmd = app.add_subcommand("play", "Play one game and print its trace");
  play_cmd->add_option("--secret", secret, "Secret permutation, e.g. 3,4,1,2")->required();
  play_cmd->add_option("--strategy", strategy_text, "Strategy: cs, csl, inductive:<top>, or 1;2,1;...")->required();
  add_common(play_cmd);

  auto* gf_cmd = app.add_subcommand("gf", "Generating function of a strategy");
  gf_cmd->add_option("--strategy", strategy_text, "Strategy spec")->required();
  gf_cmd->add_option("--n", n, "Length (needed for bare cs/csl)");
  gf_cmd->add_option("--method", method, "playback or decomposition")
      ->check(CLI::IsMember({"playback", "decomposition"}));
  add_common(gf_cmd);

  auto* avg_cmd = app.add_subcommand("avg", "Exact average guess count of a strategy");
  avg_cmd->add_option("--strategy", strategy_text, "Strategy spec")->required();
  avg_cmd->add_option("--n", n, "Length (needed for bare cs/csl)");
  add_common(avg_cmd);

  auto* scan_cmd = app.add_subcommand("scan", "Evaluate every strategy of a family");
  scan_cmd->add_option("--n", n, "Strategy length")->required()->check(CLI::Range(1, kMaxLength));
  scan_cmd->add_option("--class", cls, "cyclic, deranged or inductive")
      ->required()
      ->check(CLI::IsMember({"cyclic", "deranged", "inductive"}));
  scan_cmd->add_flag("--summary-only", summary_only, "Only report extrema, not one row per strategy");
  add_common(scan_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Check a theorem computationally");
  verify_cmd->add_option("--id", id, "Theorem id, or 'all'");
  verify_cmd->add_option("--min", min_n, "Smallest n");
  verify_cmd->add_option("--max", max_n, "Largest n");
  verify_cmd->add_option("--class", cls, "Restrict family-generic checks to one class")
      ->check(CLI::IsMember({"cyclic", "deranged", "inductive"}));
  verify_cmd->add_flag("--list", list, "List theorem ids and default ranges");
  add_common(verify_cmd);

  auto* seq_cmd = app.add_subcommand("sequence", "Regenerate a reference sequence and compare it");
  seq_cmd->add_option("--name", name, "A284843, csl-cubic, A385588-prefix, or all")->required();
  add_common(seq_cmd);

  auto* tables_cmd = app.add_subcommand("tables", "Print the reference tables");
  tables_cmd->add_option("--which", which, "1 or 2")->required();
  add_common(tables_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*play_cmd) return cmd_play(cfg, secret, strategy_text);
    if (*gf_cmd) return cmd_gf(cfg, strategy_text, n, method);
    if (*avg_cmd) return cmd_avg(cfg, strategy_text, n);
    if (*scan_cmd) return cmd_scan(cfg, n, cls, summary_only);
    if (*verify_cmd) return cmd_verify(cfg, id, min_n, max_n, cls, list);
    if (*seq_cmd) return cmd_sequence(cfg, name);
    if (*tables_cmd) return cmd_tables(cfg, which);
  } catch (const ScanRefused& e) {
    std::cerr << "refused: " << e.what() << "\n  estimate " << e.estimate()
              << " steps; pass --max-cost <steps> to override\n";
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
