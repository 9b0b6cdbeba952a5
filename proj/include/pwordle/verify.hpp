#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "pwordle/analysis.hpp"

namespace pwordle {

enum class VerifyStatus { pass, fail, erratum_noted };
std::string to_string(VerifyStatus status);

struct VerificationRow {
  int n = 0;
  nlohmann::ordered_json observed;
  nlohmann::ordered_json expected;
  bool ok = false;
};

struct VerificationReport {
  std::string id;
  int min_n = 0;
  int max_n = 0;
  std::vector<VerificationRow> rows;
  VerifyStatus status = VerifyStatus::fail;
  double seconds = 0;
  std::vector<std::string> notes;
  /// First failing strategy/secret, empty when everything passed.
  std::string counterexample;

  bool passed() const noexcept { return status != VerifyStatus::fail; }
};

struct VerifyOptions {
  int threads = 0;
  double max_cost = 1e10;
  /// Restricts family-generic checks (linquad, avg-optimality) to one class.
  std::optional<StrategyClass> family;
};

struct TheoremInfo {
  std::string id;
  std::string summary;
  int default_min;
  int default_max;
};

const std::vector<TheoremInfo>& theorem_catalog();
const TheoremInfo& theorem_info(const std::string& id);

/// Runs one check over n in [min_n, max_n] (defaults from the catalog).
/// Throws UnknownId for unknown ids and ScanRefused for oversized ranges.
VerificationReport verify(const std::string& id, std::optional<std::pair<int, int>> n_range = std::nullopt,
                          const VerifyOptions& options = {});

/// Regenerates a reference sequence from first principles and compares it.
VerificationReport check_sequence(const std::string& name);

// Reference tables -----------------------------------------------------------

struct Table1Row {
  Permutation secret;
  PositionSet j2_cyclic_shift;  // top [2,3,4,1]
  PositionSet j2_involution;    // top [2,1,4,3]
};

/// J_2 for every derangement of length 4 under the two length-4 components.
std::vector<Table1Row> table1();
/// The reference grid, secret by secret.
const std::vector<Table1Row>& table1_reference();

struct Table2Row {
  int n;
  Permutation top;
  std::vector<std::uint64_t> reference;  // a_1, a_2, ... as listed
  GFCoefficients computed;
  bool matches;
  bool duplicate_of_previous;  // the reference table repeats one n = 4 row
};

/// Every listed row of the inductive-strategy table with recomputed gf.
std::vector<Table2Row> table2();
/// All inductive strategies of length n with their gf (complete version of the table block).
std::vector<std::pair<Strategy, GFCoefficients>> table2_complete(int n);

}  // namespace pwordle
