#pragma once

#include <ostream>
#include <string>

#include <json.hpp>

#include "pwordle/analysis.hpp"
#include "pwordle/engine.hpp"
#include "pwordle/verify.hpp"

namespace pwordle::report {

using nlohmann::ordered_json;

// JSON documents. Key order is fixed so output is byte-stable; the shapes are
// described by the schemas under docs/schemas.
ordered_json to_json(const GameTrace& trace);
ordered_json to_json(const GFCoefficients& gf);
ordered_json to_json(const AverageGuesses& avg);
ordered_json to_json(const ScanResult& scan);
ordered_json to_json(const VerificationReport& report);

/// Scan rows as CSV: strategy_id,n,a_1..a_max,loops,avg_num,avg_den,rho1,rho2,rho3.
/// Infinite averages are written as avg_num=inf, avg_den=0.
void write_scan_csv(std::ostream& out, const ScanResult& scan);
void write_gf_csv(std::ostream& out, const GFCoefficients& gf);

void write_text(std::ostream& out, const GameTrace& trace);
void write_text(std::ostream& out, const GFCoefficients& gf);
void write_text(std::ostream& out, const ScanResult& scan);
void write_text(std::ostream& out, const VerificationReport& report);

/// "x^4 + 11x^3 + 11x^2 + x", highest power first.
std::string polynomial(const GFCoefficients& gf);
std::string position_set_string(PositionSet set);

}  // namespace pwordle::report
