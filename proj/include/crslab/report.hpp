#pragma once

// Text serialization: JSON reports and comma-separated tables. Rationals are
// written as "p/q" (or "n"), integers as full-precision decimal strings.

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "crslab/suites.hpp"
#include "crslab/weighted.hpp"

namespace crslab {

using Json = nlohmann::ordered_json;

Json to_json(const CheckReport& c);
Json to_json(const ConvergenceReport& c);
Json to_json(const Report& r);

/// Pretty-printed JSON array with a trailing newline.
std::string render_reports(const std::vector<Report>& reports);

/// Writes fields joined by ',' and terminated by '\n'. No quoting: callers
/// never pass fields containing commas.
void write_csv_row(std::ostream& os, const std::vector<std::string>& fields);

inline const std::vector<std::string> kCrsColumns{"k", "s", "j", "value", "d", "gcd_s"};
inline const std::vector<std::string> kWeightedColumns{
    "k", "r", "s", "value", "leading", "bernoulli_tail", "delta_correction"};
inline const std::vector<std::string> kSequenceColumns{"n",     "k_n",    "omega",
                                                       "value", "target", "gap"};

std::vector<std::string> weighted_row(const WeightedAverageBreakdown& b);
std::vector<std::string> sequence_row(const ConvergenceRow& row);

}  // namespace crslab
