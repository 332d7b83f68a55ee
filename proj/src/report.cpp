#include "crslab/report.hpp"

#include <ostream>

namespace crslab {

namespace {

Json object_of(const KeyValues& kv) {
  Json j = Json::object();
  for (const auto& [key, value] : kv) j[key] = value;
  return j;
}

Json optional_str(const std::optional<Rational>& r) {
  return r ? Json(r->str()) : Json(nullptr);
}

}  // namespace

Json to_json(const CheckReport& c) {
  Json j;
  j["check_id"] = c.check_id;
  j["inputs"] = object_of(c.inputs);
  j["lhs"] = c.lhs.str();
  j["rhs"] = c.rhs.str();
  j["relation"] = std::string(relation_symbol(c.relation));
  j["holds"] = c.holds;
  j["margin"] = c.margin.str();
  j["paper_anchor"] = c.paper_anchor;
  if (c.hypothesis_met) j["hypothesis_met"] = *c.hypothesis_met;
  if (!c.details.empty()) j["details"] = object_of(c.details);
  return j;
}

Json to_json(const ConvergenceReport& c) {
  Json j;
  j["check_id"] = "thm32";
  j["sequence_id"] = c.sequence_id;
  j["inputs"] = {{"variant", std::string(variant_name(c.variant))},
                 {"r", std::to_string(c.r)},
                 {"s", std::to_string(c.s)},
                 {"lambda", c.lambda.str()}};
  j["target"] = c.target.str();
  if (c.alt_target) j["alt_target"] = c.alt_target->str();
  Json rows = Json::array();
  for (const auto& row : c.rows) {
    Json r;
    r["n"] = row.n;
    r["k_n"] = to_string(row.k_n);
    r["omega"] = row.omega;
    r["value"] = optional_str(row.value);
    r["target"] = row.target.str();
    r["gap"] = optional_str(row.gap);
    if (!row.note.empty()) r["note"] = row.note;
    rows.push_back(std::move(r));
  }
  j["rows"] = std::move(rows);
  j["final_gap"] = optional_str(c.final_gap);
  j["tolerance"] = c.tolerance.str();
  j["converged"] = c.converged;
  j["paper_anchor"] = c.paper_anchor;
  return j;
}

Json to_json(const Report& r) {
  return std::visit([](const auto& v) { return to_json(v); }, r);
}

std::string render_reports(const std::vector<Report>& reports) {
  Json arr = Json::array();
  for (const auto& r : reports) arr.push_back(to_json(r));
  return arr.dump(2) + "\n";
}

void write_csv_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i > 0) os << ',';
    os << fields[i];
  }
  os << '\n';
}

std::vector<std::string> weighted_row(const WeightedAverageBreakdown& b) {
  return {to_string(b.k),
          std::to_string(b.r),
          std::to_string(b.s),
          b.value.str(),
          b.leading.str(),
          b.bernoulli_tail.str(),
          b.delta_correction ? b.delta_correction->str() : std::string()};
}

std::vector<std::string> sequence_row(const ConvergenceRow& row) {
  return {std::to_string(row.n),
          to_string(row.k_n),
          std::to_string(row.omega),
          row.value ? row.value->str() : std::string(),
          row.target.str(),
          row.gap ? row.gap->str() : std::string()};
}

}  // namespace crslab
