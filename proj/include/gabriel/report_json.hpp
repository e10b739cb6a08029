#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "gabriel/verify.hpp"

namespace gabriel {

/// Report as JSON with a fixed key order; arrays follow stage, check and
/// interval-table order, so equal inputs give identical bytes.
inline nlohmann::ordered_json report_to_json(const Report& report) {
  using nlohmann::ordered_json;
  const auto& names = report.element_names;
  ordered_json j;
  j["lattice"] = {{"name", report.lattice_name}, {"size", report.size}, {"modular", report.modular}};
  j["stages"] = ordered_json::array();
  for (const auto& s : report.stages) {
    j["stages"].push_back({{"index", s.index}, {"set_size", s.set_size}});
  }
  j["stabilization_index"] = report.stabilization_index;
  j["checks"] = ordered_json::array();
  for (const auto& c : report.checks) {
    ordered_json entry = {{"name", c.name}, {"pass", c.pass}};
    if (c.counterexample) {
      entry["counterexample"] = {names[c.counterexample->lower], names[c.counterexample->upper]};
    }
    j["checks"].push_back(std::move(entry));
  }
  j["dimensions"] = ordered_json::array();
  for (const auto& d : report.dimensions) {
    j["dimensions"].push_back(
        {{"lower", names[d.interval.lower]}, {"upper", names[d.interval.upper]}, {"gdim", d.gdim}});
  }
  j["notes"] = report.notes;
  return j;
}

inline std::string write_report(const Report& report) {
  return report_to_json(report).dump(2) + "\n";
}

}  // namespace gabriel
