#include "records.hpp"

namespace fibfield::cli {

json make_record(std::string_view kind, const RunConfig& config, json payload) {
  return json{
      {"schema_version", kSchemaVersion},
      {"kind", std::string(kind)},
      {"config", {{"cap", config.cap}, {"seed", config.seed}, {"params", to_json(config.params)}}},
      {"payload", std::move(payload)},
  };
}

std::string serialize(const json& record) { return record.dump(); }

json to_json(const RecurrenceParams& params) { return {{"P", params.P}, {"Q", params.Q}}; }

json to_json(const QuadElement& x) { return {{"c0", x.c0()}, {"c1", x.c1()}}; }

json to_json(const EigenData& ed) {
  json j{{"splitting", std::string(to_string(ed.splitting()))},
         {"l", ed.l},
         {"l_prime", ed.l_prime},
         {"M0", ed.M0},
         {"M1", ed.M1}};
  if (const auto* split = std::get_if<SplitRoots>(&ed.roots)) {
    j["phi"] = split->phi;
    j["phi_prime"] = split->phi_prime;
  } else {
    const auto& inert = std::get<InertRoots>(ed.roots);
    j["phi"] = to_json(inert.phi);
    j["phi_prime"] = to_json(inert.phi_prime);
  }
  return j;
}

json to_json(const StarOrbit& orbit) {
  return {{"a1", orbit.representative.a1()},
          {"a2", orbit.representative.a2()},
          {"minimal_period", orbit.report.minimal_period},
          {"value_set", orbit.report.value_set}};
}

json to_json(const MainReport& report) {
  json conditions = json::array();
  for (const auto& [m, c] : report.entries) {
    conditions.push_back({{"m", m}, {"powerset", c.powerset}, {"period", c.period}, {"order", c.order}});
  }
  return {{"p", report.p},
          {"splitting", std::string(to_string(report.splitting))},
          {"l", report.l},
          {"l_prime", report.l_prime},
          {"star_orbits", report.star_orbits},
          {"conditions", std::move(conditions)},
          {"consistent", report.consistent},
          {"theorem_proven", report.theorem_proven}};
}

json to_json(const ComplementaryReport& report) {
  json entries = json::array();
  for (const auto& e : report.entries) {
    entries.push_back(
        {{"m", e.m}, {"period", e.period}, {"order", e.order}, {"powerset", std::string(to_string(e.powerset))}});
  }
  return {{"p", report.p},
          {"splitting", std::string(to_string(report.splitting))},
          {"l", report.l},
          {"l_prime", report.l_prime},
          {"seed", report.seed},
          {"star_orbits", report.star_orbits},
          {"star_periods", report.star_periods},
          {"entries", std::move(entries)},
          {"equivalence_23", report.equivalence_23},
          {"notes", report.notes}};
}

}  // namespace fibfield::cli
