#pragma once

// JSON-lines report records. Objects use nlohmann::json's sorted-key layout and
// carry only integers, booleans and strings, so parse -> dump is byte-stable.

#include <json.hpp>
#include <string>
#include <string_view>

#include "fibfield/fibseq.hpp"
#include "fibfield/quadext.hpp"
#include "fibfield/theorem.hpp"

namespace fibfield::cli {

using nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  u64 cap = kDefaultEnumerationCap;
  u64 seed = kGeneratorSeed;
  RecurrenceParams params = RecurrenceParams::fibonacci();
};

json make_record(std::string_view kind, const RunConfig& config, json payload);
std::string serialize(const json& record);

json to_json(const RecurrenceParams& params);
json to_json(const QuadElement& x);
json to_json(const EigenData& ed);
json to_json(const StarOrbit& orbit);
json to_json(const MainReport& report);
json to_json(const ComplementaryReport& report);

}  // namespace fibfield::cli
