#include "commands.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "fibfield/fibseq.hpp"
#include "fibfield/theorem.hpp"
#include "records.hpp"

namespace fibfield::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

RecurrenceParams parse_params(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("expected P,Q but got '" + text + "'");
  auto parse_int = [&](std::string_view s) {
    i64 v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) throw UsageError("bad integer '" + std::string(s) + "'");
    return v;
  };
  const std::string_view view(text);
  return {parse_int(view.substr(0, comma)), parse_int(view.substr(comma + 1))};
}

std::string format_set(const ValueSet& values) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < values.size(); ++i) os << (i ? "," : "") << values[i];
  os << '}';
  return os.str();
}

std::string format_element(const json& e) {
  if (e.is_number()) return std::to_string(e.get<u64>());
  return std::to_string(e["c0"].get<u64>()) + "+" + std::to_string(e["c1"].get<u64>()) + "L";
}

void emit(std::ostream& out, const json& record) { out << serialize(record) << '\n'; }

// ---------------------------------------------------------------- analyze

int cmd_analyze(u64 p, const RunConfig& config, bool as_json, std::ostream& out) {
  if (config.params.is_fibonacci() && (p == 2 || p == 5)) {
    json orbits = json::array();
    for (const StarOrbit& o : special_case_report(p)) orbits.push_back(to_json(o));
    json payload{{"p", p}, {"special_case", true}, {"star_orbits", orbits}};
    if (as_json) {
      emit(out, make_record("analyze", config, payload));
    } else {
      out << "p = " << p << ": special prime (discriminant degenerate or p = 2)\n";
      out << "zero-free orbits: " << orbits.size() << '\n';
      for (const auto& o : orbits) {
        out << "  (" << o["a1"] << "," << o["a2"] << ")  period " << o["minimal_period"] << "  values "
            << format_set(o["value_set"].get<ValueSet>()) << '\n';
      }
    }
    return kExitOk;
  }
  const EigenData ed = eigen_data(p, config.params);
  json payload = to_json(ed);
  payload["p"] = p;
  payload["special_case"] = false;
  payload["mat_order"] = mat_order(config.params, Modulus(p));
  if (as_json) {
    emit(out, make_record("analyze", config, payload));
  } else {
    out << "p = " << p << "  P = " << config.params.P << "  Q = " << config.params.Q << "  ("
        << payload["splitting"].get<std::string>() << ")\n";
    out << "phi = " << format_element(payload["phi"]) << "  phi' = " << format_element(payload["phi_prime"]) << '\n';
    out << "l = " << ed.l << "  l' = " << ed.l_prime << "  M0 = " << ed.M0 << "  M1 = " << ed.M1 << '\n';
    out << "mat_order = " << payload["mat_order"] << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- enumerate / period / subgroup

int cmd_enumerate(u64 n, const RunConfig& config, bool as_json, std::ostream& out) {
  const OrbitCensus census = orbit_census(n, config.params, config.cap);
  json orbits = json::array();
  for (const StarOrbit& o : census.star) orbits.push_back(to_json(o));
  json histogram = json::array();
  for (const auto& [length, count] : census.length_histogram) histogram.push_back({length, count});
  const bool prime = is_prime(n);
  json payload{{"N", n},
               {"prime", prime},
               {"exploratory", !prime},
               {"orbit_count", census.orbit_count},
               {"pairs_visited", census.pairs_visited},
               {"length_histogram", histogram},
               {"star_orbits", orbits}};
  if (as_json) {
    emit(out, make_record("enumerate", config, payload));
    return kExitOk;
  }
  out << "N = " << n << (prime ? "" : " (composite, exploratory)") << "  orbits = " << census.orbit_count
      << "  zero-free = " << census.star.size() << '\n';
  for (const StarOrbit& o : census.star) {
    out << "  (" << o.representative.a1() << "," << o.representative.a2() << ")  period "
        << o.report.minimal_period << "  values " << format_set(o.report.value_set) << '\n';
  }
  return kExitOk;
}

int cmd_period(u64 n, u64 a1, u64 a2, const RunConfig& config, bool as_json, std::ostream& out) {
  const Modulus mod(n);
  if (a1 >= n || a2 >= n) throw UsageError("residues must lie in [0, N)");
  const SequenceId seq(mod, a1, a2, config.params);
  const PeriodReport report = period_report(seq);
  json payload{{"N", n},
               {"a1", a1},
               {"a2", a2},
               {"minimal_period", report.minimal_period},
               {"star", report.nonvanishing},
               {"value_set", report.value_set}};
  if (as_json) {
    emit(out, make_record("period", config, payload));
  } else {
    out << "N = " << n << "  seed (" << a1 << "," << a2 << ")  period " << report.minimal_period << "  "
        << (report.nonvanishing ? "zero-free" : "hits zero") << "  values " << format_set(report.value_set) << '\n';
  }
  return kExitOk;
}

int cmd_subgroup(u64 p, u64 r, bool npm, const RunConfig& config, bool as_json, std::ostream& out) {
  json elements = json::array();
  if (npm) {
    const QuadContext ctx(p, config.params.P, config.params.Q);
    for (const QuadElement& x : n_pm_power_subgroup(ctx, r, config.seed)) elements.push_back(to_json(x));
  } else {
    for (u64 v : power_subgroup(p, r)) elements.push_back(v);
  }
  json payload{{"p", p}, {"r", r}, {"npm", npm}, {"size", elements.size()}, {"elements", elements}};
  if (as_json) {
    emit(out, make_record("subgroup", config, payload));
  } else {
    out << (npm ? "(N^+-)^" : "(F_p^x)^") << r << " mod " << p << ": " << elements.size() << " elements\n ";
    for (const auto& e : elements) out << ' ' << format_element(e);
    out << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- verify

enum class VerifyMode { Main, Complementary, Lucas };

std::string_view kind_of(VerifyMode mode) {
  switch (mode) {
    case VerifyMode::Main: return "verify_main";
    case VerifyMode::Complementary: return "verify_complementary";
    case VerifyMode::Lucas: return "verify_lucas";
  }
  return "";
}

json skip_payload(u64 p, const std::string& reason) { return {{"p", p}, {"skipped", true}, {"reason", reason}}; }

json compute_record(u64 p, VerifyMode mode, const RunConfig& config) {
  const std::string_view kind = kind_of(mode);
  if (mode != VerifyMode::Lucas && (p == 2 || p == 5)) {
    return make_record(kind, config, skip_payload(p, "special prime; see `enumerate " + std::to_string(p) + "`"));
  }
  json payload;
  switch (mode) {
    case VerifyMode::Main:
      payload = to_json(verify_main(p, config.cap));
      break;
    case VerifyMode::Complementary:
      payload = to_json(verify_complementary(p, config.cap, config.seed));
      break;
    case VerifyMode::Lucas:
      try {
        payload = to_json(verify_lucas(p, config.params, config.cap));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::BadPrime && e.code() != ErrorCode::DegenerateDiscriminant) throw;
        return make_record(kind, config, skip_payload(p, e.what()));
      }
      break;
  }
  payload["skipped"] = false;
  return make_record(kind, config, std::move(payload));
}

struct Assessment {
  bool skipped = false;
  bool violation = false;
  std::vector<std::string> warnings;
};

Assessment assess(const json& record) {
  Assessment a;
  const json& payload = record["payload"];
  if (payload.value("skipped", false)) {
    a.skipped = true;
    return a;
  }
  const std::string kind = record["kind"];
  const std::string prefix = "p=" + std::to_string(payload["p"].get<u64>()) + ": ";
  if (kind == "verify_main") {
    a.violation = !payload["consistent"].get<bool>();
  } else if (kind == "verify_lucas") {
    if (!payload["consistent"].get<bool>()) a.warnings.push_back(prefix + "Lucas analogue inconsistent (report only)");
  } else if (kind == "verify_complementary") {
    if (!payload["equivalence_23"].get<bool>()) {
      for (const auto& note : payload["notes"]) a.warnings.push_back(prefix + note.get<std::string>());
    }
  }
  return a;
}

std::string human_line(const json& record) {
  const json& p = record["payload"];
  std::ostringstream os;
  os << "p=" << p["p"].get<u64>();
  if (p.value("skipped", false)) {
    os << "  skipped: " << p["reason"].get<std::string>();
    return os.str();
  }
  os << "  " << p["splitting"].get<std::string>() << "  l=" << p["l"] << " l'=" << p["l_prime"]
     << "  star_orbits=" << p["star_orbits"];
  if (record["kind"] == "verify_complementary") {
    os << "  star_periods=" << format_set(p["star_periods"].get<ValueSet>())
       << "  equivalence_23=" << (p["equivalence_23"].get<bool>() ? "true" : "false");
    return os.str();
  }
  ValueSet all_true;
  for (const auto& c : p["conditions"]) {
    if (c["order"].get<bool>() && c["period"].get<bool>() && c["powerset"].get<bool>()) {
      all_true.push_back(c["m"].get<u64>());
    }
  }
  os << "  " << (p["consistent"].get<bool>() ? "consistent" : "INCONSISTENT") << "  holds_at=" << format_set(all_true);
  if (!p["theorem_proven"].get<bool>()) os << "  (exploratory)";
  return os.str();
}

std::map<u64, json> load_cache(const std::string& path, std::string_view kind, const json& config_echo, u64 from,
                               u64 to) {
  std::map<u64, json> cached;
  std::ifstream in(path);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const json record = json::parse(line, nullptr, false);
    if (record.is_discarded() || !record.is_object()) continue;
    if (record.value("kind", "") != kind || record.value("schema_version", 0) != kSchemaVersion) continue;
    if (record["config"] != config_echo) continue;
    const u64 p = record["payload"].value("p", u64{0});
    if (p >= from && p <= to) cached.emplace(p, record);
  }
  return cached;
}

struct VerifyOptions {
  u64 from = 0;
  u64 to = 0;
  bool complementary = false;
  std::string lucas;
  bool as_json = false;
  std::string out_file;
  unsigned jobs = 1;
  bool force = false;
};

int cmd_verify(const VerifyOptions& opts, RunConfig config, std::ostream& out, std::ostream& err) {
  if (opts.from > opts.to) throw UsageError("empty range: from > to");
  if (opts.to > config.cap) throw UsageError("upper bound exceeds enumeration cap " + std::to_string(config.cap));
  if (opts.complementary && !opts.lucas.empty()) throw UsageError("--complementary and --lucas are exclusive");
  if (opts.jobs == 0) throw UsageError("--jobs must be positive");

  VerifyMode mode = VerifyMode::Main;
  if (opts.complementary) mode = VerifyMode::Complementary;
  if (!opts.lucas.empty()) {
    mode = VerifyMode::Lucas;
    config.params = parse_params(opts.lucas);
  }
  const std::string_view kind = kind_of(mode);

  std::vector<u64> primes;
  for (u64 p = std::max<u64>(opts.from, 2); p <= opts.to; ++p) {
    if (is_prime(p)) primes.push_back(p);
  }

  std::map<u64, json> cached;
  if (!opts.out_file.empty() && !opts.force) {
    cached = load_cache(opts.out_file, kind, make_record(kind, config, json::object())["config"], opts.from, opts.to);
  }

  std::vector<json> records(primes.size());
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (auto it = cached.find(primes[i]); it != cached.end()) {
      records[i] = it->second;
    } else {
      todo.push_back(i);
    }
  }

  std::vector<std::string> failures(primes.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next.fetch_add(1)) < todo.size();) {
      const std::size_t i = todo[t];
      try {
        records[i] = compute_record(primes[i], mode, config);
      } catch (const std::exception& e) {
        failures[i] = e.what();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const unsigned threads = std::min<std::size_t>(opts.jobs, std::max<std::size_t>(todo.size(), 1));
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (!failures[i].empty()) {
      err << "error: p=" << primes[i] << ": " << failures[i] << '\n';
      return kExitTheoremViolation;
    }
  }

  if (!opts.out_file.empty()) {
    std::ofstream file(opts.out_file, std::ios::app);
    if (!file) throw UsageError("cannot open " + opts.out_file);
    for (std::size_t i : todo) emit(file, records[i]);
  }

  json violations = json::array();
  u64 skipped = 0, warnings = 0;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    const Assessment a = assess(records[i]);
    skipped += a.skipped;
    warnings += a.warnings.size();
    if (a.violation) violations.push_back(primes[i]);
    for (const auto& w : a.warnings) err << "warning: " << w << '\n';
    if (opts.as_json) {
      emit(out, records[i]);
    } else {
      out << human_line(records[i]) << '\n';
    }
  }

  const int code = violations.empty() ? kExitOk : kExitTheoremViolation;
  json summary{{"mode", std::string(kind)},
               {"from", opts.from},
               {"to", opts.to},
               {"records", primes.size()},
               {"skipped", skipped},
               {"cached", primes.size() - todo.size()},
               {"warnings", warnings},
               {"violations", violations},
               {"exit_code", code}};
  if (opts.as_json) {
    emit(out, make_record("summary", config, summary));
  } else {
    out << primes.size() << " primes, " << skipped << " skipped, " << violations.size() << " violations, "
        << warnings << " warnings\n";
  }
  return code;
}

}  // namespace

std::optional<u64> resolve_cap(const std::optional<std::string>& env_value, std::ostream& err) {
  if (!env_value || env_value->empty()) return kDefaultEnumerationCap;
  u64 cap = 0;
  const auto [ptr, ec] = std::from_chars(env_value->data(), env_value->data() + env_value->size(), cap);
  if (ec != std::errc() || ptr != env_value->data() + env_value->size() || cap < 2) return std::nullopt;
  if (cap > kDefaultEnumerationCap) {
    err << "warning: FIBFIELD_CAP=" << cap << " cannot raise the cap; using " << kDefaultEnumerationCap << '\n';
    return kDefaultEnumerationCap;
  }
  return cap;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& cap_env) {
  const std::optional<u64> cap = resolve_cap(cap_env, err);
  if (!cap) {
    err << "error: FIBFIELD_CAP must be an integer >= 2\n";
    return kExitUsage;
  }

  CLI::App app{"Fibonacci and Lucas recurrences over finite fields"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string params_text;
  u64 seed = kGeneratorSeed;
  auto common = [&](CLI::App* sub, bool with_params) {
    sub->add_flag("--json", as_json, "Emit JSON-lines records");
    sub->add_option("--seed", seed, "Seed for the N^+- generator search");
    if (with_params) sub->add_option("--params", params_text, "Recurrence parameters P,Q (default 1,-1)");
  };

  u64 analyze_p = 0;
  auto* analyze = app.add_subcommand("analyze", "Splitting type, eigenvalues and their orders");
  analyze->add_option("p", analyze_p, "Prime")->required();
  common(analyze, true);

  VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "Exhaustive condition sweep over a prime range");
  verify->add_option("from", vopts.from)->required();
  verify->add_option("to", vopts.to)->required();
  verify->add_flag("--complementary", vopts.complementary, "Report on the N^+- analogue (m | 2(p+1))");
  verify->add_option("--lucas", vopts.lucas, "Sweep the Lucas recurrence P,Q instead (report only)");
  verify->add_option("--out", vopts.out_file, "Append records to FILE, reusing records already there");
  verify->add_option("--jobs", vopts.jobs, "Worker threads")->default_val(1);
  verify->add_flag("--force", vopts.force, "Recompute primes already present in --out");
  common(verify, false);

  u64 enum_n = 0;
  auto* enumerate = app.add_subcommand("enumerate", "Zero-free orbits modulo N");
  enumerate->add_option("N", enum_n)->required();
  common(enumerate, true);

  u64 period_n = 0, a1 = 0, a2 = 0;
  auto* period = app.add_subcommand("period", "Minimal period, zero-free flag and value set of one sequence");
  period->add_option("N", period_n)->required();
  period->add_option("a1", a1)->required();
  period->add_option("a2", a2)->required();
  common(period, true);

  u64 sub_p = 0, sub_r = 0;
  bool npm = false;
  auto* subgroup = app.add_subcommand("subgroup", "Power subgroup (F_p^x)^r, or (N^+-)^r with --npm");
  subgroup->add_option("p", sub_p)->required();
  subgroup->add_option("r", sub_r)->required();
  subgroup->add_flag("--npm", npm, "Use N^+- inside F_{p^2} (inert parameters only)");
  common(subgroup, true);

  std::vector<const char*> argv = {"fibfield"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    RunConfig config;
    config.cap = *cap;
    config.seed = seed;
    if (!params_text.empty()) config.params = parse_params(params_text);

    if (*analyze) return cmd_analyze(analyze_p, config, as_json, out);
    if (*verify) {
      vopts.as_json = as_json;
      return cmd_verify(vopts, config, out, err);
    }
    if (*enumerate) return cmd_enumerate(enum_n, config, as_json, out);
    if (*period) return cmd_period(period_n, a1, a2, config, as_json, out);
    if (*subgroup) return cmd_subgroup(sub_p, sub_r, npm, config, as_json, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::InternalInvariantViolation ? kExitTheoremViolation : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace fibfield::cli
