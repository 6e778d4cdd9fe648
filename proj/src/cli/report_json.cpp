#include "cli/report_json.hpp"

#include <set>
#include <string>

#include "lasd/error.hpp"

namespace lasd::cli {

using nlohmann::json;

json to_json(const TuningSequences& t) { return {{"a_n", t.a_n}, {"b_n", t.b_n}, {"c_n", t.c_n}, {"d_n", t.d_n}}; }

json to_json(const TestReport& r) {
  json sets = json::array();
  for (const auto& s : r.sets) {
    sets.push_back({{"name", s.name},
                    {"size", s.size},
                    {"grid_size", s.grid_size},
                    {"tuning", s.tuning},
                    {"fallback_used", s.fallback_used}});
  }
  json out = {
      {"kind", std::string(to_string(r.statistic.kind))},
      {"statistic", r.statistic.value},
      {"scale_n", r.statistic.scale_n},
      {"domain_max", r.statistic.domain_max},
      {"critical_value", r.critical_value},
      {"p_value", r.p_value},
      {"reject", r.reject},
      {"alpha", r.alpha},
      {"reps", r.reps},
      {"seed", r.seed},
      {"n", r.n},
      {"sample_sizes", r.sample_sizes},
      {"mean_gap", r.mean_gap},
      {"tie_fraction", r.tie_fraction},
      {"tuning", to_json(r.tuning)},
      {"sets", std::move(sets)},
      {"bootstrap", {{"mean", r.boot_mean}, {"sd", r.boot_sd}, {"min", r.boot_min}, {"max", r.boot_max}}},
      {"flags", r.flags},
  };
  if (!r.branch.empty()) out["branch"] = r.branch;
  return out;
}

namespace {

template <typename T>
T get_as(const json& doc, const char* key) {
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("scenario field '") + key + "': " + e.what());
  }
}

}  // namespace

ScenarioSpec scenario_from_json(const json& doc) {
  if (!doc.is_object()) throw ConfigError("scenario file must hold a JSON object");
  static const std::set<std::string> known{"family", "parameters", "n_per_sample", "reps_mc", "reps",
                                           "seed",   "alpha",      "stats",        "multipliers"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.count(key)) throw ConfigError("unknown scenario field '" + key + "'");
  }
  ScenarioSpec spec;
  const auto family_name = get_as<std::string>(doc, "family");
  const auto family = parse_family(family_name);
  if (!family) throw ConfigError("unknown scenario family '" + family_name + "'");
  spec.family = *family;
  spec.parameters = get_as<std::vector<double>>(doc, "parameters");
  spec.n_per_sample = get_as<std::size_t>(doc, "n_per_sample");
  if (doc.contains("reps_mc")) spec.reps_mc = get_as<std::size_t>(doc, "reps_mc");
  if (doc.contains("reps")) spec.bootstrap.reps = get_as<std::size_t>(doc, "reps");
  if (doc.contains("seed")) spec.bootstrap.seed = get_as<std::uint64_t>(doc, "seed");
  if (doc.contains("alpha")) spec.bootstrap.alpha = get_as<double>(doc, "alpha");
  if (doc.contains("stats")) {
    for (const auto& name : get_as<std::vector<std::string>>(doc, "stats")) {
      const auto kind = parse_statistic_kind(name);
      if (!kind) throw ConfigError("unknown statistic '" + name + "' in scenario");
      spec.kinds.push_back(*kind);
    }
  }
  if (doc.contains("multipliers")) {
    const auto& m = doc.at("multipliers");
    if (!m.is_object()) throw ConfigError("scenario field 'multipliers' must be an object");
    for (const auto& [key, value] : m.items()) {
      if (!value.is_number()) throw ConfigError("multiplier '" + key + "' must be a number");
      const double v = value.get<double>();
      if (key == "a") {
        spec.bootstrap.multipliers.a = v;
      } else if (key == "b") {
        spec.bootstrap.multipliers.b = v;
      } else if (key == "c") {
        spec.bootstrap.multipliers.c = v;
      } else if (key == "d") {
        spec.bootstrap.multipliers.d = v;
      } else {
        throw ConfigError("unknown multiplier '" + key + "'");
      }
    }
  }
  validate(spec);
  return spec;
}

}  // namespace lasd::cli
