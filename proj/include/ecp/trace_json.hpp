#pragma once

// JSON form of a Trace:
//   {"seed": u64, "config": {...},
//    "records": [{"round", "point": [...], "value", "eps", "attempts", "growths"}],
//    "best_index": i}

#include <string>

#include "ecp/core.hpp"
#include "json.hpp"

namespace ecp {

inline Algorithm algorithm_from_string(std::string_view s) {
  if (s == "ecp")
    return Algorithm::ecp;
  if (s == "prs")
    return Algorithm::prs;
  if (s == "lipo")
    return Algorithm::lipo;
  throw InvalidArgument("unknown algorithm '" + std::string(s) + "'");
}

inline nlohmann::json config_to_json(const EcpConfig& c, Algorithm a) {
  nlohmann::json j{{"algorithm", to_string(a)},
                   {"eps1", c.eps1},
                   {"tau_floor", c.tau_floor},
                   {"c_growth", c.c_growth},
                   {"budget", c.budget},
                   {"max_attempts_per_round", c.max_attempts_per_round},
                   {"seed", c.seed},
                   {"known_constant", c.known_constant}};
  j["tau"] = c.tau ? nlohmann::json(*c.tau) : nlohmann::json(nullptr);
  return j;
}

inline EcpConfig config_from_json(const nlohmann::json& j) {
  EcpConfig c;
  c.eps1 = j.value("eps1", c.eps1);
  c.tau_floor = j.value("tau_floor", c.tau_floor);
  c.c_growth = j.value("c_growth", c.c_growth);
  c.budget = j.value("budget", c.budget);
  c.max_attempts_per_round = j.value("max_attempts_per_round", c.max_attempts_per_round);
  c.seed = j.value("seed", c.seed);
  c.known_constant = j.value("known_constant", c.known_constant);
  if (j.contains("tau") && !j["tau"].is_null())
    c.tau = j["tau"].get<double>();
  return c;
}

inline nlohmann::json to_json(const Trace& t) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : t.records)
    records.push_back({{"round", r.round},
                       {"point", r.point},
                       {"value", r.value},
                       {"eps", r.eps_at_eval},
                       {"attempts", r.attempts},
                       {"growths", r.growths}});
  return {{"seed", t.seed},
          {"config", config_to_json(t.config, t.algorithm)},
          {"records", std::move(records)},
          {"best_index", t.best_index}};
}

inline Trace trace_from_json(const nlohmann::json& j) {
  Trace t;
  t.seed = j.at("seed").get<std::uint64_t>();
  t.config = config_from_json(j.at("config"));
  t.algorithm = algorithm_from_string(j.at("config").value("algorithm", "ecp"));
  for (const auto& r : j.at("records")) {
    EvalRecord rec;
    rec.round = r.at("round").get<std::size_t>();
    rec.point = r.at("point").get<Point>();
    rec.value = r.at("value").get<double>();
    rec.eps_at_eval = r.at("eps").get<double>();
    rec.attempts = r.at("attempts").get<std::uint64_t>();
    rec.growths = r.at("growths").get<std::uint64_t>();
    t.records.push_back(std::move(rec));
  }
  t.best_index = j.at("best_index").get<std::size_t>();
  return t;
}

}  // namespace ecp
