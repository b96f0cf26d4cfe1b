#pragma once

// JSON (de)serialization for the file formats the CLI speaks.
//
// set file:   {"ambient": "modular"|"interval", "modulus_or_limit": N,
//              "elements": [...]}
// violation:  {"equation": [...], "assignment": [...],
//              "ambient": "Z_N"|"interval", "modulus": N}

#include <string>

#include <json.hpp>

#include "sidon/bounds.hpp"
#include "sidon/construct.hpp"
#include "sidon/sets.hpp"
#include "sidon/verify.hpp"

namespace sidon {

inline nlohmann::json to_json(const ResidueSet& s) {
  return nlohmann::json{
      {"ambient", s.ambient == Ambient::kModular ? "modular" : "interval"},
      {"modulus_or_limit", s.n},
      {"elements", s.elements},
  };
}

inline ResidueSet residue_set_from_json(const nlohmann::json& j) {
  const std::string ambient = j.at("ambient").get<std::string>();
  const std::int64_t n = j.at("modulus_or_limit").get<std::int64_t>();
  auto elements = j.at("elements").get<std::vector<std::int64_t>>();
  if (ambient == "modular") return make_modular_set(n, std::move(elements));
  if (ambient == "interval") return make_interval_set(n, std::move(elements));
  throw std::invalid_argument("set file: ambient must be \"modular\" or \"interval\"");
}

inline nlohmann::json to_json(const Violation& v) {
  return nlohmann::json{
      {"equation", v.equation.coefficients},
      {"assignment", v.assignment},
      {"ambient", v.ambient == Ambient::kModular ? "Z_N" : "interval"},
      {"modulus", v.n},
  };
}

inline nlohmann::json to_json(const BoundReport& r) {
  return nlohmann::json{
      {"name", r.name},
      {"value", r.value},
      {"integer_cap", r.integer_cap},
      {"parameters", r.parameters},
  };
}

inline nlohmann::json to_json(const ConstructReport& r) {
  nlohmann::json j{
      {"p", r.p},
      {"t", r.t},
      {"q", r.q},
      {"k", r.k},
      {"modulus", r.modulus},
      {"theta", r.theta},
      {"set", r.set},
      {"coeffs", r.coefficients},
      {"cycle_lengths", r.cycle_lengths},
      {"regime_valid", r.regime_valid},
      {"short_cycle_bound", nullptr},
      {"size_lower_bound", nullptr},
  };
  if (r.short_cycle_count) j["short_cycle_count"] = *r.short_cycle_count;
  if (r.short_cycle_cap) j["short_cycle_bound"] = *r.short_cycle_cap;
  if (r.size_lower_bound) {
    j["size_lower_bound"] = *r.size_lower_bound;
    j["size_lower_bound_holds"] = r.size_lower_bound_holds;
    j["size_lower_bound_vacuous"] = r.size_lower_bound_vacuous;
  }
  return j;
}

}  // namespace sidon
