#include "clonebound/serialization.hpp"

#include <set>
#include <string>

namespace clonebound {

namespace {

using nlohmann::json;

void require_keys(const json& j, const std::set<std::string>& allowed, const char* what) {
  if (!j.is_object()) throw json::type_error::create(302, std::string(what) + " must be an object", &j);
  for (const auto& [key, value] : j.items())
    if (!allowed.contains(key))
      throw json::other_error::create(501, std::string(what) + ": unknown key '" + key + "'", &j);
}

json real3(const RealMatrix3& m) {
  auto rows = json::array();
  for (const auto& row : m) rows.push_back({row[0], row[1], row[2]});
  return rows;
}

}  // namespace

void to_json(json& j, const BlochVector& v) { j = json::array({v.x, v.y, v.z}); }

void from_json(const json& j, BlochVector& v) {
  if (!j.is_array() || j.size() != 3)
    throw json::type_error::create(302, "Bloch vector must be an array of 3 numbers", &j);
  v = {j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

void to_json(json& j, const ClonerParams& p) {
  j = json{{"eta", p.eta}, {"t", p.t}, {"t_xy", p.t_xy}};
}

void from_json(const json& j, ClonerParams& p) {
  require_keys(j, {"eta", "t", "t_xy"}, "cloner params");
  p.eta = j.at("eta").get<double>();
  p.t = j.at("t").get<double>();
  p.t_xy = j.at("t_xy").get<double>();
}

void to_json(json& j, const GeneralClonerParams& p) { j = json{{"eta", p.eta}, {"t", real3(p.t)}}; }

void from_json(const json& j, GeneralClonerParams& p) {
  require_keys(j, {"eta", "t"}, "general cloner params");
  p.eta = j.at("eta").get<double>();
  const json& t = j.at("t");
  if (!t.is_array() || t.size() != 3)
    throw json::type_error::create(302, "t must be a 3x3 array", &t);
  for (std::size_t r = 0; r < 3; ++r) {
    const json& row = t.at(r);
    if (!row.is_array() || row.size() != 3)
      throw json::type_error::create(302, "t must be a 3x3 array", &row);
    for (std::size_t c = 0; c < 3; ++c) p.t[r][c] = row.at(c).get<double>();
  }
}

void to_json(json& j, const PauliCoefficients& c) {
  j = json{{"c00", c.c00},
           {"a", {c.a[0], c.a[1], c.a[2]}},
           {"b", {c.b[0], c.b[1], c.b[2]}},
           {"t", real3(c.t)}};
}

void to_json(json& j, const BoundResult& r) {
  j = json{{"method", r.method == BoundMethod::ClosedForm ? "closed_form" : "grid"},
           {"eta_max", r.eta_max},
           {"t_star", r.t_star},
           {"t_xy_star", r.t_xy_star},
           {"fidelity_max", r.fidelity_max},
           {"resolution", r.resolution}};
}

void to_json(json& j, const SignalReport& r) {
  j = json{{"axis_a", r.axis_a},
           {"axis_b", r.axis_b},
           {"trace_distance", r.trace_distance},
           {"helstrom_probability", r.helstrom_probability},
           {"mc_estimate", r.mc_estimate ? json(*r.mc_estimate) : json(nullptr)},
           {"mc_shots", r.mc_shots},
           {"seed", r.seed},
           {"not_physical", r.not_physical ? json(*r.not_physical) : json(nullptr)}};
}

json params_to_json(const AnyClonerParams& p) {
  return std::visit([](const auto& v) { return json(v); }, p);
}

AnyClonerParams params_from_json(const json& j) {
  if (j.is_object() && j.contains("t") && j.at("t").is_array()) return j.get<GeneralClonerParams>();
  return j.get<ClonerParams>();
}

}  // namespace clonebound
