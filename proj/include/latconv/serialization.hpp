#pragma once

// JSON encoding of rationals, cones, upper sets, set-valued functions and
// composition scenarios.
//
//   rational     integer | "p/q"; integers beyond 64 bits become strings.
//                Input also accepts [num, den].
//   ext-real     rational | "+inf" | "-inf"
//   cone         {"dim": n, "generators": [vec, ...]}
//   upper set    "empty" | "full" | {"points": [vec...], "extra_rays": [vec...]}
//   sv-fn        {"grid": [vec...], "values": [upper set...]}
//   scenario     {"G", "F", "x_cone", "y_cone", "z_cone", "x_dual_grid",
//                 "lambda_grid", "assumption_mode", "descent_rays",
//                 "ray_images", "y_dual_directions", "z_dual_directions"}
//   descent ray  {"direction": vec, "velocity": vec}
//   ray image    {"ray": vec, "image": vec | "unbounded-descent"}

#include <stdexcept>
#include <string>

#include "json.hpp"
#include "latconv/composition.hpp"

namespace latconv {

/// Malformed input; `where()` is a JSON pointer to the offending value.
class ScenarioError : public std::runtime_error {
 public:
  ScenarioError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

using nlohmann::json;

json to_json(const Rational& r);
json to_json(const Vec& v);
json to_json(const ExtReal& x);
json to_json(const OrderCone& c);
json to_json(const UpperSet& a);
json scenario_to_json(const CompositionInstance& inst);

Rational rational_from_json(const json& j, const std::string& where = "");
Vec vec_from_json(const json& j, const std::string& where = "");
ExtReal ext_real_from_json(const json& j, const std::string& where = "");
OrderCone cone_from_json(const json& j, const std::string& where = "");
UpperSet upper_set_from_json(const json& j, const OrderCone& ambient, const std::string& where = "");

/// Parses and validates a scenario, including composability.
CompositionInstance scenario_from_json(const json& j);
CompositionInstance load_scenario(const std::string& path);

}  // namespace latconv
