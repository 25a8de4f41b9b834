#include "latconv/serialization.hpp"

#include <fstream>
#include <limits>
#include <set>

namespace latconv {

namespace {

json integer_to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return json(z.convert_to<std::int64_t>());
  }
  return json(z.str());
}

Integer integer_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      Rational r = parse_rational(j.get<std::string>());
      if (denominator(r) != 1) throw ScenarioError(where, "expected an integer");
      return numerator(r);
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(where, e.what());
    }
  }
  throw ScenarioError(where, "expected an integer");
}

std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }
std::string at(const std::string& where, const char* key) { return where + "/" + key; }

const json& member(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ScenarioError(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw ScenarioError(where, std::string("missing field \"") + key + "\"");
  return *it;
}

const json& array_at(const json& j, const std::string& where) {
  if (!j.is_array()) throw ScenarioError(where, "expected an array");
  return j;
}

std::vector<Vec> vecs_from_json(const json& j, const std::string& where, std::optional<std::size_t> dim) {
  std::vector<Vec> out;
  for (std::size_t i = 0; i < array_at(j, where).size(); ++i) {
    Vec v = vec_from_json(j[i], at(where, i));
    if (dim && v.size() != *dim) {
      throw ScenarioError(at(where, i), "expected dimension " + std::to_string(*dim) + ", got " +
                                            std::to_string(v.size()));
    }
    out.push_back(std::move(v));
  }
  return out;
}

json vecs_to_json(const std::vector<Vec>& vs) {
  json out = json::array();
  for (const auto& v : vs) out.push_back(to_json(v));
  return out;
}

template <class F>
auto wrap(const std::string& where, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ScenarioError&) {
    throw;
  } catch (const std::exception& e) {
    throw ScenarioError(where, e.what());
  }
}

SetValuedFn sv_from_json(const json& j, const OrderCone& ambient, std::optional<OrderCone> primal,
                         std::vector<DomainRay> rays, const std::string& where) {
  std::optional<std::size_t> pdim;
  if (primal) pdim = primal->dim();
  std::vector<Vec> grid = vecs_from_json(member(j, "grid", where), at(where, "grid"), pdim);
  if (grid.empty()) throw ScenarioError(at(where, "grid"), "empty grid");
  const std::size_t d = grid.front().size();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].size() != d) throw ScenarioError(at(at(where, "grid"), i), "grid points differ in dimension");
  }
  const json& vals = array_at(member(j, "values", where), at(where, "values"));
  if (vals.size() != grid.size()) {
    throw ScenarioError(at(where, "values"), "expected " + std::to_string(grid.size()) + " values, got " +
                                                 std::to_string(vals.size()));
  }
  std::vector<UpperSet> values;
  for (std::size_t i = 0; i < vals.size(); ++i) {
    values.push_back(upper_set_from_json(vals[i], ambient, at(at(where, "values"), i)));
  }
  for (std::size_t k = 0; k < grid.size(); ++k) {
    for (std::size_t l = k + 1; l < grid.size(); ++l) {
      if (grid[k] == grid[l]) throw ScenarioError(at(at(where, "grid"), l), "repeated grid point");
    }
  }
  return wrap(where, [&] { return SetValuedFn(grid, values, ambient, primal, std::move(rays)); });
}

json sv_to_json(const SetValuedFn& f) {
  json out;
  out["grid"] = vecs_to_json(f.grid());
  json vals = json::array();
  for (const auto& v : f.values()) vals.push_back(to_json(v));
  out["values"] = vals;
  return out;
}

}  // namespace

json to_json(const Rational& r) {
  if (denominator(r) == 1) return integer_to_json(numerator(r));
  return json(to_string(r));
}

json to_json(const Vec& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

json to_json(const ExtReal& x) {
  if (x.is_pos_inf()) return "+inf";
  if (x.is_neg_inf()) return "-inf";
  return to_json(x.value());
}

json to_json(const OrderCone& c) { return json{{"dim", c.dim()}, {"generators", vecs_to_json(c.generators())}}; }

json to_json(const UpperSet& a) {
  if (a.is_empty()) return "empty";
  if (a.is_full()) return "full";
  return json{{"points", vecs_to_json(a.points())}, {"extra_rays", vecs_to_json(a.extra_rays())}};
}

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw ScenarioError(where, e.what());
    }
  }
  if (j.is_array() && j.size() == 2) {
    Integer num = integer_from_json(j[0], at(where, std::size_t{0}));
    Integer den = integer_from_json(j[1], at(where, 1));
    if (den == 0) throw ScenarioError(at(where, 1), "zero denominator");
    return Rational(num, den);
  }
  throw ScenarioError(where, "expected a rational: [num, den], an integer or \"p/q\"");
}

Vec vec_from_json(const json& j, const std::string& where) {
  Vec out;
  for (std::size_t i = 0; i < array_at(j, where).size(); ++i) out.push_back(rational_from_json(j[i], at(where, i)));
  return out;
}

ExtReal ext_real_from_json(const json& j, const std::string& where) {
  if (j.is_string() && (j == "+inf" || j == "-inf")) return j == "+inf" ? ExtReal::pos_inf() : ExtReal::neg_inf();
  return ExtReal(rational_from_json(j, where));
}

OrderCone cone_from_json(const json& j, const std::string& where) {
  const json& d = member(j, "dim", where);
  if (!d.is_number_unsigned() || d.get<std::size_t>() == 0 || d.get<std::size_t>() > 16) {
    throw ScenarioError(at(where, "dim"), "expected a positive dimension");
  }
  std::size_t dim = d.get<std::size_t>();
  std::vector<Vec> gens = vecs_from_json(member(j, "generators", where), at(where, "generators"), dim);
  return wrap(where, [&] { return OrderCone(dim, gens); });
}

UpperSet upper_set_from_json(const json& j, const OrderCone& ambient, const std::string& where) {
  if (j.is_string()) {
    if (j == "empty") return UpperSet::empty(ambient);
    if (j == "full") return UpperSet::full(ambient);
    throw ScenarioError(where, "expected \"empty\", \"full\" or an object");
  }
  std::vector<Vec> pts = vecs_from_json(member(j, "points", where), at(where, "points"), ambient.dim());
  std::vector<Vec> rays;
  if (j.contains("extra_rays")) rays = vecs_from_json(j["extra_rays"], at(where, "extra_rays"), ambient.dim());
  if (pts.empty()) throw ScenarioError(at(where, "points"), "no points; write \"empty\" for the empty set");
  return wrap(where, [&] { return UpperSet::make(ambient, pts, rays); });
}

json scenario_to_json(const CompositionInstance& inst) {
  json out;
  out["G"] = sv_to_json(inst.G);
  out["F"] = sv_to_json(inst.F);
  out["x_cone"] = inst.G.primal_cone() ? to_json(*inst.G.primal_cone()) : json(nullptr);
  out["y_cone"] = to_json(inst.G.ambient());
  out["z_cone"] = to_json(inst.F.ambient());
  out["x_dual_grid"] = vecs_to_json(inst.x_dual_grid);
  json lg = json::array();
  for (const auto& l : inst.lambda_grid) lg.push_back(to_json(l));
  out["lambda_grid"] = lg;
  out["assumption_mode"] = std::string(1, inst.assumption_mode);
  json dr = json::array();
  for (const auto& d : inst.G.rays()) dr.push_back({{"direction", to_json(d.direction)}, {"velocity", to_json(*d.shift)}});
  out["descent_rays"] = dr;
  json ri = json::array();
  for (const auto& r : inst.F.rays()) {
    ri.push_back({{"ray", to_json(r.direction)}, {"image", r.shift ? to_json(*r.shift) : json("unbounded-descent")}});
  }
  out["ray_images"] = ri;
  out["y_dual_directions"] = vecs_to_json(inst.y_dual_directions);
  out["z_dual_directions"] = vecs_to_json(inst.z_dual_directions);
  return out;
}

CompositionInstance scenario_from_json(const json& j) {
  if (!j.is_object()) throw ScenarioError("", "expected a scenario object");
  static const std::set<std::string> known = {
      "G",         "F",           "x_cone",          "y_cone",       "z_cone",     "x_dual_grid",       "lambda_grid",
      "assumption_mode", "descent_rays", "ray_images", "y_dual_directions", "z_dual_directions", "name", "description"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (!known.count(it.key())) throw ScenarioError("/" + it.key(), "unknown field");
  }
  OrderCone yc = cone_from_json(member(j, "y_cone", ""), "/y_cone");
  OrderCone zc = cone_from_json(member(j, "z_cone", ""), "/z_cone");
  std::optional<OrderCone> xc;
  if (j.contains("x_cone") && !j["x_cone"].is_null()) xc = cone_from_json(j["x_cone"], "/x_cone");

  std::vector<DomainRay> descent;
  if (j.contains("descent_rays")) {
    const json& a = array_at(j["descent_rays"], "/descent_rays");
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::string w = at("/descent_rays", i);
      Vec d = vec_from_json(member(a[i], "direction", w), at(w, "direction"));
      Vec v = vec_from_json(member(a[i], "velocity", w), at(w, "velocity"));
      if (v.size() != yc.dim()) throw ScenarioError(at(w, "velocity"), "expected dimension " + std::to_string(yc.dim()));
      if (xc && d.size() != xc->dim()) throw ScenarioError(at(w, "direction"), "expected dimension " + std::to_string(xc->dim()));
      if (is_zero(d)) throw ScenarioError(at(w, "direction"), "zero direction");
      descent.push_back({d, v});
    }
  }
  std::vector<DomainRay> images;
  if (j.contains("ray_images")) {
    const json& a = array_at(j["ray_images"], "/ray_images");
    for (std::size_t i = 0; i < a.size(); ++i) {
      std::string w = at("/ray_images", i);
      Vec r = vec_from_json(member(a[i], "ray", w), at(w, "ray"));
      if (r.size() != yc.dim()) throw ScenarioError(at(w, "ray"), "expected dimension " + std::to_string(yc.dim()));
      if (is_zero(r)) throw ScenarioError(at(w, "ray"), "zero ray");
      const json& im = member(a[i], "image", w);
      if (im.is_string() && im == "unbounded-descent") {
        images.push_back({r, std::nullopt});
        continue;
      }
      Vec v = vec_from_json(im, at(w, "image"));
      if (v.size() != zc.dim()) throw ScenarioError(at(w, "image"), "expected dimension " + std::to_string(zc.dim()));
      images.push_back({r, v});
    }
  }

  CompositionInstance inst{sv_from_json(member(j, "G", ""), yc, xc, descent, "/G"),
                           sv_from_json(member(j, "F", ""), zc, yc, images, "/F"),
                           {},
                           {},
                           'a',
                           {},
                           {}};
  if (inst.F.primal_dim() != yc.dim()) throw ScenarioError("/F/grid", "F must be defined on the dimension of y_cone");
  const std::size_t xd = inst.G.primal_dim();
  for (const auto& d : descent) {
    if (d.direction.size() != xd) throw ScenarioError("/descent_rays", "direction dimension differs from G's grid");
  }
  if (j.contains("x_dual_grid")) inst.x_dual_grid = vecs_from_json(j["x_dual_grid"], "/x_dual_grid", xd);
  if (j.contains("lambda_grid")) {
    const json& a = array_at(j["lambda_grid"], "/lambda_grid");
    for (std::size_t i = 0; i < a.size(); ++i) {
      Rational l = rational_from_json(a[i], at("/lambda_grid", i));
      if (l <= 0) throw ScenarioError(at("/lambda_grid", i), "scales must be positive");
      inst.lambda_grid.push_back(l);
    }
  }
  if (j.contains("assumption_mode")) {
    const json& m = j["assumption_mode"];
    if (!m.is_string() || (m != "a" && m != "b")) throw ScenarioError("/assumption_mode", "expected \"a\" or \"b\"");
    inst.assumption_mode = m.get<std::string>()[0];
  }
  if (j.contains("y_dual_directions")) {
    inst.y_dual_directions = vecs_from_json(j["y_dual_directions"], "/y_dual_directions", yc.dim());
  }
  if (j.contains("z_dual_directions")) {
    inst.z_dual_directions = vecs_from_json(j["z_dual_directions"], "/z_dual_directions", zc.dim());
  }
  try {
    check_composability(inst);
  } catch (const CompositionError& e) {
    throw ScenarioError("/G", std::string("composability: ") + e.what());
  }
  return inst;
}

CompositionInstance load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ScenarioError(path, "cannot open file");
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ScenarioError(path, std::string("invalid JSON: ") + e.what());
  }
  return scenario_from_json(j);
}

}  // namespace latconv
