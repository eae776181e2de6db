#include "airdrop/scenario_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "airdrop/dropsim.hpp"
#include "airdrop/errors.hpp"
#include "airdrop/rng.hpp"

namespace airdrop {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

const json& member(const json& j, const char* key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  const auto it = j.find(key);
  if (it == j.end()) fail(path + "." + key, "missing field");
  return *it;
}

bool has(const json& j, const char* key) {
  return j.is_object() && j.find(key) != j.end();
}

double as_number(const json& j, const std::string& path) {
  if (!j.is_number()) fail(path, "expected a number");
  return j.get<double>();
}

int as_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

std::uint64_t as_u64(const json& j, const std::string& path) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer()) {
    const auto v = j.get<long long>();
    if (v < 0) fail(path, "expected a nonnegative integer");
    return static_cast<std::uint64_t>(v);
  }
  fail(path, "expected a nonnegative integer");
}

Eigen::Vector2d as_vec2(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected [x, y]");
  return {as_number(j[0], path + "[0]"), as_number(j[1], path + "[1]")};
}

Eigen::Vector3d as_vec3(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) fail(path, "expected [x, y, z]");
  return {as_number(j[0], path + "[0]"), as_number(j[1], path + "[1]"),
          as_number(j[2], path + "[2]")};
}

Eigen::Matrix2d as_mat2(const json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 2) fail(path, "expected a 2x2 matrix");
  Eigen::Matrix2d m;
  for (int r = 0; r < 2; ++r) {
    const json& row = j[static_cast<std::size_t>(r)];
    const std::string rp = path + "[" + std::to_string(r) + "]";
    if (!row.is_array() || row.size() != 2) fail(rp, "expected [a, b]");
    m(r, 0) = as_number(row[0], rp + "[0]");
    m(r, 1) = as_number(row[1], rp + "[1]");
  }
  return m;
}

WorldGraph parse_graph(const json& j) {
  WorldGraph g;
  if (has(j, "grid")) {
    const json& grid = j["grid"];
    const int nx = as_int(member(grid, "nx", "graph.grid"), "graph.grid.nx");
    const int ny = as_int(member(grid, "ny", "graph.grid"), "graph.grid.ny");
    const double spacing =
        as_number(member(grid, "spacing", "graph.grid"), "graph.grid.spacing");
    const Eigen::Vector2d origin =
        as_vec2(member(grid, "origin", "graph.grid"), "graph.grid.origin");
    const double altitude = as_number(member(grid, "altitude", "graph.grid"),
                                      "graph.grid.altitude");
    if (nx < 1 || ny < 1) fail("graph.grid", "nx and ny must be >= 1");
    if (!(spacing > 0.0)) fail("graph.grid.spacing", "must be > 0");
    if (!(altitude > 0.0)) fail("graph.grid.altitude", "must be > 0");
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        DropNode node;
        node.id = iy * nx + ix;
        node.position = {origin(0) + spacing * ix, origin(1) + spacing * iy,
                         altitude};
        g.vertices.push_back(node);
      }
    }
    for (int iy = 0; iy < ny; ++iy) {
      for (int ix = 0; ix < nx; ++ix) {
        const VertexId v = iy * nx + ix;
        if (ix + 1 < nx) g.edges.push_back({v, v + 1, spacing});
        if (iy + 1 < ny) g.edges.push_back({v, v + nx, spacing});
      }
    }
    return g;
  }
  const json& verts = member(j, "vertices", "graph");
  if (!verts.is_array() || verts.empty()) {
    fail("graph.vertices", "expected a nonempty array");
  }
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string vp = "graph.vertices[" + std::to_string(i) + "]";
    DropNode node;
    node.id = static_cast<VertexId>(i);
    node.position = as_vec3(member(verts[i], "position", vp), vp + ".position");
    g.vertices.push_back(node);
  }
  const json& edges = member(j, "edges", "graph");
  if (!edges.is_array()) fail("graph.edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string ep = "graph.edges[" + std::to_string(i) + "]";
    const json& e = edges[i];
    if (!e.is_array() || e.size() != 3) fail(ep, "expected [u, v, weight]");
    GraphEdge edge;
    edge.u = as_int(e[0], ep + "[0]");
    edge.v = as_int(e[1], ep + "[1]");
    edge.weight = as_number(e[2], ep + "[2]");
    const int n = static_cast<int>(g.vertices.size());
    if (edge.u < 0 || edge.u >= n) fail(ep + "[0]", "unknown vertex id");
    if (edge.v < 0 || edge.v >= n) fail(ep + "[1]", "unknown vertex id");
    if (!(edge.weight >= 0.0)) fail(ep + "[2]", "weight must be >= 0");
    g.edges.push_back(edge);
  }
  return g;
}

WindField parse_wind(const json& j, const std::string& path) {
  WindField f;
  f.origin = as_vec2(member(j, "origin", path), path + ".origin");
  f.cell_size =
      as_number(member(j, "cell_size", path), path + ".cell_size");
  f.nx = as_int(member(j, "nx", path), path + ".nx");
  f.ny = as_int(member(j, "ny", path), path + ".ny");
  const json& values = member(j, "values", path);
  if (!values.is_array()) fail(path + ".values", "expected an array");
  for (std::size_t i = 0; i < values.size(); ++i) {
    f.values.push_back(
        as_vec2(values[i], path + ".values[" + std::to_string(i) + "]"));
  }
  try {
    f.validate();
  } catch (const ValidationError& e) {
    fail(path, e.what());
  }
  return f;
}

void parse_landing(const json& j, WorldGraph& g) {
  const bool explicit_form = has(j, "explicit");
  const bool physics_form = has(j, "physics");
  if (explicit_form == physics_form) {
    fail("landing", "exactly one of \"explicit\" or \"physics\" is required");
  }
  if (explicit_form) {
    const json& arr = j["explicit"];
    if (!arr.is_array() || arr.size() != g.vertices.size()) {
      fail("landing.explicit", "expected one {mean, cov} entry per vertex (" +
                                   std::to_string(g.vertices.size()) + ")");
    }
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const std::string lp = "landing.explicit[" + std::to_string(i) + "]";
      UncertainLocation loc;
      loc.mean = as_vec2(member(arr[i], "mean", lp), lp + ".mean");
      loc.covariance = as_mat2(member(arr[i], "cov", lp), lp + ".cov");
      try {
        loc.validate();
      } catch (const ValidationError& e) {
        fail(lp + ".cov", e.what());
      }
      g.vertices[i].landing = loc;
    }
    return;
  }
  const json& phys = j["physics"];
  const std::string pp = "landing.physics";
  const WindField wind = parse_wind(member(phys, "wind", pp), pp + ".wind");
  WindField field = wind;
  field.gust_std =
      as_number(member(phys, "gust_std", pp), pp + ".gust_std");
  const json& body_j = member(phys, "body", pp);
  SensorBody body;
  body.mass = as_number(member(body_j, "mass", pp + ".body"),
                        pp + ".body.mass");
  body.surface_coefficient =
      as_number(member(body_j, "surface_coefficient", pp + ".body"),
                pp + ".body.surface_coefficient");
  if (has(body_j, "air_density")) {
    body.air_density =
        as_number(body_j["air_density"], pp + ".body.air_density");
  }
  const double dt = as_number(member(phys, "dt", pp), pp + ".dt");
  const int n_samples =
      as_int(member(phys, "n_samples", pp), pp + ".n_samples");
  const std::uint64_t seed = as_u64(member(phys, "seed", pp), pp + ".seed");
  try {
    field.validate();
    body.validate();
    for (auto& v : g.vertices) {
      // Per-vertex stream so nearby vertices do not share gust draws.
      v.landing = estimate_landing_distribution(
          v.position, field, body, dt, n_samples,
          derive_seed(seed, static_cast<std::uint64_t>(v.id)));
    }
  } catch (const ValidationError& e) {
    fail(pp, e.what());
  }
}

}  // namespace

ScenarioBundle parse_scenario_text(const std::string& text,
                                   const std::string& name) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(name + ": invalid JSON: " + e.what());
  }

  ScenarioBundle bundle;
  Scenario& s = bundle.scenario;
  s.graph = parse_graph(member(j, "graph", name));
  parse_landing(member(j, "landing", name), s.graph);

  const json& pois = member(j, "pois", name);
  if (!pois.is_array() || pois.empty()) {
    fail("pois", "expected a nonempty array of [x, y] points");
  }
  for (std::size_t i = 0; i < pois.size(); ++i) {
    s.pois.push_back(as_vec2(pois[i], "pois[" + std::to_string(i) + "]"));
  }

  const json& kernel = member(j, "kernel", name);
  s.kernel.signal_variance = as_number(
      member(kernel, "signal_variance", "kernel"), "kernel.signal_variance");
  s.kernel.length_scales = as_vec2(member(kernel, "length_scales", "kernel"),
                                   "kernel.length_scales");
  try {
    s.kernel.validate();
  } catch (const ValidationError& e) {
    fail("kernel", e.what());
  }

  const json& noise = member(j, "noise", name);
  s.noise.measurement_variance =
      as_number(member(noise, "measurement_variance", "noise"),
                "noise.measurement_variance");
  if (has(noise, "jitter")) {
    s.noise.jitter = as_number(noise["jitter"], "noise.jitter");
  }
  try {
    s.noise.validate(s.kernel);
  } catch (const ValidationError& e) {
    fail("noise", e.what());
  }

  const json& uavs = member(j, "uavs", name);
  if (!uavs.is_array() || uavs.empty()) {
    fail("uavs", "expected a nonempty array");
  }
  for (std::size_t i = 0; i < uavs.size(); ++i) {
    const std::string up = "uavs[" + std::to_string(i) + "]";
    UavSpec uav;
    uav.depot = as_int(member(uavs[i], "depot", up), up + ".depot");
    uav.budget = as_number(member(uavs[i], "budget", up), up + ".budget");
    uav.sensors = as_int(member(uavs[i], "sensors", up), up + ".sensors");
    const int n = static_cast<int>(s.graph.vertices.size());
    if (uav.depot < 0 || uav.depot >= n) fail(up + ".depot", "unknown vertex id");
    if (!(uav.budget > 0.0)) fail(up + ".budget", "must be > 0");
    if (uav.sensors < 0) fail(up + ".sensors", "must be >= 0");
    s.uavs.push_back(uav);
    s.graph.depots.push_back(uav.depot);
  }

  if (has(j, "eta")) {
    s.eta = as_number(j["eta"], "eta");
    if (s.eta < 0.0) fail("eta", "must be >= 0");
  }

  const json& gt = member(j, "ground_truth", name);
  if (!gt.is_array() || gt.empty()) {
    fail("ground_truth", "expected a nonempty array of components");
  }
  for (std::size_t i = 0; i < gt.size(); ++i) {
    const std::string gp = "ground_truth[" + std::to_string(i) + "]";
    GroundTruthComponent c;
    c.center = as_vec2(member(gt[i], "center", gp), gp + ".center");
    c.amplitude = as_number(member(gt[i], "amplitude", gp), gp + ".amplitude");
    c.width = as_number(member(gt[i], "width", gp), gp + ".width");
    if (!(c.width > 0.0)) fail(gp + ".width", "must be > 0");
    bundle.ground_truth.components.push_back(c);
  }

  if (has(j, "eval")) {
    const json& ev = j["eval"];
    if (has(ev, "trials")) {
      bundle.eval.trials = as_int(ev["trials"], "eval.trials");
      if (bundle.eval.trials < 1) fail("eval.trials", "must be >= 1");
    }
    if (has(ev, "master_seed")) {
      bundle.eval.master_seed = as_u64(ev["master_seed"], "eval.master_seed");
    }
  }

  bundle.scenario.validate();
  bundle.ground_truth.validate();
  return bundle;
}

ScenarioBundle parse_scenario_file(const std::string& path) {
  return parse_scenario_text(read_text_file(path), path);
}

namespace {

json vec2_json(const Eigen::Vector2d& v) { return json::array({v(0), v(1)}); }

json mat2_json(const Eigen::Matrix2d& m) {
  return json::array({json::array({m(0, 0), m(0, 1)}),
                      json::array({m(1, 0), m(1, 1)})});
}

}  // namespace

std::string scenario_to_json_text(const ScenarioBundle& bundle) {
  const Scenario& s = bundle.scenario;
  json j;
  json verts = json::array();
  json landing = json::array();
  for (const auto& v : s.graph.vertices) {
    verts.push_back({{"position", json::array({v.position(0), v.position(1),
                                               v.position(2)})}});
    landing.push_back({{"mean", vec2_json(v.landing.mean)},
                       {"cov", mat2_json(v.landing.covariance)}});
  }
  json edges = json::array();
  for (const auto& e : s.graph.edges) {
    edges.push_back(json::array({e.u, e.v, e.weight}));
  }
  j["graph"] = {{"vertices", verts}, {"edges", edges}};
  j["landing"] = {{"explicit", landing}};
  json pois = json::array();
  for (const auto& p : s.pois) pois.push_back(vec2_json(p));
  j["pois"] = pois;
  j["kernel"] = {{"signal_variance", s.kernel.signal_variance},
                 {"length_scales", vec2_json(s.kernel.length_scales)}};
  j["noise"] = {{"measurement_variance", s.noise.measurement_variance},
                {"jitter", s.noise.jitter}};
  json uavs = json::array();
  for (const auto& u : s.uavs) {
    uavs.push_back({{"depot", u.depot},
                    {"budget", u.budget},
                    {"sensors", u.sensors}});
  }
  j["uavs"] = uavs;
  j["eta"] = s.eta;
  json gt = json::array();
  for (const auto& c : bundle.ground_truth.components) {
    gt.push_back({{"center", vec2_json(c.center)},
                  {"amplitude", c.amplitude},
                  {"width", c.width}});
  }
  j["ground_truth"] = gt;
  j["eval"] = {{"trials", bundle.eval.trials},
               {"master_seed", bundle.eval.master_seed}};
  return j.dump(2) + "\n";
}

namespace {

/// Scales ground-truth amplitudes so the max field value over the map box is
/// 1; keeps the shipped scenarios on a normalized field scale.
void normalize_ground_truth(json& gt_components, double x_max, double y_max) {
  GroundTruth gt;
  for (const auto& c : gt_components) {
    gt.components.push_back({{c["center"][0].get<double>(),
                              c["center"][1].get<double>()},
                             c["amplitude"].get<double>(),
                             c["width"].get<double>()});
  }
  double peak = 0.0;
  const int steps = 100;
  for (int iy = 0; iy <= steps; ++iy) {
    for (int ix = 0; ix <= steps; ++ix) {
      const Eigen::Vector2d p{x_max * ix / steps, y_max * iy / steps};
      peak = std::max(peak, gt.value(p));
    }
  }
  for (auto& c : gt_components) {
    c["amplitude"] = c["amplitude"].get<double>() / peak;
  }
}

json shipped_grid_graph() {
  return {{"grid",
           {{"nx", 5},
            {"ny", 5},
            {"spacing", 50.0},
            {"origin", json::array({0.0, 0.0})},
            {"altitude", 500.0}}}};
}

// One dense cluster in the south-west plus three sparse pairs: the kind of
// map where planning for exact landings overcommits sensors to the dense
// cluster while the wind actually scatters them.
json shipped_pois() {
  return json::array({
      json::array({35.0, 40.0}), json::array({49.0, 44.2}),
      json::array({25.2, 51.2}), json::array({40.6, 27.4}),
      json::array({22.4, 33.0}), json::array({44.8, 52.6}),
      json::array({165.0, 45.0}), json::array({185.0, 51.0}),
      json::array({50.0, 165.0}), json::array({70.0, 171.0}),
      json::array({170.0, 160.0}), json::array({190.0, 166.0}),
  });
}

json shipped_ground_truth() {
  json gt = json::array();
  gt.push_back({{"center", json::array({35.0, 40.0})},
                {"amplitude", 1.0},
                {"width", 45.0}});
  gt.push_back({{"center", json::array({165.0, 50.0})},
                {"amplitude", 0.8},
                {"width", 40.0}});
  gt.push_back({{"center", json::array({45.0, 155.0})},
                {"amplitude", 0.9},
                {"width", 42.0}});
  gt.push_back({{"center", json::array({165.0, 165.0})},
                {"amplitude", 0.7},
                {"width", 38.0}});
  normalize_ground_truth(gt, 200.0, 200.0);
  return gt;
}

json explicit_landing_grid(int n_vertices, int nx, double spacing,
                           double drift_x, double drift_y, double variance) {
  json landing = json::array();
  for (int v = 0; v < n_vertices; ++v) {
    const int ix = v % nx;
    const int iy = v / nx;
    landing.push_back(
        {{"mean", json::array({spacing * ix + drift_x, spacing * iy + drift_y})},
         {"cov", json::array({json::array({variance, 0.0}),
                              json::array({0.0, variance})})}});
  }
  return landing;
}

json uniform_variance_scenario(double variance, int sensors,
                               std::uint64_t seed) {
  json j;
  j["graph"] = shipped_grid_graph();
  j["landing"] = {{"explicit",
                   explicit_landing_grid(25, 5, 50.0, 18.0, 10.0, variance)}};
  j["pois"] = shipped_pois();
  j["kernel"] = {{"signal_variance", 1.0},
                 {"length_scales", json::array({20.0, 20.0})}};
  j["noise"] = {{"measurement_variance", 0.05}, {"jitter", 1e-8}};
  j["uavs"] = json::array({
      {{"depot", 0}, {"budget", 870.0}, {"sensors", sensors}},
      {{"depot", 24}, {"budget", 870.0}, {"sensors", sensors}},
  });
  j["eta"] = 0.0;
  j["ground_truth"] = shipped_ground_truth();
  j["eval"] = {{"trials", 100}, {"master_seed", seed}};
  return j;
}

json wind_scenario(std::uint64_t seed) {
  json j;
  j["graph"] = shipped_grid_graph();
  json wind_values = json::array();
  const int wnx = 6, wny = 6;
  for (int iy = 0; iy < wny; ++iy) {
    for (int ix = 0; ix < wnx; ++ix) {
      const double x = -25.0 + 50.0 * ix;
      const double y = -25.0 + 50.0 * iy;
      // Sheared ramp: speed grows toward the north-east corner.
      const double wx = 0.5 + 0.008 * y;
      const double wy = 0.3 + 0.006 * x;
      wind_values.push_back(json::array({wx, wy}));
    }
  }
  j["landing"] = {{"physics",
                   {{"wind",
                     {{"origin", json::array({-25.0, -25.0})},
                      {"cell_size", 50.0},
                      {"nx", wnx},
                      {"ny", wny},
                      {"values", wind_values}}},
                    {"gust_std", 20.0},
                    {"body",
                     {{"mass", 10.0},
                      {"surface_coefficient", 1.0},
                      {"air_density", 1.225}}},
                    {"dt", 0.05},
                    {"n_samples", 1500},
                    {"seed", derive_seed(seed, 77)}}}};
  j["pois"] = shipped_pois();
  j["kernel"] = {{"signal_variance", 1.0},
                 {"length_scales", json::array({20.0, 20.0})}};
  j["noise"] = {{"measurement_variance", 0.05}, {"jitter", 1e-8}};
  j["uavs"] = json::array({
      {{"depot", 0}, {"budget", 870.0}, {"sensors", 4}},
      {{"depot", 24}, {"budget", 870.0}, {"sensors", 4}},
  });
  j["eta"] = 0.0;
  j["ground_truth"] = shipped_ground_truth();
  j["eval"] = {{"trials", 100}, {"master_seed", seed}};
  return j;
}

json tiny_oracle_scenario(std::uint64_t seed) {
  json j;
  j["graph"] = {{"grid",
                 {{"nx", 3},
                  {"ny", 2},
                  {"spacing", 60.0},
                  {"origin", json::array({0.0, 0.0})},
                  {"altitude", 300.0}}}};
  j["landing"] = {{"explicit",
                   explicit_landing_grid(6, 3, 60.0, 8.0, 5.0, 400.0)}};
  j["pois"] = json::array({
      json::array({30.0, 30.0}), json::array({90.0, 30.0}),
      json::array({60.0, 15.0}), json::array({20.0, 70.0}),
      json::array({100.0, 55.0}),
  });
  j["kernel"] = {{"signal_variance", 1.0},
                 {"length_scales", json::array({25.0, 25.0})}};
  j["noise"] = {{"measurement_variance", 0.05}, {"jitter", 1e-8}};
  j["uavs"] = json::array({
      {{"depot", 0}, {"budget", 300.0}, {"sensors", 2}},
      {{"depot", 5}, {"budget", 300.0}, {"sensors", 2}},
  });
  j["eta"] = 5.0;
  json gt = json::array();
  gt.push_back({{"center", json::array({40.0, 30.0})},
                {"amplitude", 1.0},
                {"width", 35.0}});
  gt.push_back({{"center", json::array({95.0, 45.0})},
                {"amplitude", 0.8},
                {"width", 30.0}});
  normalize_ground_truth(gt, 120.0, 60.0);
  j["ground_truth"] = gt;
  j["eval"] = {{"trials", 50}, {"master_seed", seed}};
  return j;
}

}  // namespace

std::vector<std::string> scenario_template_names() {
  return {"scenario1", "scenario2", "scenario3", "tiny-oracle"};
}

std::string make_scenario_template(const std::string& name,
                                   std::uint64_t seed) {
  json j;
  if (name == "scenario1") {
    j = uniform_variance_scenario(900.0, 4, seed);
  } else if (name == "scenario2") {
    j = uniform_variance_scenario(820.0, 3, seed);
  } else if (name == "scenario3") {
    j = wind_scenario(seed);
  } else if (name == "tiny-oracle") {
    j = tiny_oracle_scenario(seed);
  } else {
    throw ValidationError("unknown scenario template \"" + name +
                          "\" (known: scenario1, scenario2, scenario3, "
                          "tiny-oracle)");
  }
  return j.dump(2) + "\n";
}

std::string plan_to_json_text(const Plan& plan, const Scenario& scenario,
                              const std::string& invocation,
                              std::uint64_t seed) {
  const CompleteGraph gc = metric_completion(scenario.graph);
  json j;
  j["planner"] = plan.planner_name;
  j["invocation"] = invocation;
  j["seed"] = seed;
  j["objective_value"] = plan.objective_value;
  j["wall_time_s"] = plan.wall_time;
  json paths = json::array();
  for (const auto& p : plan.paths) {
    json path;
    path["uav"] = p.uav_index;
    path["vertices"] = p.vertices;
    path["drops"] = p.drops;
    path["cost"] = path_cost(p, gc, scenario.eta);
    paths.push_back(path);
  }
  j["paths"] = paths;
  return j.dump(2) + "\n";
}

Plan plan_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("plan: invalid JSON: ") + e.what());
  }
  Plan plan;
  plan.planner_name = member(j, "planner", "plan").get<std::string>();
  plan.objective_value =
      as_number(member(j, "objective_value", "plan"), "plan.objective_value");
  if (has(j, "wall_time_s")) {
    plan.wall_time = as_number(j["wall_time_s"], "plan.wall_time_s");
  }
  const json& paths = member(j, "paths", "plan");
  if (!paths.is_array()) fail("plan.paths", "expected an array");
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const std::string pp = "plan.paths[" + std::to_string(i) + "]";
    RoutePath path;
    path.uav_index = as_int(member(paths[i], "uav", pp), pp + ".uav");
    for (const auto& v : member(paths[i], "vertices", pp)) {
      path.vertices.push_back(as_int(v, pp + ".vertices"));
    }
    for (const auto& v : member(paths[i], "drops", pp)) {
      path.drops.push_back(as_int(v, pp + ".drops"));
    }
    plan.paths.push_back(std::move(path));
  }
  return plan;
}

Plan read_plan_file(const std::string& path) {
  return plan_from_json_text(read_text_file(path));
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write file: " + path);
  out << content;
}

}  // namespace airdrop
