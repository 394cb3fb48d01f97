#include "atomc/hardware.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace atomc {

using nlohmann::json;

double distance_um(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

const char* idle_mode_name(IdleMode mode) {
  return mode == IdleMode::ArityWeighted ? "arity_weighted" : "literal_eq15";
}

IdleMode idle_mode_from_name(const std::string& name) {
  if (name == "arity_weighted") return IdleMode::ArityWeighted;
  if (name == "literal_eq15") return IdleMode::LiteralEq15;
  throw std::invalid_argument("unknown idle mode: " + name);
}

Position HardwareSpec::trap_position(int trap) const {
  return {static_cast<double>(trap % cols) * d_um, static_cast<double>(trap / cols) * d_um};
}

double HardwareSpec::t_eff_s() const { return effective_coherence_time(t1_s, t2_s); }

void HardwareSpec::check() const {
  auto fail = [](const std::string& msg) { throw std::invalid_argument("hardware spec: " + msg); };
  if (rows <= 0 || cols <= 0) fail("grid dimensions must be positive");
  if (!(d_um > 0.0)) fail("trap spacing must be positive");
  if (!(r_int > 0.0)) fail("interaction radius must be positive");
  if (r_re < r_int) fail("restriction radius must be >= interaction radius (k >= 1)");
  if (!(t1_s > 0.0) || !(t2_s > 0.0)) fail("coherence times must be positive");
  for (const GateCost* g : {&g1q, &cz, &ccz, &cccz}) {
    if (!(g->duration_us > 0.0)) fail("gate durations must be positive");
    if (!(g->fidelity > 0.0) || g->fidelity > 1.0) fail("gate fidelities must be in (0,1]");
  }
  if (!(shuttle.v_max_um_per_us > 0.0)) fail("shuttle speed must be positive");
  if (shuttle.t_trap_us < 0.0) fail("trap switch time must be non-negative");
  if (!(shuttle.fidelity > 0.0) || shuttle.fidelity > 1.0) fail("shuttle fidelity must be in (0,1]");
}

double effective_coherence_time(double t1_s, double t2_s) {
  if (!(t1_s > 0.0) || !(t2_s > 0.0))
    throw std::invalid_argument("coherence times must be positive");
  return t1_s * t2_s / (t1_s + t2_s);
}

bool CouplingGraph::has_edge(int a, int b) const {
  if (a == b) return false;
  if (a > b) std::swap(a, b);
  return std::binary_search(edges.begin(), edges.end(), std::make_pair(a, b));
}

CouplingGraph coupling_graph(const HardwareSpec& spec) {
  if (spec.traps() <= 0) throw std::invalid_argument("empty grid");
  CouplingGraph g;
  g.num_traps = spec.traps();
  g.neighbors.resize(g.num_traps);
  double r = spec.r_int_um();
  for (int i = 0; i < g.num_traps; ++i) {
    Position pi = spec.trap_position(i);
    for (int j = i + 1; j < g.num_traps; ++j) {
      if (distance_um(pi, spec.trap_position(j)) <= r) {
        g.edges.emplace_back(i, j);
        g.neighbors[i].push_back(j);
        g.neighbors[j].push_back(i);
      }
    }
  }
  return g;
}

bool gate_mappable(const std::vector<Position>& positions, double r_int_um) {
  if (positions.size() < 2) throw std::invalid_argument("gate_mappable needs >= 2 positions");
  for (std::size_t i = 0; i < positions.size(); ++i)
    for (std::size_t j = i + 1; j < positions.size(); ++j)
      if (distance_um(positions[i], positions[j]) > r_int_um) return false;
  return true;
}

bool restriction_conflict(const std::vector<Position>& gate_a,
                          const std::vector<Position>& gate_b, double r_re_um) {
  for (const Position& a : gate_a) {
    for (const Position& b : gate_b) {
      double dist = distance_um(a, b);
      if (dist == 0.0)
        throw std::invalid_argument("restriction_conflict: gates share a position");
      if (dist <= r_re_um) return true;
    }
  }
  return false;
}

double vdw_interaction(double c6, double dist_um) {
  if (!(dist_um > 0.0)) throw std::invalid_argument("vdw_interaction: distance must be positive");
  double d3 = dist_um * dist_um * dist_um;
  return c6 / (d3 * d3);
}

double blockade_radius(double c6_over_hbar_omega) {
  if (!(c6_over_hbar_omega > 0.0))
    throw std::invalid_argument("blockade_radius: input must be positive");
  return std::pow(c6_over_hbar_omega, 1.0 / 6.0);
}

HardwareSpec preset(const std::string& name) {
  HardwareSpec s;
  // Grid size is not part of the published operating points; 12x12 covers the
  // 120-qubit experiments with headroom and can be overridden.
  s.rows = 12;
  s.cols = 12;
  s.d_um = 3.0;
  s.r_int = 2.0;
  s.r_re = 4.0;
  s.shuttle.t_trap_us = 40.0;
  s.shuttle.fidelity = 1.0;
  s.idle_mode = IdleMode::ArityWeighted;
  if (name == "strontium") {
    s.name = "strontium";
    s.g1q = {200.0, 0.99};
    s.cz = {0.1, 0.99};
    s.ccz = {1.0, 0.95};
    s.cccz = {1.0, 0.95};
    s.t1_s = 1.0;
    s.t2_s = 10.0;
    s.shuttle.v_max_um_per_us = 0.025;
  } else if (name == "rubidium") {
    s.name = "rubidium";
    s.g1q = {0.5, 0.999};
    s.cz = {0.2, 0.995};
    s.ccz = {1.0, 0.98};
    s.cccz = {1.0, 0.95};
    s.t1_s = 100.0;
    s.t2_s = 1.5;
    s.shuttle.v_max_um_per_us = 0.55;
  } else {
    throw std::invalid_argument("unknown hardware preset: " + name);
  }
  s.check();
  return s;
}

namespace {

void reject_unknown(const json& obj, const char* where,
                    std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) known = true;
    if (!known)
      throw std::invalid_argument(std::string("hardware spec json: unknown field '") + it.key() +
                                  "' in " + where);
  }
}

const json& field(const json& obj, const char* where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw std::invalid_argument(std::string("hardware spec json: missing field '") + key +
                                "' in " + where);
  return *it;
}

GateCost cost_from_json(const json& obj, const char* where) {
  reject_unknown(obj, where, {"duration_us", "fidelity"});
  return {field(obj, where, "duration_us").get<double>(),
          field(obj, where, "fidelity").get<double>()};
}

json cost_to_json(const GateCost& g) {
  return json{{"duration_us", g.duration_us}, {"fidelity", g.fidelity}};
}

}  // namespace

HardwareSpec spec_from_json(const std::string& text) {
  json doc = json::parse(text);
  if (!doc.is_object()) throw std::invalid_argument("hardware spec json: not an object");
  reject_unknown(doc, "root",
                 {"name", "grid", "radii", "gates", "coherence", "shuttle", "idle_mode"});
  HardwareSpec s;
  s.name = field(doc, "root", "name").get<std::string>();

  const json& grid = field(doc, "root", "grid");
  reject_unknown(grid, "grid", {"rows", "cols", "spacing_um"});
  s.rows = field(grid, "grid", "rows").get<int>();
  s.cols = field(grid, "grid", "cols").get<int>();
  s.d_um = field(grid, "grid", "spacing_um").get<double>();

  const json& radii = field(doc, "root", "radii");
  reject_unknown(radii, "radii", {"r_int", "r_re", "k"});
  s.r_int = field(radii, "radii", "r_int").get<double>();
  bool has_rre = radii.contains("r_re");
  bool has_k = radii.contains("k");
  if (has_rre == has_k)
    throw std::invalid_argument("hardware spec json: radii needs exactly one of 'r_re' or 'k'");
  s.r_re = has_rre ? radii["r_re"].get<double>() : radii["k"].get<double>() * s.r_int;

  const json& gates = field(doc, "root", "gates");
  reject_unknown(gates, "gates", {"r1q", "cz", "ccz", "cccz"});
  s.g1q = cost_from_json(field(gates, "gates", "r1q"), "gates.r1q");
  s.cz = cost_from_json(field(gates, "gates", "cz"), "gates.cz");
  s.ccz = cost_from_json(field(gates, "gates", "ccz"), "gates.ccz");
  s.cccz = cost_from_json(field(gates, "gates", "cccz"), "gates.cccz");

  const json& coh = field(doc, "root", "coherence");
  reject_unknown(coh, "coherence", {"t1_s", "t2_s"});
  s.t1_s = field(coh, "coherence", "t1_s").get<double>();
  s.t2_s = field(coh, "coherence", "t2_s").get<double>();

  const json& sh = field(doc, "root", "shuttle");
  reject_unknown(sh, "shuttle", {"v_max_um_per_us", "t_trap_us", "fidelity"});
  s.shuttle.v_max_um_per_us = field(sh, "shuttle", "v_max_um_per_us").get<double>();
  s.shuttle.t_trap_us = field(sh, "shuttle", "t_trap_us").get<double>();
  s.shuttle.fidelity = field(sh, "shuttle", "fidelity").get<double>();

  s.idle_mode = idle_mode_from_name(field(doc, "root", "idle_mode").get<std::string>());
  s.check();
  return s;
}

std::string spec_to_json(const HardwareSpec& spec) {
  json doc{
      {"name", spec.name},
      {"grid", {{"rows", spec.rows}, {"cols", spec.cols}, {"spacing_um", spec.d_um}}},
      {"radii", {{"r_int", spec.r_int}, {"r_re", spec.r_re}}},
      {"gates",
       {{"r1q", cost_to_json(spec.g1q)},
        {"cz", cost_to_json(spec.cz)},
        {"ccz", cost_to_json(spec.ccz)},
        {"cccz", cost_to_json(spec.cccz)}}},
      {"coherence", {{"t1_s", spec.t1_s}, {"t2_s", spec.t2_s}}},
      {"shuttle",
       {{"v_max_um_per_us", spec.shuttle.v_max_um_per_us},
        {"t_trap_us", spec.shuttle.t_trap_us},
        {"fidelity", spec.shuttle.fidelity}}},
      {"idle_mode", idle_mode_name(spec.idle_mode)},
  };
  return doc.dump(2);
}

}  // namespace atomc
