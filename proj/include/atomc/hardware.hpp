#pragma once

#include <string>
#include <utility>
#include <vector>

namespace atomc {

// Physical trap position in the plane, micrometers.
struct Position {
  double x = 0.0;
  double y = 0.0;
};

double distance_um(const Position& a, const Position& b);

// Cost entry for one gate class.
struct GateCost {
  double duration_us = 0.0;
  double fidelity = 1.0;
};

struct ShuttleParams {
  double v_max_um_per_us = 0.0;
  double t_trap_us = 0.0;  // one full pickup+drop cycle (SLM -> AOD -> SLM)
  double fidelity = 1.0;   // per shuttle op; 1 as long as avg speed <= v_max
};

enum class IdleMode { ArityWeighted, LiteralEq15 };

const char* idle_mode_name(IdleMode mode);
IdleMode idle_mode_from_name(const std::string& name);

// Grid-based hardware description. Radii are in units of the trap spacing d;
// use r_int_um()/r_re_um() for absolute distances.
struct HardwareSpec {
  std::string name;
  int rows = 0;
  int cols = 0;
  double d_um = 0.0;
  double r_int = 0.0;
  double r_re = 0.0;
  GateCost g1q, cz, ccz, cccz;
  double t1_s = 0.0;
  double t2_s = 0.0;
  ShuttleParams shuttle;
  IdleMode idle_mode = IdleMode::ArityWeighted;

  int traps() const { return rows * cols; }
  Position trap_position(int trap) const;  // trap index is row-major
  double r_int_um() const { return r_int * d_um; }
  double r_re_um() const { return r_re * d_um; }
  double t_eff_s() const;
  double t_eff_us() const { return t_eff_s() * 1e6; }

  // Throws std::invalid_argument on violated invariants
  // (r_re >= r_int, d > 0, T1/T2 > 0, fidelities in (0,1], durations > 0).
  void check() const;
};

struct CouplingGraph {
  int num_traps = 0;
  std::vector<std::pair<int, int>> edges;   // i < j, sorted lexicographically
  std::vector<std::vector<int>> neighbors;  // symmetric adjacency
  bool has_edge(int a, int b) const;
};

// T1*T2/(T1+T2); throws on non-positive input.
double effective_coherence_time(double t1_s, double t2_s);

// Edge (i,j) iff Euclidean trap distance <= r_int*d.
CouplingGraph coupling_graph(const HardwareSpec& spec);

// Worst-case multi-qubit rule: every pairwise distance <= r_int_um.
// Requires at least two positions.
bool gate_mappable(const std::vector<Position>& positions, double r_int_um);

// Conflict iff min cross-pair distance <= r_re_um (parallel execution needs
// strictly greater). Throws if the two sets share a position (caller bug).
bool restriction_conflict(const std::vector<Position>& gate_a,
                          const std::vector<Position>& gate_b, double r_re_um);

// C6/dist^6; throws on dist <= 0.
double vdw_interaction(double c6, double dist_um);

// Sixth root of C6/(hbar*Omega); throws on non-positive input.
double blockade_radius(double c6_over_hbar_omega);

// "strontium" or "rubidium"; throws on unknown name.
HardwareSpec preset(const std::string& name);

// JSON round trip. Unknown fields are rejected with the offending path;
// units are explicit in the field names (um, us, s).
HardwareSpec spec_from_json(const std::string& text);
std::string spec_to_json(const HardwareSpec& spec);

}  // namespace atomc
