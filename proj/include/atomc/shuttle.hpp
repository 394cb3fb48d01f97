#pragma once

#include <string>
#include <vector>

#include "atomc/hardware.hpp"
#include "atomc/mapper.hpp"
#include "atomc/scheduler.hpp"

namespace atomc {

// AOD coordinate sets. Rows and columns move jointly; an atom can sit at any
// (x_i, y_a) intersection.
struct AodGrid {
  std::vector<double> x_um;  // strictly increasing, adjacent gaps > d_min
  std::vector<double> y_um;
  double d_min_um = 0.0;

  void check() const;  // throws on an invalid grid
};

// Per-coordinate displacements; all atoms in row/column move together.
struct AodMove {
  std::vector<double> dx_um;  // size = x_um.size()
  std::vector<double> dy_um;  // size = y_um.size()
};

struct MoveViolation {
  char axis = 'x';
  int index = -1;  // lower coordinate slot of the offending adjacent pair
  std::string message;
};

// Valid iff post-move coordinates stay strictly ordered with adjacent gaps
// > d_min on both axes. With monotone simultaneous linear ramps, no-crossing
// during motion reduces to endpoint ordering.
std::vector<MoveViolation> validate_move(const AodGrid& grid, const AodMove& mv);

AodGrid apply_move(const AodGrid& grid, const AodMove& mv);

// 2*(t_trap + distance/v_max): pickup+drop plus motion, with the factor 2
// covering the two sequential single-atom moves of a SWAP substitution.
double shuttle_duration(double distance_um, const HardwareSpec& spec);

// Net counter-movement of an atom passed over (or exchanged) by a shuttle.
struct Displaced {
  int qubit = -1;
  int from_trap = -1;
  int to_trap = -1;
};

struct ShuttleOp {
  int qubit = -1;  // transported atom
  int source_trap = -1;
  int dest_trap = -1;
  double distance_um = 0.0;  // Euclidean source->destination
  double duration_us = 0.0;  // = shuttle_duration(distance_um)
  bool exchange = false;     // single-SWAP substitution (two-step exchange)
  std::vector<Displaced> displaced;
  int seq_pos = -1;         // index of the first consumed SWAP in m.gates
  int consumed_swaps = 0;
  int layer = 0;            // consecutive ops (no gate between) share a layer
};

enum class Scenario { Parallel, Sequential };

const char* scenario_name(Scenario s);

struct ShuttlePlan {
  int n = 0;
  Scenario scenario = Scenario::Parallel;
  std::vector<ShuttleOp> ops;
};

// Collapse each maximal run of consecutive SWAPs carrying the same atom into
// one ShuttleOp (distance = straight-line source->destination); lone SWAPs
// become exchange ops. Replaying the plan from the initial layout reproduces
// the mapped circuit's final layout.
ShuttlePlan shuttles_from_swaps(const MappedCircuit& m, const HardwareSpec& spec);

// Parallel: shuttles overlap with each other and with gates when their qubit
// sets are disjoint. Sequential: each shuttle runs alone between gate layers.
Schedule schedule_shuttle_plan(const ShuttlePlan& plan, const MappedCircuit& m,
                               const HardwareSpec& spec, Scenario scenario);

struct IdleBreakdown {
  double gate_us = 0.0;
  double shuttle_motion_us = 0.0;
  double trap_switch_us = 0.0;
};

struct LayerStats {
  int layers_fixed = 0;
  int layers_reconfig = 0;
  double reduction_ratio = 0.0;  // 1 - reconfig/fixed
  IdleBreakdown breakdown_fixed;
  IdleBreakdown breakdown_reconfig;
};

// Throws std::invalid_argument when the plans do not cover the same circuit.
LayerStats shuttle_layer_stats(const LayeredPlan& fixed, const LayeredPlan& reconfig,
                               const HardwareSpec& spec);

}  // namespace atomc
