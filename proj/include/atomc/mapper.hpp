#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "atomc/circuit.hpp"
#include "atomc/hardware.hpp"

namespace atomc {

// Bijection circuit-qubit -> trap over the occupied trap subset.
struct Layout {
  std::vector<int> qubit_to_trap;  // size n
  std::vector<int> trap_to_qubit;  // size traps, -1 = empty

  int trap_of(int q) const { return qubit_to_trap[q]; }
  int qubit_at(int t) const { return trap_to_qubit[t]; }
  int n() const { return static_cast<int>(qubit_to_trap.size()); }

  // Exchange occupants of two traps (either may be empty).
  void swap_traps(int t1, int t2);
  // Relocate qubit q to trap t (t must be empty).
  void move_qubit(int q, int t);

  void check(int traps) const;  // throws on broken bijection
  static Layout from_qubit_to_trap(std::vector<int> q2t, int traps);

  bool operator==(const Layout& o) const { return qubit_to_trap == o.qubit_to_trap; }
};

// Gate instance rewritten onto traps. qubits records the logical operands at
// the execution point (for SWAPs: the two atoms being exchanged).
struct HwGate {
  GateKind kind;
  std::vector<int> traps;
  std::vector<int> qubits;
  int src_gate = -1;  // index into the routed circuit; -1 for inserted SWAPs
};

struct MappedCircuit {
  int n = 0;
  std::vector<HwGate> gates;
  Layout initial;
  Layout final_layout;
  int n_swaps = 0;
};

enum class LayoutStrategy { Identity, Random, Affinity };

LayoutStrategy layout_strategy_from_name(const std::string& name);
const char* layout_strategy_name(LayoutStrategy s);

struct RouteParams {
  int lookahead_size = 20;
  double lookahead_weight = 0.5;
  double decay = 0.001;
  std::uint64_t seed = 0;  // reserved; routing is deterministic via tie-breaks
};

Layout initial_layout(const Circuit& c, const HardwareSpec& spec,
                      LayoutStrategy strategy, std::uint64_t seed);

// SABRE-style SWAP insertion; multi-qubit gates are routed by gathering their
// operands into a pairwise-within-r_int clique around a chosen center trap.
// Throws RoutingError when operands sit in disconnected components of the
// occupied coupling subgraph or no feasible multi-qubit placement exists.
MappedCircuit route(const Circuit& c, const HardwareSpec& spec,
                    const Layout& layout, const RouteParams& params = {});

struct RoutingError : std::runtime_error {
  explicit RoutingError(const std::string& what) : std::runtime_error(what) {}
};

struct Violation {
  int gate_index = -1;
  std::string message;
};

// Empty iff every gate satisfies the pairwise r_int rule at its traps.
std::vector<Violation> verify(const MappedCircuit& m, const HardwareSpec& spec);

enum class LayeredMode { Fixed, Reconfig };

// One shuttle-priced movement between consecutive layers. An exchange op
// covers both atoms of a SWAP substitution (the counterpart travels the same
// distance the opposite way); a plain move relocates one atom.
struct TransitionOp {
  int qubit = -1;
  int from_trap = -1;
  int to_trap = -1;
  double distance_um = 0.0;
  bool exchange = false;
  int other_qubit = -1;  // exchange only
};

struct Layer {
  Layout layout;
  std::vector<HwGate> gates;  // circuit gates only, no SWAPs
};

struct LayeredPlan {
  LayeredMode mode = LayeredMode::Fixed;
  int n = 0;
  std::vector<Layer> layers;
  // transitions[i] holds the movements between layers i and i+1.
  std::vector<std::vector<TransitionOp>> transitions;
};

// Fixed mode: one evolving layout, gates batched between SWAP bursts of a
// SABRE route. Reconfig mode: a fresh affinity layout for the remaining
// circuit before every layer.
LayeredPlan route_layered(const Circuit& c, const HardwareSpec& spec,
                          LayeredMode mode, std::uint64_t seed);

}  // namespace atomc
