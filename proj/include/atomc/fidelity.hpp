#pragma once

#include <map>
#include <string>

#include "atomc/hardware.hpp"
#include "atomc/scheduler.hpp"

namespace atomc {

// Approximate success probability and its exact factorization.
struct FidelityReport {
  double p = 1.0;
  double gate_factor = 1.0;  // product of operation fidelities
  double idle_factor = 1.0;  // exp(-t_idle/T_eff)
  double t_idle_us = 0.0;
  double makespan_us = 0.0;
  int n_swaps = 0;
  std::map<std::string, int> gate_counts;
};

// Products are accumulated in log space so large circuits do not underflow.
FidelityReport success_probability(const Schedule& s, const HardwareSpec& spec, int n);

// exp(-t_idle/T_eff) * F_CX^(3*n_swaps), F_CX composite.
double f_swap(int n_swaps, double t_idle_us, const HardwareSpec& spec);

// exp(-t_idle_sh/T_eff); idle decoherence is the only shuttle error source.
double f_shuttle(double t_idle_sh_us, const HardwareSpec& spec);

struct CxComposite {
  double f_cx = 1.0;
  double t_cx_us = 0.0;
};

// F_CX = F_1q*F_CZ, t_CX = t_1q + t_CZ.
CxComposite cx_composite(const HardwareSpec& spec);

struct BreakevenReport {
  double p_native = 1.0;
  double p_decomposed = 1.0;
  double breakeven_fidelity = 1.0;  // native preferred iff F_gate > this
  bool native_preferred = false;
  int count_1q = 0;
  int count_cz = 0;
};

// Native C..Z gate vs its (9 x 1q + 6 CZ) / (28 x 1q + 20 CZ) cost block on an
// isolated register of the gate's arity. Single-qubit stages act as global
// drives over the block register, so idle decoherence accrues only to the
// spectators of each CZ: t_idle = (arity-2)*t_CZ*n_CZ for the decomposition
// and zero for the single native pulse; the comparison is dominated by the
// gate factors.
BreakevenReport decomposition_breakeven(GateTag gate, const HardwareSpec& spec);

struct Crossover {
  bool finite = false;
  double t_eff_us = 0.0;
};

// T_eff* = -t_idle/(3*n_swaps*ln F_CX): the effective coherence time at which
// idle decoherence and SWAP infidelity contribute equally. n_swaps = 0 or
// F_CX = 1 yield the distinguished no-finite-crossover result.
Crossover crossover_teff(double t_idle_us, int n_swaps, double f_cx);

struct VelocityResult {
  bool feasible = false;
  double v_um_per_us = 0.0;  // minimum shuttling speed matching the gate SWAP
  double t_sh_star_us = 0.0; // shuttle duration at the crossover
};

// Spectator model: all n_idle register qubits idle for the full duration of
// the SWAP (gate or shuttle); the gate-based SWAP additionally pays F_CX^3.
// Infeasible when t_sh* <= 2*t_trap or the required speed exceeds v_max.
VelocityResult required_velocity(int n_idle, const HardwareSpec& spec, double dist_um);

}  // namespace atomc
