#include <cmath>
#include <stdexcept>

#include "atomc/circuit.hpp"
#include "atomc/fidelity.hpp"

namespace atomc {

FidelityReport success_probability(const Schedule& s, const HardwareSpec& spec, int n) {
  FidelityReport rep;
  rep.makespan_us = s.makespan_us;
  double log_gates = 0.0;
  for (const ScheduleEntry& e : s.entries) {
    double f = e.is_shuttle ? spec.shuttle.fidelity : op_fidelity(e.kind, spec);
    log_gates += std::log(f);
    if (!e.is_shuttle && e.kind.tag == GateTag::SWAP) ++rep.n_swaps;
    ++rep.gate_counts[e.is_shuttle ? "shuttle" : op_name(e.kind)];
  }
  rep.t_idle_us = idle_time(s, n, spec.idle_mode);
  double log_idle = -rep.t_idle_us / spec.t_eff_us();
  rep.gate_factor = std::exp(log_gates);
  rep.idle_factor = std::exp(log_idle);
  rep.p = std::exp(log_gates + log_idle);
  return rep;
}

double f_swap(int n_swaps, double t_idle_us, const HardwareSpec& spec) {
  double f_cx = spec.g1q.fidelity * spec.cz.fidelity;
  return std::exp(-t_idle_us / spec.t_eff_us() + 3.0 * n_swaps * std::log(f_cx));
}

double f_shuttle(double t_idle_sh_us, const HardwareSpec& spec) {
  return std::exp(-t_idle_sh_us / spec.t_eff_us());
}

CxComposite cx_composite(const HardwareSpec& spec) {
  return {spec.g1q.fidelity * spec.cz.fidelity,
          spec.g1q.duration_us + spec.cz.duration_us};
}

BreakevenReport decomposition_breakeven(GateTag gate, const HardwareSpec& spec) {
  int arity;
  double f_native;
  switch (gate) {
    case GateTag::CCZ:
      arity = 3;
      f_native = spec.ccz.fidelity;
      break;
    case GateTag::CCCZ:
      arity = 4;
      f_native = spec.cccz.fidelity;
      break;
    default:
      throw std::invalid_argument("breakeven analysis applies to ccz and cccz only");
  }

  // Derive the cost block from the actual lowering of one isolated gate.
  Circuit block;
  block.n = arity;
  std::vector<int> operands(arity);
  for (int i = 0; i < arity; ++i) operands[i] = i;
  block.gates.push_back(Gate{GateKind{gate}, operands});
  Circuit lowered = lower_to_native(block, NativeSet::rydberg());

  BreakevenReport rep;
  double log_dec = 0.0;
  for (const Gate& g : lowered.gates) {
    if (g.kind.tag == GateTag::CZ) {
      ++rep.count_cz;
      log_dec += std::log(spec.cz.fidelity);
    } else {
      ++rep.count_1q;
      log_dec += std::log(spec.g1q.fidelity);
    }
  }
  double idle_dec_us = (arity - 2) * spec.cz.duration_us * rep.count_cz;
  rep.p_decomposed = std::exp(log_dec - idle_dec_us / spec.t_eff_us());
  rep.p_native = f_native;
  rep.breakeven_fidelity = rep.p_decomposed;
  rep.native_preferred = rep.p_native > rep.p_decomposed;
  return rep;
}

Crossover crossover_teff(double t_idle_us, int n_swaps, double f_cx) {
  Crossover c;
  if (n_swaps <= 0 || f_cx >= 1.0) return c;  // swap factor never dips below idle
  c.finite = true;
  c.t_eff_us = -t_idle_us / (3.0 * n_swaps * std::log(f_cx));
  return c;
}

VelocityResult required_velocity(int n_idle, const HardwareSpec& spec, double dist_um) {
  VelocityResult r;
  if (n_idle <= 0) return r;
  double t_swap = 3.0 * (spec.g1q.duration_us + spec.cz.duration_us);
  double f_cx = spec.g1q.fidelity * spec.cz.fidelity;
  r.t_sh_star_us = t_swap - 3.0 * spec.t_eff_us() * std::log(f_cx) / n_idle;
  double floor_us = 2.0 * spec.shuttle.t_trap_us;
  if (r.t_sh_star_us <= floor_us) return r;  // pickup+drop alone already too slow
  r.v_um_per_us = 2.0 * dist_um / (r.t_sh_star_us - floor_us);
  r.feasible = r.v_um_per_us <= spec.shuttle.v_max_um_per_us;
  return r;
}

}  // namespace atomc
