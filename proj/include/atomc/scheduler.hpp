#pragma once

#include <map>
#include <string>
#include <vector>

#include "atomc/hardware.hpp"
#include "atomc/mapper.hpp"

namespace atomc {

struct ScheduleEntry {
  GateKind kind;  // meaningful when !is_shuttle
  bool is_shuttle = false;
  double shuttle_distance_um = 0.0;
  std::vector<int> traps;   // gate: operand traps; shuttle: {source, dest}
  std::vector<int> qubits;  // logical operands / atoms involved in a shuttle
  double start_us = 0.0;
  double end_us = 0.0;
  int src_gate = -1;
};

struct Schedule {
  int n = 0;
  std::vector<ScheduleEntry> entries;
  double makespan_us = 0.0;
  std::vector<double> busy_us;       // per logical qubit
  double total_op_time_us = 0.0;     // sum of entry durations
};

// Duration/fidelity model: R1Q/H/X -> 1q entry; CZ and CP -> CZ entry; CX is a
// composite primitive (t_1q + t_CZ, F_1q*F_CZ); SWAP = 3 CX; CCZ/CCCZ native
// entries.
double op_duration_us(const GateKind& kind, const HardwareSpec& spec);
double op_fidelity(const GateKind& kind, const HardwareSpec& spec);

// Greedy ASAP list schedule in program order. A gate starts at the earliest
// time >= its operands' availability at which no concurrently running
// entangling gate conflicts under the restriction radius; single-qubit gates
// are exempt from restriction zones.
Schedule schedule(const MappedCircuit& m, const HardwareSpec& spec);

double idle_time(const Schedule& s, int n, IdleMode mode);

struct ScheduleMetrics {
  double makespan_us = 0.0;
  int depth = 0;
  std::map<std::string, int> gate_counts;
};

// depth = greedy partition of entries (by start time) into layers; an entry
// opens a new layer when it starts at or after the current layer's earliest
// end.
ScheduleMetrics metrics(const Schedule& s);

// Timeline with header: index,op,traps,qubits,start_us,end_us,duration_us.
std::string schedule_to_csv(const Schedule& s);

}  // namespace atomc
