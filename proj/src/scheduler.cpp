#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "atomc/scheduler.hpp"

namespace atomc {

double op_duration_us(const GateKind& kind, const HardwareSpec& spec) {
  switch (kind.tag) {
    case GateTag::R1Q:
    case GateTag::H:
    case GateTag::X:
      return spec.g1q.duration_us;
    case GateTag::CZ:
    case GateTag::CP:
      return spec.cz.duration_us;
    case GateTag::CX:
      return spec.g1q.duration_us + spec.cz.duration_us;
    case GateTag::SWAP:
      return 3.0 * (spec.g1q.duration_us + spec.cz.duration_us);
    case GateTag::CCZ:
      return spec.ccz.duration_us;
    case GateTag::CCCZ:
      return spec.cccz.duration_us;
  }
  throw std::invalid_argument("unknown gate tag");
}

double op_fidelity(const GateKind& kind, const HardwareSpec& spec) {
  switch (kind.tag) {
    case GateTag::R1Q:
    case GateTag::H:
    case GateTag::X:
      return spec.g1q.fidelity;
    case GateTag::CZ:
    case GateTag::CP:
      return spec.cz.fidelity;
    case GateTag::CX:
      return spec.g1q.fidelity * spec.cz.fidelity;
    case GateTag::SWAP: {
      double f_cx = spec.g1q.fidelity * spec.cz.fidelity;
      return f_cx * f_cx * f_cx;
    }
    case GateTag::CCZ:
      return spec.ccz.fidelity;
    case GateTag::CCCZ:
      return spec.cccz.fidelity;
  }
  throw std::invalid_argument("unknown gate tag");
}

namespace {

// Per-trap timeline of entangling entries. A trap hosts at most one gate at a
// time, so each list is disjoint and sorted by both start and end.
struct TrapTimeline {
  std::vector<std::vector<std::pair<double, double>>> spans;  // (start, end)

  explicit TrapTimeline(int traps) : spans(traps) {}

  void add(const std::vector<int>& traps, double start, double end) {
    for (int t : traps) spans[t].push_back({start, end});
  }

  // Latest end among entries on `trap` running anywhere inside [t, t+dur).
  double blocking_end(int trap, double t, double dur) const {
    const auto& list = spans[trap];
    auto it = std::upper_bound(list.begin(), list.end(), t,
                               [](double value, const std::pair<double, double>& s) {
                                 return value < s.second;
                               });
    double latest = -1.0;
    for (; it != list.end() && it->first < t + dur; ++it) latest = it->second;
    return latest;
  }
};

}  // namespace

Schedule schedule(const MappedCircuit& m, const HardwareSpec& spec) {
  Schedule s;
  s.n = m.n;
  s.busy_us.assign(m.n, 0.0);

  int traps = spec.traps();
  // Traps whose occupants an entangling gate here would disturb.
  double r_re = spec.r_re_um();
  std::vector<std::vector<int>> near(traps);
  for (int t = 0; t < traps; ++t)
    for (int u = 0; u < traps; ++u)
      if (distance_um(spec.trap_position(t), spec.trap_position(u)) <= r_re)
        near[t].push_back(u);

  TrapTimeline timeline(traps);
  std::vector<double> avail(m.n, 0.0);
  double clock_floor = 0.0;  // entries never start before an earlier entry:
                             // keeps the schedule deterministic and makes
                             // makespan monotone in the blocking factor

  for (const HwGate& g : m.gates) {
    double dur = op_duration_us(g.kind, spec);
    double t = clock_floor;
    for (int q : g.qubits) t = std::max(t, avail[q]);
    bool entangling = g.qubits.size() >= 2;
    if (entangling) {
      // Push t past every conflicting entangling entry. Any entry with an
      // operand trap within r_re of one of ours conflicts by definition.
      bool moved = true;
      while (moved) {
        moved = false;
        for (int mine : g.traps) {
          for (int u : near[mine]) {
            double end = timeline.blocking_end(u, t, dur);
            if (end > t) {
              t = end;
              moved = true;
            }
          }
        }
      }
    }
    ScheduleEntry e;
    e.kind = g.kind;
    e.traps = g.traps;
    e.qubits = g.qubits;
    e.start_us = t;
    e.end_us = t + dur;
    e.src_gate = g.src_gate;
    s.entries.push_back(std::move(e));
    if (entangling) timeline.add(g.traps, t, t + dur);
    for (int q : g.qubits) {
      avail[q] = t + dur;
      s.busy_us[q] += dur;
    }
    clock_floor = t;
    s.makespan_us = std::max(s.makespan_us, t + dur);
    s.total_op_time_us += dur;
  }
  return s;
}

double idle_time(const Schedule& s, int n, IdleMode mode) {
  // Shuttle entries are pure transport: the whole register, mover included,
  // decoheres during them, so they contribute no busy time in either mode.
  double weighted = 0.0;
  for (const ScheduleEntry& e : s.entries) {
    if (e.is_shuttle) continue;
    double dur = e.end_us - e.start_us;
    weighted += mode == IdleMode::ArityWeighted ? dur * static_cast<double>(e.qubits.size())
                                                : dur;
  }
  return static_cast<double>(n) * s.makespan_us - weighted;
}

ScheduleMetrics metrics(const Schedule& s) {
  ScheduleMetrics out;
  out.makespan_us = s.makespan_us;
  double layer_min_end = 0.0;
  bool open = false;
  for (const ScheduleEntry& e : s.entries) {
    if (!open || e.start_us >= layer_min_end) {
      ++out.depth;
      layer_min_end = e.end_us;
      open = true;
    } else {
      layer_min_end = std::min(layer_min_end, e.end_us);
    }
    ++out.gate_counts[e.is_shuttle ? "shuttle" : op_name(e.kind)];
  }
  return out;
}

std::string schedule_to_csv(const Schedule& s) {
  std::string out = "index,op,traps,qubits,start_us,end_us,duration_us\n";
  char buf[64];
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    const ScheduleEntry& e = s.entries[i];
    out += std::to_string(i);
    out += ',';
    out += e.is_shuttle ? "shuttle" : op_name(e.kind);
    out += ',';
    for (std::size_t k = 0; k < e.traps.size(); ++k) {
      if (k) out += ';';
      out += std::to_string(e.traps[k]);
    }
    out += ',';
    for (std::size_t k = 0; k < e.qubits.size(); ++k) {
      if (k) out += ';';
      out += std::to_string(e.qubits[k]);
    }
    auto num = [&](double v) {
      std::snprintf(buf, sizeof buf, "%.10g", v);
      out += ',';
      out += buf;
    };
    num(e.start_us);
    num(e.end_us);
    num(e.end_us - e.start_us);
    out += '\n';
  }
  return out;
}

}  // namespace atomc
