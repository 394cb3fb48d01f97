#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "atomc/shuttle.hpp"

namespace atomc {

namespace {

void check_axis(const std::vector<double>& coords, double d_min, char axis) {
  for (std::size_t i = 0; i + 1 < coords.size(); ++i)
    if (coords[i + 1] - coords[i] <= d_min)
      throw std::invalid_argument(std::string("aod ") + axis +
                                  " coordinates must be strictly increasing with gaps > d_min");
}

void validate_axis(const std::vector<double>& coords, const std::vector<double>& delta,
                   double d_min, char axis, std::vector<MoveViolation>& out) {
  if (coords.size() != delta.size())
    throw std::invalid_argument(std::string("move has ") + std::to_string(delta.size()) +
                                " deltas for " + std::to_string(coords.size()) + ' ' + axis +
                                " coordinates");
  for (std::size_t i = 0; i + 1 < coords.size(); ++i) {
    double lo = coords[i] + delta[i];
    double hi = coords[i + 1] + delta[i + 1];
    if (hi - lo <= d_min) {
      MoveViolation v;
      v.axis = axis;
      v.index = static_cast<int>(i);
      v.message = std::string(1, axis) + " slots " + std::to_string(i) + " and " +
                  std::to_string(i + 1) + (hi <= lo ? " would cross or coincide"
                                                    : " would land closer than d_min");
      out.push_back(std::move(v));
    }
  }
}

}  // namespace

void AodGrid::check() const {
  if (d_min_um < 0.0) throw std::invalid_argument("d_min must be >= 0");
  check_axis(x_um, d_min_um, 'x');
  check_axis(y_um, d_min_um, 'y');
}

std::vector<MoveViolation> validate_move(const AodGrid& grid, const AodMove& mv) {
  std::vector<MoveViolation> out;
  validate_axis(grid.x_um, mv.dx_um, grid.d_min_um, 'x', out);
  validate_axis(grid.y_um, mv.dy_um, grid.d_min_um, 'y', out);
  return out;
}

AodGrid apply_move(const AodGrid& grid, const AodMove& mv) {
  if (grid.x_um.size() != mv.dx_um.size() || grid.y_um.size() != mv.dy_um.size())
    throw std::invalid_argument("move size does not match grid");
  AodGrid out = grid;
  for (std::size_t i = 0; i < out.x_um.size(); ++i) out.x_um[i] += mv.dx_um[i];
  for (std::size_t i = 0; i < out.y_um.size(); ++i) out.y_um[i] += mv.dy_um[i];
  return out;
}

double shuttle_duration(double distance_um, const HardwareSpec& spec) {
  return 2.0 * (spec.shuttle.t_trap_us + distance_um / spec.shuttle.v_max_um_per_us);
}

const char* scenario_name(Scenario s) {
  return s == Scenario::Parallel ? "parallel" : "sequential";
}

ShuttlePlan shuttles_from_swaps(const MappedCircuit& m, const HardwareSpec& spec) {
  ShuttlePlan plan;
  plan.n = m.n;

  Layout live = m.initial;
  int layer = 0;
  bool gate_since_op = false;

  std::size_t i = 0;
  while (i < m.gates.size()) {
    const HwGate& g = m.gates[i];
    if (g.src_gate >= 0) {
      if (!plan.ops.empty()) gate_since_op = true;
      ++i;
      continue;
    }
    // Maximal run of inserted SWAPs sharing a carried atom.
    Layout before = live;
    std::vector<int> carried = g.qubits;
    std::size_t j = i;
    while (j < m.gates.size() && m.gates[j].src_gate < 0) {
      const HwGate& sw = m.gates[j];
      if (j > i) {
        std::vector<int> next;
        for (int q : carried)
          if (q == sw.qubits[0] || q == sw.qubits[1]) next.push_back(q);
        if (next.empty()) break;
        carried = std::move(next);
      }
      live.swap_traps(sw.traps[0], sw.traps[1]);
      ++j;
    }
    int consumed = static_cast<int>(j - i);

    ShuttleOp op;
    op.seq_pos = static_cast<int>(i);
    op.consumed_swaps = consumed;
    if (gate_since_op) {
      ++layer;
      gate_since_op = false;
    }
    op.layer = layer;
    if (consumed == 1) {
      op.exchange = true;
      op.qubit = g.qubits[0];
      op.source_trap = before.trap_of(op.qubit);
      op.dest_trap = op.source_trap == g.traps[0] ? g.traps[1] : g.traps[0];
      op.displaced.push_back({g.qubits[1], op.dest_trap, op.source_trap});
    } else {
      op.qubit = *std::min_element(carried.begin(), carried.end());
      op.source_trap = before.trap_of(op.qubit);
      op.dest_trap = live.trap_of(op.qubit);
      for (int q = 0; q < m.n; ++q) {
        if (q == op.qubit || before.trap_of(q) == live.trap_of(q)) continue;
        op.displaced.push_back({q, before.trap_of(q), live.trap_of(q)});
      }
    }
    op.distance_um = distance_um(spec.trap_position(op.source_trap),
                                 spec.trap_position(op.dest_trap));
    op.duration_us = shuttle_duration(op.distance_um, spec);
    plan.ops.push_back(std::move(op));
    i = j;
  }
  return plan;
}

namespace {

// Per-trap timeline of entangling gate entries; disjoint and sorted because a
// trap hosts one gate at a time and starts never decrease.
struct TrapTimeline {
  std::vector<std::vector<std::pair<double, double>>> spans;

  explicit TrapTimeline(int traps) : spans(traps) {}

  void add(const std::vector<int>& traps, double start, double end) {
    for (int t : traps) spans[t].push_back({start, end});
  }

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

Schedule schedule_shuttle_plan(const ShuttlePlan& plan, const MappedCircuit& m,
                               const HardwareSpec& spec, Scenario scenario) {
  Schedule s;
  s.n = m.n;
  s.busy_us.assign(m.n, 0.0);

  int traps = spec.traps();
  double r_re = spec.r_re_um();
  std::vector<std::vector<int>> near(traps);
  for (int t = 0; t < traps; ++t)
    for (int u = 0; u < traps; ++u)
      if (distance_um(spec.trap_position(t), spec.trap_position(u)) <= r_re)
        near[t].push_back(u);

  TrapTimeline timeline(traps);
  std::vector<double> avail(m.n, 0.0);
  double clock_floor = 0.0;

  auto place = [&](ScheduleEntry e, double dur, bool accrue_busy) {
    for (int q : e.qubits) {
      avail[q] = e.start_us + dur;
      if (accrue_busy) s.busy_us[q] += dur;
    }
    clock_floor = e.start_us;
    s.makespan_us = std::max(s.makespan_us, e.start_us + dur);
    s.total_op_time_us += dur;
    e.end_us = e.start_us + dur;
    s.entries.push_back(std::move(e));
  };

  std::size_t gi = 0, oi = 0;
  while (gi < m.gates.size()) {
    if (oi < plan.ops.size() && plan.ops[oi].seq_pos == static_cast<int>(gi)) {
      const ShuttleOp& op = plan.ops[oi];
      ScheduleEntry e;
      e.is_shuttle = true;
      e.shuttle_distance_um = op.distance_um;
      e.traps = {op.source_trap, op.dest_trap};
      e.qubits.push_back(op.qubit);
      for (const Displaced& d : op.displaced) e.qubits.push_back(d.qubit);
      double t = clock_floor;
      if (scenario == Scenario::Sequential) {
        for (int q = 0; q < m.n; ++q) t = std::max(t, avail[q]);
        e.start_us = t;
        place(std::move(e), op.duration_us, false);
        for (int q = 0; q < m.n; ++q) avail[q] = t + op.duration_us;
      } else {
        for (int q : e.qubits) t = std::max(t, avail[q]);
        e.start_us = t;
        place(std::move(e), op.duration_us, false);
      }
      gi += op.consumed_swaps;
      ++oi;
      continue;
    }
    const HwGate& g = m.gates[gi];
    ++gi;
    double dur = op_duration_us(g.kind, spec);
    double t = clock_floor;
    for (int q : g.qubits) t = std::max(t, avail[q]);
    bool entangling = g.qubits.size() >= 2;
    if (entangling) {
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
    e.src_gate = g.src_gate;
    if (entangling) timeline.add(g.traps, t, t + dur);
    place(std::move(e), dur, true);
  }
  return s;
}

LayerStats shuttle_layer_stats(const LayeredPlan& fixed, const LayeredPlan& reconfig,
                               const HardwareSpec& spec) {
  auto coverage = [](const LayeredPlan& plan) {
    std::vector<int> src;
    for (const Layer& layer : plan.layers)
      for (const HwGate& g : layer.gates) src.push_back(g.src_gate);
    std::sort(src.begin(), src.end());
    return src;
  };
  if (fixed.n != reconfig.n || coverage(fixed) != coverage(reconfig))
    throw std::invalid_argument("layered plans cover different circuits");

  LayerStats st;
  st.layers_fixed = static_cast<int>(fixed.layers.size());
  st.layers_reconfig = static_cast<int>(reconfig.layers.size());
  if (st.layers_fixed > 0)
    st.reduction_ratio = 1.0 - static_cast<double>(st.layers_reconfig) /
                                   static_cast<double>(st.layers_fixed);

  auto breakdown = [&](const LayeredPlan& plan) {
    IdleBreakdown b;
    for (const Layer& layer : plan.layers) {
      MappedCircuit lm;
      lm.n = plan.n;
      lm.gates = layer.gates;
      lm.initial = layer.layout;
      lm.final_layout = layer.layout;
      b.gate_us += schedule(lm, spec).makespan_us;
    }
    for (const auto& ops : plan.transitions)
      for (const TransitionOp& op : ops) {
        double factor = op.exchange ? 2.0 : 1.0;
        b.trap_switch_us += factor * spec.shuttle.t_trap_us;
        b.shuttle_motion_us += factor * op.distance_um / spec.shuttle.v_max_um_per_us;
      }
    return b;
  };
  st.breakdown_fixed = breakdown(fixed);
  st.breakdown_reconfig = breakdown(reconfig);
  return st;
}

}  // namespace atomc
