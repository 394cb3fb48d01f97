#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "atomc/circuit.hpp"
#include "atomc/hardware.hpp"
#include "atomc/mapper.hpp"
#include "atomc/rng.hpp"
#include "atomc/scheduler.hpp"
#include "test_util.hpp"

using namespace atomc;

TEST_SUITE_BEGIN("scheduler");

namespace {

NativeSet composite_native() {
  NativeSet s;
  s.h = true;
  s.x = true;
  s.cx = true;
  s.swap = false;
  s.cp_native = false;
  s.multiqubit_native = true;
  return s;
}

MappedCircuit manual(int n, int traps, std::vector<int> q2t, std::vector<HwGate> gates) {
  MappedCircuit m;
  m.n = n;
  m.initial = Layout::from_qubit_to_trap(std::move(q2t), traps);
  m.final_layout = m.initial;
  m.gates = std::move(gates);
  return m;
}

// Direct assertion of every Schedule invariant: per-qubit/per-trap
// non-overlap, dependency order via qubit availability, pairwise restriction
// legality among concurrent entangling entries, duration consistency.
void check_schedule(const Schedule& s, const MappedCircuit& m, const HardwareSpec& spec) {
  REQUIRE(s.entries.size() == m.gates.size());
  double prev_start = 0.0;
  std::vector<double> avail(s.n, 0.0);
  std::vector<double> lb(s.n, 0.0);  // dependency-only earliest ends
  double serial = 0.0, longest_path = 0.0;
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    const ScheduleEntry& e = s.entries[i];
    REQUIRE(!e.is_shuttle);
    CHECK(e.kind == m.gates[i].kind);
    CHECK(e.traps == m.gates[i].traps);
    double dur = op_duration_us(e.kind, spec);
    CHECK(e.end_us - e.start_us == doctest::Approx(dur).epsilon(1e-12));
    CHECK(e.start_us >= prev_start);  // monotone clock
    prev_start = e.start_us;
    for (int q : e.qubits) {
      CHECK(e.start_us >= avail[q] - 1e-9);  // dependency / same-qubit overlap
      avail[q] = e.end_us;
    }
    serial += dur;
    double dep_start = 0.0;
    for (int q : e.qubits) dep_start = std::max(dep_start, lb[q]);
    for (int q : e.qubits) lb[q] = dep_start + dur;
    longest_path = std::max(longest_path, dep_start + dur);
    // Pairwise restriction legality among overlapping entangling entries.
    if (e.qubits.size() >= 2) {
      for (std::size_t j = 0; j < i; ++j) {
        const ScheduleEntry& o = s.entries[j];
        if (o.qubits.size() < 2) continue;
        bool overlap = o.start_us < e.end_us - 1e-9 && o.end_us > e.start_us + 1e-9;
        if (!overlap) continue;
        auto pos = [&](const std::vector<int>& traps) {
          std::vector<Position> p;
          for (int t : traps) p.push_back(spec.trap_position(t));
          return p;
        };
        CAPTURE(i);
        CAPTURE(j);
        CHECK_FALSE(restriction_conflict(pos(e.traps), pos(o.traps), spec.r_re_um()));
      }
    }
  }
  double expect_makespan = 0.0;
  for (const ScheduleEntry& e : s.entries) expect_makespan = std::max(expect_makespan, e.end_us);
  CHECK(s.makespan_us == doctest::Approx(expect_makespan).epsilon(1e-12));
  CHECK(s.makespan_us <= serial + 1e-9);
  CHECK(s.makespan_us >= longest_path - 1e-9);
}

}  // namespace

TEST_CASE("operation durations and fidelities") {
  HardwareSpec rb = preset("rubidium");
  HardwareSpec sr = preset("strontium");

  CHECK(op_duration_us(GateKind::h(), rb) == doctest::Approx(0.5));
  CHECK(op_fidelity(GateKind::h(), rb) == doctest::Approx(0.999));
  CHECK(op_duration_us(GateKind::cz(), rb) == doctest::Approx(0.2));
  // CP executes in the CZ class.
  CHECK(op_duration_us(GateKind::cp(1.0), rb) == doctest::Approx(0.2));
  CHECK(op_fidelity(GateKind::cp(1.0), rb) == doctest::Approx(0.995));
  // CX composite: t_1q + t_CZ, F_1q * F_CZ.
  CHECK(op_duration_us(GateKind::cx(), rb) == doctest::Approx(0.7));
  CHECK(op_fidelity(GateKind::cx(), rb) == doctest::Approx(0.994005));
  CHECK(op_duration_us(GateKind::cx(), sr) == doctest::Approx(200.1));
  CHECK(op_fidelity(GateKind::cx(), sr) == doctest::Approx(0.9801));
  // SWAP = 3 CX.
  CHECK(op_duration_us(GateKind::swap(), sr) == doctest::Approx(600.3));
  CHECK(op_fidelity(GateKind::swap(), rb) == doctest::Approx(std::pow(0.994005, 3)));
  CHECK(op_duration_us(GateKind::ccz(), rb) == doctest::Approx(1.0));
  CHECK(op_fidelity(GateKind::ccz(), rb) == doctest::Approx(0.98));
  CHECK(op_fidelity(GateKind::cccz(), sr) == doctest::Approx(0.95));
}

TEST_CASE("ghz(3) composite timeline on rubidium") {
  HardwareSpec spec = preset("rubidium");
  spec.rows = 1;
  spec.cols = 3;
  Circuit c = lower_to_native(generate(BenchKind::Ghz, 3, 0), composite_native());
  REQUIRE(c.gates.size() == 3);  // H, CX, CX survive composite lowering
  Layout l = initial_layout(c, spec, LayoutStrategy::Identity, 0);
  MappedCircuit m = route(c, spec, l);
  REQUIRE(m.n_swaps == 0);
  Schedule s = schedule(m, spec);
  check_schedule(s, m, spec);

  REQUIRE(s.entries.size() == 3);
  CHECK(s.entries[0].start_us == doctest::Approx(0.0));
  CHECK(s.entries[0].end_us == doctest::Approx(0.5));
  CHECK(s.entries[1].start_us == doctest::Approx(0.5));
  CHECK(s.entries[1].end_us == doctest::Approx(1.2));
  CHECK(s.entries[2].start_us == doctest::Approx(1.2));
  CHECK(s.entries[2].end_us == doctest::Approx(1.9));
  CHECK(s.makespan_us == doctest::Approx(1.9));
  CHECK(s.busy_us[0] == doctest::Approx(1.2));
  CHECK(s.busy_us[1] == doctest::Approx(1.4));
  CHECK(s.busy_us[2] == doctest::Approx(0.7));

  CHECK(idle_time(s, 3, IdleMode::ArityWeighted) == doctest::Approx(2.4));
  CHECK(idle_time(s, 3, IdleMode::LiteralEq15) == doctest::Approx(3.8));

  ScheduleMetrics met = metrics(s);
  CHECK(met.depth == 3);
  CHECK(met.makespan_us == doctest::Approx(1.9));
  CHECK(met.gate_counts.at("h") == 1);
  CHECK(met.gate_counts.at("cx") == 2);
}

TEST_CASE("restriction radius serializes nearby entangling gates") {
  HardwareSpec spec = preset("rubidium");
  spec.rows = 1;
  spec.cols = 20;
  spec.r_int = 1.0;
  spec.r_re = 2.0;  // 6 um

  // Far pairs: cross distance 27 um > r_re -> parallel.
  MappedCircuit far = manual(4, 20, {0, 1, 10, 11},
                             {{GateKind::cz(), {0, 1}, {0, 1}, 0},
                              {GateKind::cz(), {10, 11}, {2, 3}, 1}});
  Schedule sfar = schedule(far, spec);
  check_schedule(sfar, far, spec);
  CHECK(sfar.entries[0].start_us == doctest::Approx(0.0));
  CHECK(sfar.entries[1].start_us == doctest::Approx(0.0));
  CHECK(sfar.makespan_us == doctest::Approx(0.2));
  CHECK(metrics(sfar).depth == 1);

  // Near pairs: min cross distance 3 um <= r_re -> serialized.
  MappedCircuit near = manual(4, 20, {0, 1, 2, 3},
                              {{GateKind::cz(), {0, 1}, {0, 1}, 0},
                               {GateKind::cz(), {2, 3}, {2, 3}, 1}});
  Schedule snear = schedule(near, spec);
  check_schedule(snear, near, spec);
  CHECK(snear.makespan_us == doctest::Approx(0.4));
  CHECK(metrics(snear).depth == 2);
}

TEST_CASE("single-qubit gates ignore restriction zones") {
  HardwareSpec spec = preset("rubidium");
  spec.rows = 1;
  spec.cols = 3;
  MappedCircuit m = manual(3, 3, {0, 1, 2},
                           {{GateKind::cz(), {0, 1}, {0, 1}, 0},
                            {GateKind::h(), {2}, {2}, 1}});
  Schedule s = schedule(m, spec);
  check_schedule(s, m, spec);
  CHECK(s.entries[1].start_us == doctest::Approx(0.0));
  CHECK(s.makespan_us == doctest::Approx(0.5));
}

TEST_CASE("idle time for a single gate register") {
  HardwareSpec spec = preset("rubidium");
  spec.rows = 1;
  spec.cols = 1;
  MappedCircuit m = manual(1, 1, {0}, {{GateKind::h(), {0}, {0}, 0}});
  Schedule s = schedule(m, spec);
  CHECK(idle_time(s, 1, IdleMode::ArityWeighted) == doctest::Approx(0.0));
  CHECK(idle_time(s, 1, IdleMode::LiteralEq15) == doctest::Approx(0.0));
}

TEST_CASE("empty schedule metrics") {
  Schedule s;
  ScheduleMetrics met = metrics(s);
  CHECK(met.makespan_us == 0.0);
  CHECK(met.depth == 0);
  CHECK(met.gate_counts.empty());
}

TEST_CASE("schedule invariants and blocking-factor monotonicity on random circuits") {
  Rng rng(29);
  int checked = 0;
  for (int iter = 0; iter < 200; ++iter) {
    int n = 2 + static_cast<int>(rng.next_below(7));
    int gates = 1 + static_cast<int>(rng.next_below(12));
    HardwareSpec spec = preset(iter % 2 ? "rubidium" : "strontium");
    spec.rows = 4;
    spec.cols = 4;
    Circuit c = lower_to_native(testutil::random_circuit(n, gates, rng, iter % 3 == 0),
                                composite_native());
    Layout l = initial_layout(c, spec, LayoutStrategy::Random, iter);
    MappedCircuit m = route(c, spec, l);

    double prev_makespan = -1.0;
    for (int k = 1; k <= 3; ++k) {
      HardwareSpec variant = spec;
      variant.r_re = variant.r_int * k;
      Schedule s = schedule(m, variant);
      CAPTURE(iter);
      CAPTURE(k);
      check_schedule(s, m, variant);
      CHECK(s.makespan_us >= prev_makespan - 1e-9);  // monotone in blocking factor
      prev_makespan = s.makespan_us;
      ++checked;
    }
  }
  CHECK(checked == 600);
}

TEST_CASE("csv timeline") {
  HardwareSpec spec = preset("rubidium");
  spec.rows = 1;
  spec.cols = 3;
  MappedCircuit m = manual(2, 3, {0, 1},
                           {{GateKind::h(), {0}, {0}, 0},
                            {GateKind::cz(), {0, 1}, {0, 1}, 1}});
  Schedule s = schedule(m, spec);
  std::string csv = schedule_to_csv(s);
  std::istringstream in(csv);
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "index,op,traps,qubits,start_us,end_us,duration_us");
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty()) ++rows;
  CHECK(rows == 2);
  CHECK(schedule_to_csv(s) == csv);
}

TEST_SUITE_END();
