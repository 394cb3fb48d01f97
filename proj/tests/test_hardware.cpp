#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "atomc/hardware.hpp"
#include "atomc/rng.hpp"

using namespace atomc;

namespace {

HardwareSpec grid_spec(int rows, int cols, double r_int, double r_re = 0.0) {
  HardwareSpec s = preset("rubidium");
  s.rows = rows;
  s.cols = cols;
  s.r_int = r_int;
  s.r_re = r_re > 0.0 ? r_re : 2.0 * r_int;
  return s;
}

// Oracle: threshold graph over all trap pairs.
std::set<std::pair<int, int>> brute_force_edges(const HardwareSpec& spec) {
  std::set<std::pair<int, int>> out;
  for (int i = 0; i < spec.traps(); ++i)
    for (int j = i + 1; j < spec.traps(); ++j)
      if (distance_um(spec.trap_position(i), spec.trap_position(j)) <= spec.r_int_um())
        out.insert({i, j});
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("hardware");

TEST_CASE("effective coherence time") {
  CHECK(effective_coherence_time(2, 2) == doctest::Approx(1.0));
  CHECK(effective_coherence_time(100, 1.5) == doctest::Approx(1.477833).epsilon(1e-6));
  CHECK(effective_coherence_time(1, 10) == doctest::Approx(0.909091).epsilon(1e-6));
  CHECK(effective_coherence_time(1, 1e12) == doctest::Approx(1.0).epsilon(1e-9));
  CHECK_THROWS_AS(effective_coherence_time(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(effective_coherence_time(1, -2), std::invalid_argument);

  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    double a = rng.next_range(1e-3, 1e3);
    double b = rng.next_range(1e-3, 1e3);
    CHECK(effective_coherence_time(a, b) <= std::min(a, b));
  }
}

TEST_CASE("coupling graph on small grids") {
  CHECK(coupling_graph(grid_spec(3, 3, 1.0)).edges.size() == 12);
  CHECK(coupling_graph(grid_spec(3, 3, 1.5)).edges.size() == 20);
  CHECK(coupling_graph(grid_spec(1, 2, 0.5)).edges.empty());
}

TEST_CASE("coupling graph equals brute-force threshold graph") {
  Rng rng(11);
  for (int rows = 1; rows <= 6; ++rows) {
    for (int cols = 1; cols <= 6; ++cols) {
      for (int k = 0; k < 50; ++k) {
        HardwareSpec s = grid_spec(rows, cols, rng.next_range(0.5, 4.0));
        CouplingGraph g = coupling_graph(s);
        std::set<std::pair<int, int>> got(g.edges.begin(), g.edges.end());
        CHECK(got == brute_force_edges(s));
      }
    }
  }
}

TEST_CASE("coupling graph adjacency is symmetric and loop-free") {
  HardwareSpec s = grid_spec(4, 5, 2.0);
  CouplingGraph g = coupling_graph(s);
  for (int t = 0; t < g.num_traps; ++t) {
    for (int u : g.neighbors[t]) {
      CHECK(u != t);
      CHECK(g.has_edge(t, u));
      CHECK(g.has_edge(u, t));
    }
  }
  for (auto [a, b] : g.edges) CHECK(a < b);
}

TEST_CASE("gate mappable worst-case rule") {
  double d = 3.0;
  std::vector<Position> line3 = {{0, 0}, {0, d}, {0, 2 * d}};
  CHECK(gate_mappable(line3, 2 * d));
  CHECK_FALSE(gate_mappable(line3, 1 * d));
  std::vector<Position> diag = {{0, 0}, {d, d}};
  CHECK(gate_mappable(diag, std::sqrt(2.0) * d));
  CHECK_THROWS_AS(gate_mappable({{0, 0}}, d), std::invalid_argument);

  // Invariant under permutation of the position list.
  std::vector<Position> pts = {{0, 0}, {d, 2 * d}, {2 * d, 0}, {d, d}};
  std::sort(pts.begin(), pts.end(), [](auto a, auto b) { return a.x < b.x; });
  std::vector<Position> perm = {pts[3], pts[0], pts[2], pts[1]};
  for (double r : {1.0 * d, 2.0 * d, 3.0 * d})
    CHECK(gate_mappable(pts, r) == gate_mappable(perm, r));
}

TEST_CASE("restriction conflict boundary is inclusive") {
  double d = 3.0;
  std::vector<Position> a = {{0, 0}, {0, d}};
  std::vector<Position> b = {{0, 3 * d}, {0, 4 * d}};
  CHECK(restriction_conflict(a, b, 2 * d));        // min distance exactly 2d
  CHECK_FALSE(restriction_conflict(a, b, 1.5 * d));
  std::vector<Position> far = {{100 * d, 0}, {101 * d, 0}};
  CHECK_FALSE(restriction_conflict(a, far, 1 * d));
  CHECK(restriction_conflict(a, b, 2 * d) == restriction_conflict(b, a, 2 * d));
  std::vector<Position> overlapping = {{0, 0}, {0, 5 * d}};
  CHECK_THROWS_AS(restriction_conflict(a, overlapping, d), std::invalid_argument);
}

TEST_CASE("physics utilities") {
  CHECK(vdw_interaction(1, 1) == doctest::Approx(1.0));
  CHECK(vdw_interaction(64, 2) == doctest::Approx(1.0));
  CHECK(vdw_interaction(5, 1) == doctest::Approx(64.0 * vdw_interaction(5, 2)));
  CHECK_THROWS_AS(vdw_interaction(1, 0), std::invalid_argument);

  CHECK(blockade_radius(1) == doctest::Approx(1.0));
  CHECK(blockade_radius(64) == doctest::Approx(2.0));
  CHECK(blockade_radius(100) > blockade_radius(99));
  CHECK_THROWS_AS(blockade_radius(0), std::invalid_argument);
}

TEST_CASE("presets carry the published operating point") {
  HardwareSpec sr = preset("strontium");
  CHECK(sr.g1q.duration_us == 200.0);
  CHECK(sr.g1q.fidelity == 0.99);
  CHECK(sr.cz.duration_us == 0.1);
  CHECK(sr.cz.fidelity == 0.99);
  CHECK(sr.ccz.duration_us == 1.0);
  CHECK(sr.ccz.fidelity == 0.95);
  CHECK(sr.cccz.fidelity == 0.95);
  CHECK(sr.t1_s == 1.0);
  CHECK(sr.t2_s == 10.0);
  CHECK(sr.shuttle.v_max_um_per_us == 0.025);
  CHECK(sr.shuttle.t_trap_us == 40.0);
  CHECK(sr.shuttle.fidelity == 1.0);
  CHECK(sr.d_um == 3.0);
  CHECK(sr.r_int == 2.0);
  CHECK(sr.r_re == 2.0 * sr.r_int);

  HardwareSpec rb = preset("rubidium");
  CHECK(rb.g1q.duration_us == 0.5);
  CHECK(rb.g1q.fidelity == 0.999);
  CHECK(rb.cz.duration_us == 0.2);
  CHECK(rb.cz.fidelity == 0.995);
  CHECK(rb.ccz.fidelity == 0.98);
  CHECK(rb.cccz.fidelity == 0.95);
  CHECK(rb.t1_s == 100.0);
  CHECK(rb.t2_s == 1.5);
  CHECK(rb.shuttle.v_max_um_per_us == 0.55);
  CHECK(rb.t_eff_s() == doctest::Approx(1.47783).epsilon(1e-5));

  CHECK_THROWS_AS(preset("nosuch"), std::invalid_argument);
}

TEST_CASE("spec json round trip") {
  HardwareSpec rb = preset("rubidium");
  rb.rows = 7;
  rb.cols = 5;
  rb.idle_mode = IdleMode::LiteralEq15;
  HardwareSpec back = spec_from_json(spec_to_json(rb));
  CHECK(back.name == rb.name);
  CHECK(back.rows == 7);
  CHECK(back.cols == 5);
  CHECK(back.d_um == rb.d_um);
  CHECK(back.r_int == rb.r_int);
  CHECK(back.r_re == rb.r_re);
  CHECK(back.g1q.duration_us == rb.g1q.duration_us);
  CHECK(back.cccz.fidelity == rb.cccz.fidelity);
  CHECK(back.t1_s == rb.t1_s);
  CHECK(back.shuttle.t_trap_us == rb.shuttle.t_trap_us);
  CHECK(back.idle_mode == IdleMode::LiteralEq15);
}

TEST_CASE("spec json rejects unknown fields and accepts blocking factor") {
  HardwareSpec rb = preset("rubidium");
  std::string text = spec_to_json(rb);
  std::string with_extra = text;
  with_extra.insert(with_extra.rfind('}'), ",\"surprise\": 1");
  CHECK_THROWS(spec_from_json(with_extra));

  // "k" may replace "r_re": r_re = k * r_int.
  std::string with_k = text;
  auto pos = with_k.find("\"r_re\"");
  REQUIRE(pos != std::string::npos);
  auto end = with_k.find_first_of(",}", pos);
  with_k.replace(pos, end - pos, "\"k\": 3.0");
  HardwareSpec s = spec_from_json(with_k);
  CHECK(s.r_re == doctest::Approx(3.0 * s.r_int));
}

TEST_CASE("spec invariants are enforced") {
  HardwareSpec s = preset("rubidium");
  s.r_re = 0.5 * s.r_int;
  CHECK_THROWS_AS(s.check(), std::invalid_argument);
  s = preset("rubidium");
  s.cz.fidelity = 1.5;
  CHECK_THROWS_AS(s.check(), std::invalid_argument);
  s = preset("rubidium");
  s.g1q.duration_us = 0.0;
  CHECK_THROWS_AS(s.check(), std::invalid_argument);
  s = preset("rubidium");
  s.t2_s = -1.0;
  CHECK_THROWS_AS(s.check(), std::invalid_argument);
}

TEST_SUITE_END();
