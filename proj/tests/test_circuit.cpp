#include <doctest.h>

#include <map>
#include <set>

#include "atomc/circuit.hpp"
#include "atomc/rng.hpp"
#include "test_util.hpp"

using namespace atomc;

namespace {

std::map<GateTag, int> count_by_tag(const Circuit& c) {
  std::map<GateTag, int> out;
  for (const Gate& g : c.gates) out[g.kind.tag]++;
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("circuit");

TEST_CASE("parse single-gate and empty programs") {
  Circuit c = parse_qasm("OPENQASM 2.0;\nqreg q[2];\ncz q[0],q[1];\n");
  CHECK(c.n == 2);
  REQUIRE(c.gates.size() == 1);
  CHECK(c.gates[0].kind.tag == GateTag::CZ);
  CHECK(c.gates[0].operands == std::vector<int>{0, 1});

  Circuit empty = parse_qasm("qreg q[1];");
  CHECK(empty.n == 1);
  CHECK(empty.gates.empty());
}

TEST_CASE("parse accepts the full gate subset and pi expressions") {
  Circuit c = parse_qasm(
      "OPENQASM 2.0;\n"
      "include \"qelib1.inc\";\n"
      "qreg q[4];\n"
      "h q[0];\n"
      "x q[1];\n"
      "rx(0.5) q[0];\n"
      "ry(-1.25e-1) q[1];\n"
      "rz(pi/2) q[2];\n"
      "cp(3*pi/4) q[0],q[1];\n"
      "cx q[0],q[1];\n"
      "swap q[2],q[3];\n"
      "ccz q[0],q[1],q[2];\n"
      "cccz q[0],q[1],q[2],q[3];\n");
  REQUIRE(c.gates.size() == 10);
  CHECK(c.gates[2].kind.tag == GateTag::R1Q);
  CHECK(c.gates[2].kind.axis == Axis::X);
  CHECK(c.gates[4].kind.angle == doctest::Approx(3.14159265358979323846 / 2));
  CHECK(c.gates[5].kind.angle == doctest::Approx(3 * 3.14159265358979323846 / 4));
  CHECK(c.gates[9].operands.size() == 4);
}

TEST_CASE("parse errors carry line and column") {
  // Unknown gate name.
  try {
    parse_qasm("qreg q[2];\nfoo q[0];\n");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("foo") != std::string::npos);
  }
  // Operand out of range.
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\ncz q[0],q[2];\n"), ParseError);
  // Duplicate operand within one gate.
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\ncz q[0],q[0];\n"), ParseError);
  // Syntax error.
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\ncz q[0] q[1];\n"), ParseError);
  // Second qreg.
  CHECK_THROWS_AS(parse_qasm("qreg q[2];\nqreg r[2];\n"), ParseError);
  // Gate before qreg.
  CHECK_THROWS_AS(parse_qasm("h q[0];\nqreg q[2];\n"), ParseError);
}

TEST_CASE("emit produces one statement per line with header") {
  Circuit c;
  c.n = 2;
  c.gates.push_back({GateKind::cz(), {0, 1}});
  std::string text = emit_qasm(c);
  CHECK(text.find("OPENQASM 2.0;") == 0);
  CHECK(text.find("qreg q[2];") != std::string::npos);
  CHECK(text.find("cz q[0],q[1];") != std::string::npos);

  Circuit empty;
  empty.n = 3;
  std::string header_only = emit_qasm(empty);
  CHECK(header_only.find("qreg q[3];") != std::string::npos);
  CHECK(header_only.find("cz") == std::string::npos);
}

TEST_CASE("parse-emit identity on all generators") {
  for (BenchKind kind : kAllBenchKinds) {
    for (int n = 2; n <= 16; ++n) {
      if (kind == BenchKind::Graphstate && n < 3) continue;
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Circuit c = generate(kind, n, seed);
        Circuit back = parse_qasm(emit_qasm(c));
        CAPTURE(bench_kind_name(kind));
        CAPTURE(n);
        CAPTURE(seed);
        CHECK(structurally_equal(c, back));
      }
    }
  }
}

TEST_CASE("generator shapes") {
  Circuit ghz = generate(BenchKind::Ghz, 3, 0);
  REQUIRE(ghz.gates.size() == 3);
  CHECK(ghz.gates[0].kind.tag == GateTag::H);
  CHECK(ghz.gates[0].operands == std::vector<int>{0});
  CHECK(ghz.gates[1].kind.tag == GateTag::CX);
  CHECK(ghz.gates[1].operands == std::vector<int>{0, 1});
  CHECK(ghz.gates[2].operands == std::vector<int>{1, 2});

  auto graph5 = count_by_tag(generate(BenchKind::Graphstate, 5, 3));
  CHECK(graph5[GateTag::H] == 5);
  CHECK(graph5[GateTag::CZ] == 5);  // a 2-regular graph on n nodes has n edges

  auto qft3 = count_by_tag(generate(BenchKind::Qft, 3, 0));
  CHECK(qft3[GateTag::H] == 3);
  CHECK(qft3[GateTag::CP] == 3);
  CHECK(qft3[GateTag::SWAP] == 1);

  auto dj6 = count_by_tag(generate(BenchKind::Dj, 6, 1));
  CHECK(dj6[GateTag::H] == 6 + 5);  // initial layer + closing layer on data qubits
  CHECK(dj6[GateTag::X] == 1);
  CHECK(dj6[GateTag::CX] >= 1);  // balanced oracle is never empty

  auto two8 = count_by_tag(generate(BenchKind::Twolocal, 8, 0));
  CHECK(two8[GateTag::R1Q] == 4 * 8);  // reps+1 rotation layers
  CHECK(two8[GateTag::CX] == 3 * 8);   // ring entangler per rep

  auto w4 = count_by_tag(generate(BenchKind::Wstate, 4, 0));
  CHECK(w4[GateTag::X] == 1);
  CHECK(w4[GateTag::CX] == 3 * 3);     // 2 per controlled-RY + 1 chain CX
  CHECK(w4[GateTag::R1Q] == 2 * 3);
}

TEST_CASE("graphstate edges form a 2-regular graph") {
  for (int n : {3, 4, 7, 12}) {
    for (std::uint64_t seed : {0ULL, 5ULL}) {
      Circuit c = generate(BenchKind::Graphstate, n, seed);
      std::vector<int> degree(n, 0);
      std::set<std::pair<int, int>> edges;
      for (const Gate& g : c.gates) {
        if (g.kind.tag != GateTag::CZ) continue;
        int a = std::min(g.operands[0], g.operands[1]);
        int b = std::max(g.operands[0], g.operands[1]);
        CHECK(edges.insert({a, b}).second);  // no duplicate edge
        degree[a]++;
        degree[b]++;
      }
      for (int q = 0; q < n; ++q) CHECK(degree[q] == 2);
    }
  }
}

TEST_CASE("generators are deterministic and validate n") {
  for (BenchKind kind : kAllBenchKinds) {
    Circuit a = generate(kind, 9, 42);
    Circuit b = generate(kind, 9, 42);
    CHECK(structurally_equal(a, b));
  }
  CHECK_FALSE(structurally_equal(generate(BenchKind::Twolocal, 6, 1),
                                 generate(BenchKind::Twolocal, 6, 2)));
  CHECK_THROWS_AS(generate(BenchKind::Ghz, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(generate(BenchKind::Graphstate, 2, 0), std::invalid_argument);
}

TEST_CASE("lowering rules") {
  NativeSet rydberg = NativeSet::rydberg();

  Circuit cx;
  cx.n = 2;
  cx.gates.push_back({GateKind::cx(), {0, 1}});
  Circuit low = lower_to_native(cx, rydberg);
  REQUIRE(low.gates.size() == 3);
  CHECK(low.gates[0].kind.tag == GateTag::R1Q);
  CHECK(low.gates[0].operands == std::vector<int>{1});
  CHECK(low.gates[1].kind.tag == GateTag::CZ);
  CHECK(low.gates[1].operands == std::vector<int>{0, 1});
  CHECK(low.gates[2].operands == std::vector<int>{1});

  Circuit ccz;
  ccz.n = 3;
  ccz.gates.push_back({GateKind::ccz(), {0, 1, 2}});
  Circuit kept = lower_to_native(ccz, NativeSet::rydberg_multiqubit());
  REQUIRE(kept.gates.size() == 1);
  CHECK(kept.gates[0].kind.tag == GateTag::CCZ);

  auto ccz_counts = count_by_tag(lower_to_native(ccz, rydberg));
  CHECK(ccz_counts[GateTag::R1Q] == 9);
  CHECK(ccz_counts[GateTag::CZ] == 6);

  Circuit cccz;
  cccz.n = 4;
  cccz.gates.push_back({GateKind::cccz(), {0, 1, 2, 3}});
  auto cccz_counts = count_by_tag(lower_to_native(cccz, rydberg));
  CHECK(cccz_counts[GateTag::R1Q] == 28);
  CHECK(cccz_counts[GateTag::CZ] == 20);

  // SWAP -> 3 CX -> 3*(2 R1Q + CZ).
  Circuit sw;
  sw.n = 2;
  sw.gates.push_back({GateKind::swap(), {0, 1}});
  auto sw_counts = count_by_tag(lower_to_native(sw, rydberg));
  CHECK(sw_counts[GateTag::R1Q] == 6);
  CHECK(sw_counts[GateTag::CZ] == 3);

  // CP -> 2 CX + 3 Rz; with CX further lowered: 7 R1Q + 2 CZ.
  Circuit cp;
  cp.n = 2;
  cp.gates.push_back({GateKind::cp(1.0), {0, 1}});
  auto cp_counts = count_by_tag(lower_to_native(cp, rydberg));
  CHECK(cp_counts[GateTag::R1Q] == 7);
  CHECK(cp_counts[GateTag::CZ] == 2);

  NativeSet with_cp = rydberg;
  with_cp.cp_native = true;
  auto cp_kept = count_by_tag(lower_to_native(cp, with_cp));
  CHECK(cp_kept[GateTag::CP] == 1);
}

TEST_CASE("lowering preserves qubit count and target membership") {
  Rng rng(3);
  NativeSet rydberg = NativeSet::rydberg();
  for (int i = 0; i < 20; ++i) {
    int n = 3 + static_cast<int>(rng.next_below(6));
    Circuit c = testutil::random_circuit(n, 25, rng, true);
    Circuit low = lower_to_native(c, rydberg);
    low.check();
    CHECK(low.n == c.n);
    for (const Gate& g : low.gates) CHECK(rydberg.contains(g.kind.tag));
  }
}

TEST_CASE("dag examples") {
  Circuit disjoint;
  disjoint.n = 4;
  disjoint.gates.push_back({GateKind::cz(), {0, 1}});
  disjoint.gates.push_back({GateKind::cz(), {2, 3}});
  CHECK(build_dag(disjoint).edges.empty());

  DepGraph chain = build_dag(generate(BenchKind::Ghz, 3, 0));
  REQUIRE(chain.edges.size() == 2);
  CHECK(chain.edges[0].from == 0);
  CHECK(chain.edges[0].to == 1);
  CHECK(chain.edges[0].qubit == 0);
  CHECK(chain.edges[1].from == 1);
  CHECK(chain.edges[1].to == 2);
  CHECK(chain.edges[1].qubit == 1);
}

TEST_CASE("dag per-qubit chains match brute force") {
  Rng rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    int n = 2 + static_cast<int>(rng.next_below(6));
    Circuit c = testutil::random_circuit(n, 2 + static_cast<int>(rng.next_below(29)), rng, true);
    DepGraph dag = build_dag(c);
    CHECK(dag.num_gates == static_cast<int>(c.gates.size()));

    // Oracle: for each qubit, gates touching it in order form a chain of
    // edges labeled by that qubit; no other edges exist.
    std::set<std::tuple<int, int, int>> expected;
    for (int q = 0; q < n; ++q) {
      int prev = -1;
      for (int i = 0; i < dag.num_gates; ++i) {
        bool touches = false;
        for (int u : c.gates[i].operands) touches |= (u == q);
        if (!touches) continue;
        if (prev >= 0) expected.insert({prev, i, q});
        prev = i;
      }
    }
    std::set<std::tuple<int, int, int>> got;
    for (const DepEdge& e : dag.edges) {
      CHECK(e.from < e.to);  // acyclic by index order
      got.insert({e.from, e.to, e.qubit});
    }
    CHECK(got == expected);
  }
}

TEST_SUITE_END();
