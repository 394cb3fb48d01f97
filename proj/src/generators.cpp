#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "atomc/circuit.hpp"
#include "atomc/rng.hpp"

namespace atomc {

const BenchKind kAllBenchKinds[6] = {BenchKind::Ghz,        BenchKind::Wstate,
                                     BenchKind::Graphstate, BenchKind::Dj,
                                     BenchKind::Qft,        BenchKind::Twolocal};

BenchKind bench_kind_from_name(const std::string& name) {
  for (BenchKind kind : kAllBenchKinds)
    if (name == bench_kind_name(kind)) return kind;
  throw std::invalid_argument("unknown benchmark '" + name + "'");
}

const char* bench_kind_name(BenchKind kind) {
  switch (kind) {
    case BenchKind::Ghz:
      return "ghz";
    case BenchKind::Wstate:
      return "wstate";
    case BenchKind::Graphstate:
      return "graphstate";
    case BenchKind::Dj:
      return "dj";
    case BenchKind::Qft:
      return "qft";
    case BenchKind::Twolocal:
      return "twolocal";
  }
  throw std::invalid_argument("unknown benchmark kind");
}

namespace {

constexpr double kPi = std::numbers::pi;

Circuit make(const char* base, int n) {
  Circuit c;
  c.n = n;
  c.name = std::string(base) + "_" + std::to_string(n);
  return c;
}

Circuit gen_ghz(int n) {
  Circuit c = make("ghz", n);
  c.gates.push_back({GateKind::h(), {0}});
  for (int i = 0; i + 1 < n; ++i) c.gates.push_back({GateKind::cx(), {i, i + 1}});
  return c;
}

// Excitation starts on qubit 0; each step splits it onto qubit i+1 via a
// controlled-RY (expanded to ry/cx/ry/cx) followed by a chain CX.
Circuit gen_wstate(int n) {
  Circuit c = make("wstate", n);
  c.gates.push_back({GateKind::x(), {0}});
  for (int i = 0; i + 1 < n; ++i) {
    double theta = 2.0 * std::acos(std::sqrt(1.0 / (n - i)));
    c.gates.push_back({GateKind::r1q(Axis::Y, theta / 2.0), {i + 1}});
    c.gates.push_back({GateKind::cx(), {i, i + 1}});
    c.gates.push_back({GateKind::r1q(Axis::Y, -theta / 2.0), {i + 1}});
    c.gates.push_back({GateKind::cx(), {i, i + 1}});
    c.gates.push_back({GateKind::cx(), {i + 1, i}});
  }
  return c;
}

// H on every qubit, then CZ along a random 2-regular graph (disjoint cycles
// of length >= 3 over a shuffled vertex order).
Circuit gen_graphstate(int n, Rng rng) {
  Circuit c = make("graphstate", n);
  for (int q = 0; q < n; ++q) c.gates.push_back({GateKind::h(), {q}});
  std::vector<int> order(n);
  for (int q = 0; q < n; ++q) order[q] = q;
  rng.shuffle(order);
  int pos = 0;
  while (pos < n) {
    int remaining = n - pos;
    int len = 3 + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(remaining - 2)));
    if (remaining - len < 3) len = remaining;  // avoid a leftover too short for a cycle
    for (int k = 0; k < len; ++k)
      c.gates.push_back({GateKind::cz(), {order[pos + k], order[pos + (k + 1) % len]}});
    pos += len;
  }
  return c;
}

// Balanced oracle: phase kickback from a random nonempty subset of the data
// qubits onto the flipped ancilla q[n-1].
Circuit gen_dj(int n, Rng rng) {
  Circuit c = make("dj", n);
  c.gates.push_back({GateKind::x(), {n - 1}});
  for (int q = 0; q < n; ++q) c.gates.push_back({GateKind::h(), {q}});
  bool any = false;
  for (int q = 0; q + 1 < n; ++q) {
    if (rng.next_below(2) == 0) {
      c.gates.push_back({GateKind::cx(), {q, n - 1}});
      any = true;
    }
  }
  if (!any) c.gates.push_back({GateKind::cx(), {0, n - 1}});
  for (int q = 0; q + 1 < n; ++q) c.gates.push_back({GateKind::h(), {q}});
  return c;
}

Circuit gen_qft(int n) {
  Circuit c = make("qft", n);
  for (int i = 0; i < n; ++i) {
    c.gates.push_back({GateKind::h(), {i}});
    for (int j = i + 1; j < n; ++j)
      c.gates.push_back({GateKind::cp(kPi / std::pow(2.0, j - i)), {j, i}});
  }
  for (int i = 0; i < n / 2; ++i) c.gates.push_back({GateKind::swap(), {i, n - 1 - i}});
  return c;
}

Circuit gen_twolocal(int n, Rng rng) {
  constexpr int kReps = 3;
  Circuit c = make("twolocal", n);
  for (int rep = 0; rep < kReps; ++rep) {
    for (int q = 0; q < n; ++q)
      c.gates.push_back({GateKind::r1q(Axis::Y, rng.next_range(-kPi, kPi)), {q}});
    for (int q = 0; q < n; ++q) c.gates.push_back({GateKind::cx(), {q, (q + 1) % n}});
  }
  for (int q = 0; q < n; ++q)
    c.gates.push_back({GateKind::r1q(Axis::Y, rng.next_range(-kPi, kPi)), {q}});
  return c;
}

}  // namespace

Circuit generate(BenchKind kind, int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("benchmark needs at least 2 qubits");
  if (kind == BenchKind::Graphstate && n < 3)
    throw std::invalid_argument("graphstate needs at least 3 qubits");
  Rng rng(seed);
  Circuit c;
  switch (kind) {
    case BenchKind::Ghz:
      c = gen_ghz(n);
      break;
    case BenchKind::Wstate:
      c = gen_wstate(n);
      break;
    case BenchKind::Graphstate:
      c = gen_graphstate(n, rng.split(1));
      break;
    case BenchKind::Dj:
      c = gen_dj(n, rng.split(2));
      break;
    case BenchKind::Qft:
      c = gen_qft(n);
      break;
    case BenchKind::Twolocal:
      c = gen_twolocal(n, rng.split(3));
      break;
  }
  c.check();
  return c;
}

}  // namespace atomc
