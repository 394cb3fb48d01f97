#include "atomc/circuit.hpp"

#include <cmath>
#include <numbers>

namespace atomc {

int arity(GateTag tag) {
  switch (tag) {
    case GateTag::R1Q:
    case GateTag::H:
    case GateTag::X:
      return 1;
    case GateTag::CX:
    case GateTag::CZ:
    case GateTag::CP:
    case GateTag::SWAP:
      return 2;
    case GateTag::CCZ:
      return 3;
    case GateTag::CCCZ:
      return 4;
  }
  return 0;
}

bool entangling(GateTag tag) { return arity(tag) >= 2; }

const char* tag_name(GateTag tag) {
  switch (tag) {
    case GateTag::R1Q:
      return "r1q";
    case GateTag::H:
      return "h";
    case GateTag::X:
      return "x";
    case GateTag::CX:
      return "cx";
    case GateTag::CZ:
      return "cz";
    case GateTag::CP:
      return "cp";
    case GateTag::SWAP:
      return "swap";
    case GateTag::CCZ:
      return "ccz";
    case GateTag::CCCZ:
      return "cccz";
  }
  return "?";
}

std::string op_name(const GateKind& kind) {
  if (kind.tag == GateTag::R1Q)
    return kind.axis == Axis::X ? "rx" : kind.axis == Axis::Y ? "ry" : "rz";
  return tag_name(kind.tag);
}

GateKind GateKind::r1q(Axis axis, double angle) {
  if (!std::isfinite(angle)) throw std::invalid_argument("rotation angle must be finite");
  return {GateTag::R1Q, axis, angle};
}

GateKind GateKind::cp(double angle) {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  if (!std::isfinite(angle) || angle <= -two_pi || angle > two_pi)
    throw std::invalid_argument("cp angle must be finite and in (-2*pi, 2*pi]");
  return {GateTag::CP, Axis::Z, angle};
}

bool GateKind::operator==(const GateKind& o) const {
  if (tag != o.tag) return false;
  if (tag == GateTag::R1Q && axis != o.axis) return false;
  if (tag == GateTag::R1Q || tag == GateTag::CP) return angle == o.angle;
  return true;
}

void Circuit::check() const {
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (static_cast<int>(g.operands.size()) != arity(g.kind.tag))
      throw std::invalid_argument("gate " + std::to_string(i) + ": wrong operand count");
    for (std::size_t a = 0; a < g.operands.size(); ++a) {
      if (g.operands[a] < 0 || g.operands[a] >= n)
        throw std::invalid_argument("gate " + std::to_string(i) + ": operand out of range");
      for (std::size_t b = a + 1; b < g.operands.size(); ++b)
        if (g.operands[a] == g.operands[b])
          throw std::invalid_argument("gate " + std::to_string(i) + ": duplicate operand");
    }
  }
}

bool structurally_equal(const Circuit& a, const Circuit& b) {
  if (a.n != b.n || a.gates.size() != b.gates.size()) return false;
  for (std::size_t i = 0; i < a.gates.size(); ++i) {
    if (!(a.gates[i].kind == b.gates[i].kind)) return false;
    if (a.gates[i].operands != b.gates[i].operands) return false;
  }
  return true;
}

bool NativeSet::contains(GateTag tag) const {
  switch (tag) {
    case GateTag::R1Q:
    case GateTag::CZ:
      return true;
    case GateTag::H:
      return h;
    case GateTag::X:
      return x;
    case GateTag::CX:
      return cx;
    case GateTag::SWAP:
      return swap;
    case GateTag::CP:
      return cp_native;
    case GateTag::CCZ:
    case GateTag::CCCZ:
      return multiqubit_native;
  }
  return false;
}

namespace {

constexpr double kPi = std::numbers::pi;

// CCZ cost block: 9 one-qubit rotations and 6 CZ in a Toffoli-like phase
// pattern. This is a cost model, not a verified unitary decomposition.
void emit_ccz_block(std::vector<Gate>& out, int a, int b, int c) {
  auto rz = [&](int q, double ang) { out.push_back({GateKind::r1q(Axis::Z, ang), {q}}); };
  auto cz = [&](int p, int q) { out.push_back({GateKind::cz(), {p, q}}); };
  rz(c, kPi / 4);
  cz(b, c);
  rz(c, -kPi / 4);
  cz(a, c);
  rz(c, kPi / 4);
  cz(b, c);
  rz(c, -kPi / 4);
  cz(a, c);
  rz(b, kPi / 4);
  cz(a, b);
  rz(a, kPi / 4);
  rz(b, -kPi / 4);
  cz(a, b);
  rz(a, kPi / 4);
  rz(c, kPi / 4);
}

// CCCZ cost block: 28 one-qubit rotations and 20 CZ.
void emit_cccz_block(std::vector<Gate>& out, const std::vector<int>& q) {
  const std::pair<int, int> pairs[6] = {{2, 3}, {1, 3}, {0, 3}, {1, 2}, {0, 2}, {0, 1}};
  for (int k = 0; k < 20; ++k) {
    auto [i, j] = pairs[k % 6];
    double ang = (k % 2 == 0 ? kPi : -kPi) / 8;
    out.push_back({GateKind::r1q(Axis::Z, ang), {q[j]}});
    out.push_back({GateKind::cz(), {q[i], q[j]}});
  }
  for (int k = 0; k < 8; ++k)
    out.push_back({GateKind::r1q(Axis::Z, kPi / 8), {q[k % 4]}});
}

void lower_gate(const Gate& g, const NativeSet& s, std::vector<Gate>& out) {
  if (s.contains(g.kind.tag)) {
    out.push_back(g);
    return;
  }
  switch (g.kind.tag) {
    case GateTag::H:
      // Cost-level representative of H as a single rotation.
      out.push_back({GateKind::r1q(Axis::Y, kPi / 2), g.operands});
      return;
    case GateTag::X:
      out.push_back({GateKind::r1q(Axis::X, kPi), g.operands});
      return;
    case GateTag::CX: {
      int ctrl = g.operands[0], tgt = g.operands[1];
      lower_gate({GateKind::h(), {tgt}}, s, out);
      out.push_back({GateKind::cz(), {ctrl, tgt}});
      lower_gate({GateKind::h(), {tgt}}, s, out);
      return;
    }
    case GateTag::SWAP: {
      int a = g.operands[0], b = g.operands[1];
      lower_gate({GateKind::cx(), {a, b}}, s, out);
      lower_gate({GateKind::cx(), {b, a}}, s, out);
      lower_gate({GateKind::cx(), {a, b}}, s, out);
      return;
    }
    case GateTag::CP: {
      int ctrl = g.operands[0], tgt = g.operands[1];
      double half = g.kind.angle / 2;
      out.push_back({GateKind::r1q(Axis::Z, half), {ctrl}});
      out.push_back({GateKind::r1q(Axis::Z, half), {tgt}});
      lower_gate({GateKind::cx(), {ctrl, tgt}}, s, out);
      out.push_back({GateKind::r1q(Axis::Z, -half), {tgt}});
      lower_gate({GateKind::cx(), {ctrl, tgt}}, s, out);
      return;
    }
    case GateTag::CCZ:
      emit_ccz_block(out, g.operands[0], g.operands[1], g.operands[2]);
      return;
    case GateTag::CCCZ:
      emit_cccz_block(out, g.operands);
      return;
    default:
      throw std::invalid_argument(std::string("no lowering rule for ") + tag_name(g.kind.tag));
  }
}

}  // namespace

Circuit lower_to_native(const Circuit& c, const NativeSet& s) {
  Circuit out;
  out.n = c.n;
  out.name = c.name;
  for (const Gate& g : c.gates) lower_gate(g, s, out.gates);
  return out;
}

DepGraph build_dag(const Circuit& c) {
  DepGraph dag;
  dag.num_gates = static_cast<int>(c.gates.size());
  dag.succ.resize(dag.num_gates);
  dag.pred.resize(dag.num_gates);
  dag.indegree.assign(dag.num_gates, 0);
  std::vector<int> last(c.n, -1);
  for (int i = 0; i < dag.num_gates; ++i) {
    for (int q : c.gates[i].operands) {
      if (last[q] >= 0) {
        dag.edges.push_back({last[q], i, q});
        dag.succ[last[q]].push_back(i);
        dag.pred[i].push_back(last[q]);
        dag.indegree[i]++;
      }
      last[q] = i;
    }
  }
  return dag;
}

}  // namespace atomc
