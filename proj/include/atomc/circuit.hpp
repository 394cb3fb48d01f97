#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace atomc {

enum class Axis { X, Y, Z };

enum class GateTag { R1Q, H, X, CX, CZ, CP, SWAP, CCZ, CCCZ };

int arity(GateTag tag);
bool entangling(GateTag tag);  // arity >= 2
const char* tag_name(GateTag tag);

struct GateKind;
std::string op_name(const GateKind& kind);  // tag_name, with R1Q split by axis

struct GateKind {
  GateTag tag = GateTag::R1Q;
  Axis axis = Axis::Z;  // R1Q only
  double angle = 0.0;   // R1Q and CP, radians; CP angle in (-2*pi, 2*pi]

  static GateKind r1q(Axis axis, double angle);
  static GateKind h() { return {GateTag::H, Axis::Z, 0.0}; }
  static GateKind x() { return {GateTag::X, Axis::Z, 0.0}; }
  static GateKind cx() { return {GateTag::CX, Axis::Z, 0.0}; }
  static GateKind cz() { return {GateTag::CZ, Axis::Z, 0.0}; }
  static GateKind cp(double angle);
  static GateKind swap() { return {GateTag::SWAP, Axis::Z, 0.0}; }
  static GateKind ccz() { return {GateTag::CCZ, Axis::Z, 0.0}; }
  static GateKind cccz() { return {GateTag::CCCZ, Axis::Z, 0.0}; }

  bool operator==(const GateKind& o) const;
};

struct Gate {
  GateKind kind;
  std::vector<int> operands;  // distinct circuit-qubit indices, size = arity
};

struct Circuit {
  int n = 0;
  std::string name;
  std::vector<Gate> gates;

  // Throws std::invalid_argument if any gate has wrong arity, duplicate
  // operands, or an operand outside [0, n).
  void check() const;
};

bool structurally_equal(const Circuit& a, const Circuit& b);

struct DepEdge {
  int from = 0;
  int to = 0;
  int qubit = 0;  // the shared qubit labeling this edge
};

struct DepGraph {
  int num_gates = 0;
  std::vector<DepEdge> edges;
  std::vector<std::vector<int>> succ;
  std::vector<std::vector<int>> pred;
  std::vector<int> indegree;
};

// Hardware gate-set membership. R1Q and CZ are always native (universality).
struct NativeSet {
  bool h = false;
  bool x = false;
  bool cx = false;
  bool swap = false;
  bool cp_native = false;
  bool multiqubit_native = false;  // CCZ and CCCZ

  bool contains(GateTag tag) const;

  static NativeSet rydberg() { return {}; }  // {R1Q, CZ}
  static NativeSet rydberg_multiqubit() {
    NativeSet s;
    s.multiqubit_native = true;
    return s;
  }
};

struct ParseError : std::runtime_error {
  int line;
  int col;
  ParseError(int line, int col, const std::string& what);
};

// OpenQASM 2.0 subset: one qreg, gates {h,x,rx,ry,rz,cx,cz,cp,swap,ccz,cccz},
// numeric or pi-fraction angle literals, no classical registers.
Circuit parse_qasm(const std::string& text);

// One statement per line, OPENQASM 2.0 header; parse_qasm(emit_qasm(c)) == c.
std::string emit_qasm(const Circuit& c);

enum class BenchKind { Ghz, Wstate, Graphstate, Dj, Qft, Twolocal };

BenchKind bench_kind_from_name(const std::string& name);  // throws on unknown
const char* bench_kind_name(BenchKind kind);
extern const BenchKind kAllBenchKinds[6];

// Deterministic for fixed (kind, n, seed). Constructions are documented in
// generators.cpp. Throws when n is below the kind's minimum (2, or 3 for
// graphstate).
Circuit generate(BenchKind kind, int n, std::uint64_t seed);

// Rule-based substitution until every kind is in s: H,X -> R1Q; CX ->
// H(t)*CZ*H(t); SWAP -> 3 CX; CP -> 2 CX + 3 Rz; CCZ/CCCZ -> cost blocks of
// 9 one-qubit + 6 CZ / 28 one-qubit + 20 CZ.
Circuit lower_to_native(const Circuit& c, const NativeSet& s);

// Edge (i -> j) iff i < j share a qubit with no intermediate gate on it.
DepGraph build_dag(const Circuit& c);

}  // namespace atomc
