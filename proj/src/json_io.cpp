#include <stdexcept>

#include "atomc/json_io.hpp"

namespace atomc {

using nlohmann::json;

json spec_json(const HardwareSpec& spec) { return json::parse(spec_to_json(spec)); }

json gate_json(const HwGate& g) {
  json j;
  j["op"] = op_name(g.kind);
  if (g.kind.tag == GateTag::R1Q || g.kind.tag == GateTag::CP) j["angle"] = g.kind.angle;
  j["traps"] = g.traps;
  j["qubits"] = g.qubits;
  j["src_gate"] = g.src_gate;
  return j;
}

json mapped_circuit_json(const MappedCircuit& m) {
  json j;
  j["n"] = m.n;
  j["n_swaps"] = m.n_swaps;
  j["initial_layout"] = m.initial.qubit_to_trap;
  j["final_layout"] = m.final_layout.qubit_to_trap;
  json gates = json::array();
  for (const HwGate& g : m.gates) gates.push_back(gate_json(g));
  j["gates"] = std::move(gates);
  return j;
}

json layered_plan_json(const LayeredPlan& plan) {
  json j;
  j["mode"] = plan.mode == LayeredMode::Fixed ? "fixed" : "reconfig";
  j["n"] = plan.n;
  json layers = json::array();
  for (const Layer& layer : plan.layers) {
    json l;
    l["layout"] = layer.layout.qubit_to_trap;
    json gates = json::array();
    for (const HwGate& g : layer.gates) gates.push_back(gate_json(g));
    l["gates"] = std::move(gates);
    layers.push_back(std::move(l));
  }
  j["layers"] = std::move(layers);
  json transitions = json::array();
  for (const auto& ops : plan.transitions) {
    json list = json::array();
    for (const TransitionOp& op : ops) {
      json o;
      o["qubit"] = op.qubit;
      o["from_trap"] = op.from_trap;
      o["to_trap"] = op.to_trap;
      o["distance_um"] = op.distance_um;
      o["exchange"] = op.exchange;
      if (op.exchange) o["other_qubit"] = op.other_qubit;
      list.push_back(std::move(o));
    }
    transitions.push_back(std::move(list));
  }
  j["transitions"] = std::move(transitions);
  return j;
}

json schedule_json(const Schedule& s) {
  json j;
  j["n"] = s.n;
  j["makespan_us"] = s.makespan_us;
  j["total_op_time_us"] = s.total_op_time_us;
  j["busy_us"] = s.busy_us;
  json entries = json::array();
  for (const ScheduleEntry& e : s.entries) {
    json o;
    o["op"] = e.is_shuttle ? "shuttle" : op_name(e.kind);
    if (e.is_shuttle) o["distance_um"] = e.shuttle_distance_um;
    o["traps"] = e.traps;
    o["qubits"] = e.qubits;
    o["start_us"] = e.start_us;
    o["end_us"] = e.end_us;
    o["src_gate"] = e.src_gate;
    entries.push_back(std::move(o));
  }
  j["entries"] = std::move(entries);
  return j;
}

json shuttle_plan_json(const ShuttlePlan& plan) {
  json j;
  j["n"] = plan.n;
  j["scenario"] = scenario_name(plan.scenario);
  json ops = json::array();
  for (const ShuttleOp& op : plan.ops) {
    json o;
    o["qubit"] = op.qubit;
    o["source_trap"] = op.source_trap;
    o["dest_trap"] = op.dest_trap;
    o["distance_um"] = op.distance_um;
    o["duration_us"] = op.duration_us;
    o["exchange"] = op.exchange;
    json displaced = json::array();
    for (const Displaced& d : op.displaced) {
      json dd;
      dd["qubit"] = d.qubit;
      dd["from_trap"] = d.from_trap;
      dd["to_trap"] = d.to_trap;
      displaced.push_back(std::move(dd));
    }
    o["displaced"] = std::move(displaced);
    o["seq_pos"] = op.seq_pos;
    o["consumed_swaps"] = op.consumed_swaps;
    o["layer"] = op.layer;
    ops.push_back(std::move(o));
  }
  j["ops"] = std::move(ops);
  return j;
}

json fidelity_report_json(const FidelityReport& r) {
  json j;
  j["p"] = r.p;
  j["gate_factor"] = r.gate_factor;
  j["idle_factor"] = r.idle_factor;
  j["t_idle_us"] = r.t_idle_us;
  j["makespan_us"] = r.makespan_us;
  j["n_swaps"] = r.n_swaps;
  j["gate_counts"] = r.gate_counts;
  return j;
}

json layer_stats_json(const LayerStats& stats) {
  auto breakdown = [](const IdleBreakdown& b) {
    json j;
    j["gate_us"] = b.gate_us;
    j["shuttle_motion_us"] = b.shuttle_motion_us;
    j["trap_switch_us"] = b.trap_switch_us;
    return j;
  };
  json j;
  j["layers_fixed"] = stats.layers_fixed;
  j["layers_reconfig"] = stats.layers_reconfig;
  j["reduction_ratio"] = stats.reduction_ratio;
  j["breakdown_fixed"] = breakdown(stats.breakdown_fixed);
  j["breakdown_reconfig"] = breakdown(stats.breakdown_reconfig);
  return j;
}

namespace {

void require_keys(const json& obj, const char* where,
                  std::initializer_list<const char*> keys) {
  if (!obj.is_object())
    throw std::invalid_argument(std::string(where) + ": expected an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const char* k : keys)
      if (item.key() == k) known = true;
    if (!known)
      throw std::invalid_argument(std::string(where) + ": unknown field '" +
                                  item.key() + "'");
  }
  for (const char* k : keys)
    if (!obj.contains(k))
      throw std::invalid_argument(std::string(where) + ": missing field '" +
                                  std::string(k) + "'");
}

std::vector<double> number_array(const json& arr, const char* where) {
  if (!arr.is_array())
    throw std::invalid_argument(std::string(where) + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& v : arr) {
    if (!v.is_number())
      throw std::invalid_argument(std::string(where) + ": expected an array of numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

}  // namespace

MoveSequence move_sequence_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("move sequence: ") + e.what());
  }
  require_keys(j, "root", {"grid", "moves"});
  const json& g = j["grid"];
  require_keys(g, "grid", {"x_um", "y_um", "d_min_um"});
  MoveSequence seq;
  seq.grid.x_um = number_array(g["x_um"], "grid.x_um");
  seq.grid.y_um = number_array(g["y_um"], "grid.y_um");
  if (!g["d_min_um"].is_number())
    throw std::invalid_argument("grid.d_min_um: expected a number");
  seq.grid.d_min_um = g["d_min_um"].get<double>();
  const json& moves = j["moves"];
  if (!moves.is_array()) throw std::invalid_argument("moves: expected an array");
  for (std::size_t i = 0; i < moves.size(); ++i) {
    std::string where = "moves[" + std::to_string(i) + "]";
    require_keys(moves[i], where.c_str(), {"dx_um", "dy_um"});
    AodMove mv;
    mv.dx_um = number_array(moves[i]["dx_um"], (where + ".dx_um").c_str());
    mv.dy_um = number_array(moves[i]["dy_um"], (where + ".dy_um").c_str());
    seq.moves.push_back(std::move(mv));
  }
  return seq;
}

std::string move_sequence_to_json(const MoveSequence& seq) {
  json j;
  j["grid"]["x_um"] = seq.grid.x_um;
  j["grid"]["y_um"] = seq.grid.y_um;
  j["grid"]["d_min_um"] = seq.grid.d_min_um;
  json moves = json::array();
  for (const AodMove& mv : seq.moves) {
    json m;
    m["dx_um"] = mv.dx_um;
    m["dy_um"] = mv.dy_um;
    moves.push_back(std::move(m));
  }
  j["moves"] = std::move(moves);
  return j.dump(2);
}

}  // namespace atomc
