#pragma once

#include <string>

#include <json.hpp>

#include "atomc/fidelity.hpp"
#include "atomc/mapper.hpp"
#include "atomc/scheduler.hpp"
#include "atomc/shuttle.hpp"

namespace atomc {

nlohmann::json spec_json(const HardwareSpec& spec);
nlohmann::json gate_json(const HwGate& g);
nlohmann::json mapped_circuit_json(const MappedCircuit& m);
nlohmann::json layered_plan_json(const LayeredPlan& plan);
nlohmann::json schedule_json(const Schedule& s);
nlohmann::json shuttle_plan_json(const ShuttlePlan& plan);
nlohmann::json fidelity_report_json(const FidelityReport& r);
nlohmann::json layer_stats_json(const LayerStats& stats);

// Move-sequence file for the validate-moves front end:
// {"grid": {"x_um": [...], "y_um": [...], "d_min_um": ...},
//  "moves": [{"dx_um": [...], "dy_um": [...]}, ...]}
// Moves apply sequentially; unknown fields are rejected.
struct MoveSequence {
  AodGrid grid;
  std::vector<AodMove> moves;
};

MoveSequence move_sequence_from_json(const std::string& text);
std::string move_sequence_to_json(const MoveSequence& seq);

}  // namespace atomc
