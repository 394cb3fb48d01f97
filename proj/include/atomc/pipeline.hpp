#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "atomc/circuit.hpp"
#include "atomc/fidelity.hpp"
#include "atomc/hardware.hpp"
#include "atomc/mapper.hpp"
#include "atomc/scheduler.hpp"
#include "atomc/shuttle.hpp"

namespace atomc {

enum class RunScenario { Gate, ShuttleParallel, ShuttleSequential };

RunScenario run_scenario_from_name(const std::string& name);
const char* run_scenario_name(RunScenario s);

// Resolved command configuration; exactly one of qasm_path / bench is set.
struct RunConfig {
  std::string qasm_path;
  std::string bench;
  int bench_n = 0;

  std::string hw = "rubidium";  // preset name or spec file path
  std::optional<double> rint_override;
  std::optional<double> rre_override;
  std::optional<int> rows_override;
  std::optional<int> cols_override;
  std::optional<IdleMode> idle_mode_override;

  LayoutStrategy layout = LayoutStrategy::Affinity;
  RunScenario scenario = RunScenario::Gate;
  std::uint64_t seed = 0;
  bool native_multiqubit = false;
  bool native_cp = false;
};

// Preset name, else a spec file path searched relative to the working
// directory and then ATOMC_HW_DIR; applies the overrides.
HardwareSpec resolve_hardware(const RunConfig& cfg);

Circuit load_input(const RunConfig& cfg);

struct CompileResult {
  HardwareSpec spec;
  Circuit original;
  Circuit lowered;
  MappedCircuit mapped;
  ShuttlePlan plan;        // shuttle scenarios only
  bool used_shuttle = false;
  Schedule sched;
  FidelityReport fid;
  std::string report_json;   // full report, embeds the resolved spec
  std::string schedule_csv;
};

CompileResult run_compile(const RunConfig& cfg);

enum class TradeoffKind { TeffSweep, Velocity, Decomposition, ShuttleVsGate, LayerReduction };

TradeoffKind tradeoff_kind_from_name(const std::string& name);
const char* tradeoff_kind_name(TradeoffKind kind);

// One CSV document per kind; column sets are documented in the README and
// stable for a given toolkit version. Deterministic for a fixed config.
std::string tradeoff_csv(TradeoffKind kind, const RunConfig& cfg);

}  // namespace atomc
