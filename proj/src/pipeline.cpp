#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "atomc/json_io.hpp"
#include "atomc/pipeline.hpp"

namespace atomc {

RunScenario run_scenario_from_name(const std::string& name) {
  if (name == "gate") return RunScenario::Gate;
  if (name == "shuttle-parallel") return RunScenario::ShuttleParallel;
  if (name == "shuttle-sequential") return RunScenario::ShuttleSequential;
  throw std::invalid_argument("unknown scenario '" + name +
                              "' (expected gate, shuttle-parallel, shuttle-sequential)");
}

const char* run_scenario_name(RunScenario s) {
  switch (s) {
    case RunScenario::Gate:
      return "gate";
    case RunScenario::ShuttleParallel:
      return "shuttle-parallel";
    case RunScenario::ShuttleSequential:
      return "shuttle-sequential";
  }
  return "?";
}

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

}  // namespace

HardwareSpec resolve_hardware(const RunConfig& cfg) {
  HardwareSpec spec;
  if (cfg.hw == "rubidium") {
    spec = preset("rubidium");
  } else if (cfg.hw == "strontium") {
    spec = preset("strontium");
  } else {
    std::filesystem::path path(cfg.hw);
    if (!std::filesystem::exists(path) && path.is_relative()) {
      if (const char* dir = std::getenv("ATOMC_HW_DIR")) {
        std::filesystem::path alt = std::filesystem::path(dir) / path;
        if (std::filesystem::exists(alt)) path = alt;
      }
    }
    spec = spec_from_json(read_file(path.string()));
  }
  if (cfg.rows_override) spec.rows = *cfg.rows_override;
  if (cfg.cols_override) spec.cols = *cfg.cols_override;
  if (cfg.rint_override) spec.r_int = *cfg.rint_override;
  if (cfg.rre_override) spec.r_re = *cfg.rre_override;
  if (cfg.idle_mode_override) spec.idle_mode = *cfg.idle_mode_override;
  spec.check();
  return spec;
}

Circuit load_input(const RunConfig& cfg) {
  bool has_qasm = !cfg.qasm_path.empty();
  bool has_bench = !cfg.bench.empty();
  if (has_qasm == has_bench)
    throw std::invalid_argument("exactly one of a QASM file or a benchmark name is required");
  if (has_qasm) {
    Circuit c = parse_qasm(read_file(cfg.qasm_path));
    if (c.name.empty())
      c.name = std::filesystem::path(cfg.qasm_path).stem().string();
    return c;
  }
  return generate(bench_kind_from_name(cfg.bench), cfg.bench_n, cfg.seed);
}

CompileResult run_compile(const RunConfig& cfg) {
  CompileResult res;
  res.spec = resolve_hardware(cfg);
  res.original = load_input(cfg);

  NativeSet ns;
  ns.h = true;
  ns.x = true;
  ns.cx = true;
  ns.swap = false;  // SWAPs lower to CX so routing sees a swap-free circuit
  ns.cp_native = cfg.native_cp;
  ns.multiqubit_native = cfg.native_multiqubit;
  res.lowered = lower_to_native(res.original, ns);
  res.lowered.name = res.original.name;

  Layout layout = initial_layout(res.lowered, res.spec, cfg.layout, cfg.seed);
  RouteParams params;
  params.seed = cfg.seed;
  res.mapped = route(res.lowered, res.spec, layout, params);

  if (cfg.scenario == RunScenario::Gate) {
    res.sched = schedule(res.mapped, res.spec);
  } else {
    res.plan = shuttles_from_swaps(res.mapped, res.spec);
    Scenario sc = cfg.scenario == RunScenario::ShuttleParallel ? Scenario::Parallel
                                                               : Scenario::Sequential;
    res.plan.scenario = sc;
    res.sched = schedule_shuttle_plan(res.plan, res.mapped, res.spec, sc);
    res.used_shuttle = true;
  }
  res.fid = success_probability(res.sched, res.spec, res.lowered.n);
  res.schedule_csv = schedule_to_csv(res.sched);

  nlohmann::json rep;
  rep["hardware"] = spec_json(res.spec);
  rep["config"]["hw"] = cfg.hw;
  rep["config"]["layout"] = layout_strategy_name(cfg.layout);
  rep["config"]["scenario"] = run_scenario_name(cfg.scenario);
  rep["config"]["seed"] = cfg.seed;
  rep["config"]["idle_mode"] = idle_mode_name(res.spec.idle_mode);
  rep["config"]["native_cp"] = cfg.native_cp;
  rep["config"]["native_multiqubit"] = cfg.native_multiqubit;
  rep["input"]["name"] = res.original.name;
  rep["input"]["n"] = res.original.n;
  rep["input"]["gates"] = res.original.gates.size();
  rep["input"]["source"] = cfg.qasm_path.empty() ? "bench:" + cfg.bench : cfg.qasm_path;
  rep["lowered"]["gates"] = res.lowered.gates.size();
  rep["mapped"]["gates"] = res.mapped.gates.size();
  rep["mapped"]["n_swaps"] = res.mapped.n_swaps;
  rep["verify"]["violations"] = verify(res.mapped, res.spec).size();
  if (res.used_shuttle) {
    double dist = 0.0;
    int consumed = 0;
    for (const ShuttleOp& op : res.plan.ops) {
      dist += op.distance_um;
      consumed += op.consumed_swaps;
    }
    rep["shuttle_plan"]["scenario"] = scenario_name(res.plan.scenario);
    rep["shuttle_plan"]["ops"] = res.plan.ops.size();
    rep["shuttle_plan"]["consumed_swaps"] = consumed;
    rep["shuttle_plan"]["total_distance_um"] = dist;
    rep["shuttle_plan"]["layers"] =
        res.plan.ops.empty() ? 0 : res.plan.ops.back().layer + 1;
  }
  ScheduleMetrics met = metrics(res.sched);
  rep["schedule"]["makespan_us"] = res.sched.makespan_us;
  rep["schedule"]["depth"] = met.depth;
  rep["schedule"]["entries"] = res.sched.entries.size();
  rep["schedule"]["total_op_time_us"] = res.sched.total_op_time_us;
  rep["schedule"]["gate_counts"] = met.gate_counts;
  rep["fidelity"] = fidelity_report_json(res.fid);
  res.report_json = rep.dump(2) + "\n";
  return res;
}

TradeoffKind tradeoff_kind_from_name(const std::string& name) {
  if (name == "teff-sweep") return TradeoffKind::TeffSweep;
  if (name == "velocity") return TradeoffKind::Velocity;
  if (name == "decomposition") return TradeoffKind::Decomposition;
  if (name == "shuttle-vs-gate") return TradeoffKind::ShuttleVsGate;
  if (name == "layer-reduction") return TradeoffKind::LayerReduction;
  throw std::invalid_argument(
      "unknown tradeoff '" + name +
      "' (expected teff-sweep, velocity, decomposition, shuttle-vs-gate, layer-reduction)");
}

const char* tradeoff_kind_name(TradeoffKind kind) {
  switch (kind) {
    case TradeoffKind::TeffSweep:
      return "teff-sweep";
    case TradeoffKind::Velocity:
      return "velocity";
    case TradeoffKind::Decomposition:
      return "decomposition";
    case TradeoffKind::ShuttleVsGate:
      return "shuttle-vs-gate";
    case TradeoffKind::LayerReduction:
      return "layer-reduction";
  }
  return "?";
}

namespace {

std::string teff_sweep_csv(const RunConfig& cfg) {
  RunConfig gate_cfg = cfg;
  gate_cfg.scenario = RunScenario::Gate;
  CompileResult res = run_compile(gate_cfg);
  double t_idle = res.fid.t_idle_us;
  int n_swaps = res.mapped.n_swaps;
  double f_cx = cx_composite(res.spec).f_cx;
  double swap_factor = std::exp(3.0 * n_swaps * std::log(f_cx));
  Crossover cross = crossover_teff(t_idle, n_swaps, f_cx);

  std::string out = "t_eff_us,idle_factor,swap_factor,f_swap,crossover_t_eff_us\n";
  const int points = 49;  // log-spaced over [1e3, 1e9] us
  for (int i = 0; i < points; ++i) {
    double t_eff = 1e3 * std::pow(10.0, 6.0 * i / (points - 1));
    double idle = std::exp(-t_idle / t_eff);
    out += fmt(t_eff) + ',' + fmt(idle) + ',' + fmt(swap_factor) + ',' +
           fmt(idle * swap_factor) + ',';
    if (cross.finite) out += fmt(cross.t_eff_us);
    out += '\n';
  }
  return out;
}

std::string velocity_csv(const HardwareSpec& spec) {
  std::string out = "n_idle,dist_um,t_sh_star_us,v_um_per_us,feasible\n";
  for (int n = 1; n <= 1000; ++n) {
    VelocityResult r = required_velocity(n, spec, spec.d_um);
    out += std::to_string(n) + ',' + fmt(spec.d_um) + ',' + fmt(r.t_sh_star_us) +
           ',' + fmt(r.v_um_per_us) + ',' + (r.feasible ? '1' : '0') + '\n';
  }
  return out;
}

std::string decomposition_csv(const HardwareSpec& spec) {
  std::string out =
      "gate,count_1q,count_cz,p_native,p_decomposed,breakeven_fidelity,native_preferred\n";
  for (GateTag tag : {GateTag::CCZ, GateTag::CCCZ}) {
    BreakevenReport rep = decomposition_breakeven(tag, spec);
    out += std::string(tag_name(tag)) + ',' + std::to_string(rep.count_1q) + ',' +
           std::to_string(rep.count_cz) + ',' + fmt(rep.p_native) + ',' +
           fmt(rep.p_decomposed) + ',' + fmt(rep.breakeven_fidelity) + ',' +
           (rep.native_preferred ? '1' : '0') + '\n';
  }
  return out;
}

std::string shuttle_vs_gate_csv(const HardwareSpec& spec) {
  double t_swap = op_duration_us(GateKind::swap(), spec);
  double t_sh = shuttle_duration(spec.d_um, spec);
  std::string out = "n_idle,t_swap_us,t_shuttle_us,f_swap,f_shuttle\n";
  for (int n = 0; n <= 1000; ++n) {
    out += std::to_string(n) + ',' + fmt(t_swap) + ',' + fmt(t_sh) + ',' +
           fmt(f_swap(1, n * t_swap, spec)) + ',' + fmt(f_shuttle(n * t_sh, spec)) +
           '\n';
  }
  return out;
}

std::string layer_reduction_csv(const RunConfig& cfg) {
  HardwareSpec spec = resolve_hardware(cfg);
  Circuit c = load_input(cfg);
  NativeSet ns;
  ns.h = true;
  ns.x = true;
  ns.cx = true;
  ns.cp_native = cfg.native_cp;
  ns.multiqubit_native = cfg.native_multiqubit;
  Circuit lowered = lower_to_native(c, ns);
  LayeredPlan fixed = route_layered(lowered, spec, LayeredMode::Fixed, cfg.seed);
  LayeredPlan reconfig = route_layered(lowered, spec, LayeredMode::Reconfig, cfg.seed);
  LayerStats st = shuttle_layer_stats(fixed, reconfig, spec);
  std::string out =
      "circuit,n,layers_fixed,layers_reconfig,reduction_ratio,"
      "gate_us_fixed,motion_us_fixed,switch_us_fixed,"
      "gate_us_reconfig,motion_us_reconfig,switch_us_reconfig\n";
  out += (c.name.empty() ? std::string("circuit") : c.name) + ',' +
         std::to_string(c.n) + ',' + std::to_string(st.layers_fixed) + ',' +
         std::to_string(st.layers_reconfig) + ',' + fmt(st.reduction_ratio) + ',' +
         fmt(st.breakdown_fixed.gate_us) + ',' +
         fmt(st.breakdown_fixed.shuttle_motion_us) + ',' +
         fmt(st.breakdown_fixed.trap_switch_us) + ',' +
         fmt(st.breakdown_reconfig.gate_us) + ',' +
         fmt(st.breakdown_reconfig.shuttle_motion_us) + ',' +
         fmt(st.breakdown_reconfig.trap_switch_us) + '\n';
  return out;
}

}  // namespace

std::string tradeoff_csv(TradeoffKind kind, const RunConfig& cfg) {
  switch (kind) {
    case TradeoffKind::TeffSweep:
      return teff_sweep_csv(cfg);
    case TradeoffKind::Velocity:
      return velocity_csv(resolve_hardware(cfg));
    case TradeoffKind::Decomposition:
      return decomposition_csv(resolve_hardware(cfg));
    case TradeoffKind::ShuttleVsGate:
      return shuttle_vs_gate_csv(resolve_hardware(cfg));
    case TradeoffKind::LayerReduction:
      return layer_reduction_csv(cfg);
  }
  throw std::invalid_argument("unknown tradeoff kind");
}

}  // namespace atomc
