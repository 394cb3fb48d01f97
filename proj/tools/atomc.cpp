#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "atomc/json_io.hpp"
#include "atomc/pipeline.hpp"

namespace {

using namespace atomc;

struct CommonArgs {
  RunConfig cfg;
  std::string layout = "affinity";
  std::string idle_mode;
  std::string scenario = "gate";
  double rint = 0.0, rre = 0.0;
  int rows = 0, cols = 0;
};

void add_hardware_options(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--hw", args.cfg.hw,
                  "hardware preset (rubidium, strontium) or spec JSON path; "
                  "relative paths also resolve against $ATOMC_HW_DIR")
      ->capture_default_str();
  cmd->add_option("--rint", args.rint, "interaction radius override, in units of the spacing");
  cmd->add_option("--rre", args.rre, "restriction radius override, in units of the spacing");
  cmd->add_option("--rows", args.rows, "grid rows override");
  cmd->add_option("--cols", args.cols, "grid cols override");
  cmd->add_option("--idle-mode", args.idle_mode,
                  "idle accounting: arity_weighted or literal_eq15");
}

void add_input_options(CLI::App* cmd, CommonArgs& args) {
  auto* qasm = cmd->add_option("--qasm", args.cfg.qasm_path, "input OpenQASM 2.0 file");
  auto* bench =
      cmd->add_option("--bench", args.cfg.bench,
                      "benchmark generator: ghz, wstate, graphstate, dj, qft, twolocal");
  auto* n = cmd->add_option("--n", args.cfg.bench_n, "benchmark qubit count");
  qasm->excludes(bench);
  bench->needs(n);
  cmd->add_option("--seed", args.cfg.seed, "seed for generation, layout, and routing")
      ->capture_default_str();
}

RunConfig finish_config(const CommonArgs& args) {
  RunConfig cfg = args.cfg;
  if (args.rint > 0.0) cfg.rint_override = args.rint;
  if (args.rre > 0.0) cfg.rre_override = args.rre;
  if (args.rows > 0) cfg.rows_override = args.rows;
  if (args.cols > 0) cfg.cols_override = args.cols;
  if (!args.idle_mode.empty()) cfg.idle_mode_override = idle_mode_from_name(args.idle_mode);
  cfg.layout = layout_strategy_from_name(args.layout);
  cfg.scenario = run_scenario_from_name(args.scenario);
  return cfg;
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

int run_validate_moves(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  MoveSequence seq = move_sequence_from_json(text);
  seq.grid.check();
  std::printf("grid ok: %zu x columns, %zu y rows, d_min %g um\n", seq.grid.x_um.size(),
              seq.grid.y_um.size(), seq.grid.d_min_um);
  AodGrid grid = seq.grid;
  for (std::size_t i = 0; i < seq.moves.size(); ++i) {
    auto violations = validate_move(grid, seq.moves[i]);
    if (!violations.empty()) {
      for (const MoveViolation& v : violations)
        std::printf("move %zu: VIOLATION %s\n", i, v.message.c_str());
      return 1;
    }
    grid = apply_move(grid, seq.moves[i]);
    std::printf("move %zu: ok\n", i);
  }
  std::printf("all %zu moves valid\n", seq.moves.size());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"compilation toolkit for grid-based neutral-atom processors"};
  app.require_subcommand(1);

  CommonArgs compile_args;
  std::string compile_out, compile_csv;
  CLI::App* compile = app.add_subcommand("compile", "map, route, schedule, and price a circuit");
  add_input_options(compile, compile_args);
  add_hardware_options(compile, compile_args);
  compile->add_option("--layout", compile_args.layout,
                      "initial layout strategy: identity, random, affinity")
      ->capture_default_str();
  compile
      ->add_option("--scenario", compile_args.scenario,
                   "swap execution: gate, shuttle-parallel, shuttle-sequential")
      ->capture_default_str();
  compile->add_flag("--native-cp", compile_args.cfg.native_cp,
                    "treat cp as a native phase gate instead of lowering it");
  compile->add_flag("--native-multiqubit", compile_args.cfg.native_multiqubit,
                    "treat ccz/cccz as native pulses instead of lowering them");
  compile->add_option("--out", compile_out, "report JSON path (default: stdout)");
  compile->add_option("--csv", compile_csv, "also write the schedule timeline CSV here");

  CommonArgs tradeoff_args;
  std::string tradeoff_kind, tradeoff_out;
  CLI::App* tradeoff = app.add_subcommand("tradeoff", "emit one tradeoff study as CSV");
  tradeoff
      ->add_option("kind", tradeoff_kind,
                   "teff-sweep, velocity, decomposition, shuttle-vs-gate, layer-reduction")
      ->required();
  add_input_options(tradeoff, tradeoff_args);
  add_hardware_options(tradeoff, tradeoff_args);
  tradeoff->add_option("--layout", tradeoff_args.layout, "initial layout strategy")
      ->capture_default_str();
  tradeoff->add_flag("--native-cp", tradeoff_args.cfg.native_cp,
                     "treat cp as a native phase gate");
  tradeoff->add_flag("--native-multiqubit", tradeoff_args.cfg.native_multiqubit,
                     "treat ccz/cccz as native pulses");
  tradeoff->add_option("--out", tradeoff_out, "CSV path (default: stdout)");

  std::string moves_path;
  CLI::App* validate = app.add_subcommand("validate-moves",
                                          "check an AOD move sequence file for "
                                          "crossing and spacing violations");
  validate->add_option("file", moves_path, "move sequence JSON")->required();

  CommonArgs bench_args;
  std::string bench_out;
  CLI::App* bench = app.add_subcommand("bench", "emit a generated benchmark as OpenQASM");
  bench
      ->add_option("kind", bench_args.cfg.bench,
                   "ghz, wstate, graphstate, dj, qft, twolocal")
      ->required();
  bench->add_option("--n", bench_args.cfg.bench_n, "qubit count")->required();
  bench->add_option("--seed", bench_args.cfg.seed, "generator seed")->capture_default_str();
  bench->add_option("--out", bench_out, "QASM path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compile->parsed()) {
      CompileResult res = run_compile(finish_config(compile_args));
      if (!compile_csv.empty()) write_output(compile_csv, res.schedule_csv);
      write_output(compile_out, res.report_json);
      return 0;
    }
    if (tradeoff->parsed()) {
      RunConfig cfg = finish_config(tradeoff_args);
      write_output(tradeoff_out, tradeoff_csv(tradeoff_kind_from_name(tradeoff_kind), cfg));
      return 0;
    }
    if (validate->parsed()) return run_validate_moves(moves_path);
    if (bench->parsed()) {
      Circuit c = generate(bench_kind_from_name(bench_args.cfg.bench),
                           bench_args.cfg.bench_n, bench_args.cfg.seed);
      write_output(bench_out, emit_qasm(c));
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const RoutingError& e) {
    std::cerr << "error: routing failed: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
