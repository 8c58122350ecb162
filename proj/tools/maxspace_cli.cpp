// Command-line front end: generate, convert, solve, oracle, export-ilp,
// bench and profile subcommands over the maxspace library.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "maxspace/bench.hpp"
#include "maxspace/exact.hpp"
#include "maxspace/instances.hpp"
#include "maxspace/metaheuristics.hpp"

namespace fs = std::filesystem;
using namespace maxspace;

namespace {

constexpr int kExitUsage = 1;
constexpr int kExitBadInstance = 2;
constexpr int kExitGuard = 3;

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

Instance load_instance(const std::string& path) {
  try {
    return read_instance_file(path);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), path + ": " + e.what());
  } catch (const std::exception& e) {
    throw ParseError(0, path + ": " + e.what());
  }
}

struct GenerateArgs {
  std::string class_spec;
  std::string dims = "100,75,50";
  int count = 10;
  std::uint64_t seed = 0;
  std::string out_dir = ".";
  std::string kind = "rdwv";
};

GeneratorSpec parse_class_spec(const GenerateArgs& args) {
  GeneratorSpec spec;
  std::istringstream in(args.class_spec);
  std::string field;
  std::vector<std::string> fields;
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (fields.size() != 4)
    throw UsageError(
        "--class needs size,frequency,profit,window (e.g. "
        "small,infrequent,size-linked,no-window)");

  if (fields[0] == "small") spec.size_class = SizeClass::Small;
  else if (fields[0] == "medium") spec.size_class = SizeClass::Medium;
  else if (fields[0] == "large") spec.size_class = SizeClass::Large;
  else throw UsageError("unknown size class '" + fields[0] + "'");

  if (fields[1] == "infrequent") spec.freq_class = FreqClass::Infrequent;
  else if (fields[1] == "medium-freq") spec.freq_class = FreqClass::MediumFreq;
  else if (fields[1] == "very-frequent")
    spec.freq_class = FreqClass::VeryFrequent;
  else throw UsageError("unknown frequency class '" + fields[1] + "'");

  if (fields[2] == "size-linked") spec.profit_class = ProfitClass::SizeLinked;
  else if (fields[2] == "random") spec.profit_class = ProfitClass::Random;
  else throw UsageError("unknown profit class '" + fields[2] + "'");

  if (fields[3] == "no-window") spec.window_class = WindowClass::None;
  else if (fields[3] == "random") spec.window_class = WindowClass::Random;
  else throw UsageError("unknown window class '" + fields[3] + "'");

  std::istringstream dims(args.dims);
  char comma;
  if (!(dims >> spec.ad_count >> comma >> spec.slot_count >> comma >>
        spec.capacity))
    throw UsageError("--dims needs n,K,L");

  if (args.kind == "maxspace") spec.as_maxspace = true;
  else if (args.kind != "rdwv")
    throw UsageError("--kind must be maxspace or rdwv");
  return spec;
}

int run_generate(const GenerateArgs& args) {
  GeneratorSpec spec = parse_class_spec(args);
  fs::create_directories(args.out_dir);
  std::ostringstream manifest;
  manifest << "class: " << args.class_spec << "\n"
           << "dims: " << args.dims << "\n"
           << "kind: " << args.kind << "\n"
           << "base_seed: " << args.seed << "\n";
  for (int i = 0; i < args.count; ++i) {
    spec.seed = derive_seed(args.seed, static_cast<std::uint64_t>(i));
    const Instance instance = generate(spec);
    const std::string name = "inst_" + std::to_string(i) + ".inst";
    std::ofstream out(fs::path(args.out_dir) / name);
    write_instance(instance, out);
    manifest << name << " seed=" << spec.seed << "\n";
  }
  std::ofstream out(fs::path(args.out_dir) / "manifest.txt");
  out << manifest.str();
  std::cerr << "wrote " << args.count << " instances to " << args.out_dir
            << "\n";
  return 0;
}

SolverConfig build_config(Algo algo, const std::string& preset,
                          const Instance& instance,
                          const std::optional<double>& alpha,
                          const std::optional<int>& iterations,
                          const std::optional<int>& shake,
                          const std::optional<int>& tabu_capacity,
                          const std::optional<int>& tabu_iterations,
                          const std::optional<int>& tabu_version,
                          std::uint64_t seed, double time_limit) {
  PresetFamily family;
  if (preset == "maxspace") family = PresetFamily::MaxSpace;
  else if (preset == "rdwv") family = PresetFamily::Rdwv;
  else if (preset == "auto") family = preset_for(instance);
  else throw UsageError("--preset must be maxspace, rdwv or auto");

  SolverConfig config = tuned_config(algo, family);
  if (alpha) config.alpha = *alpha;
  if (iterations) config.grasp_iterations = *iterations;
  if (shake) config.shake_strength = *shake;
  if (tabu_capacity) config.tabu_capacity = *tabu_capacity;
  if (tabu_iterations) config.tabu_iterations = *tabu_iterations;
  if (tabu_version) {
    if (*tabu_version < 1 || *tabu_version > 3)
      throw UsageError("--tabu-version must be 1, 2 or 3");
    config.tabu_version = static_cast<TabuVersion>(*tabu_version);
  }
  config.seed = seed;
  config.time_limit_seconds = time_limit;
  config.validate();
  return config;
}

int worker_override(int fallback) {
  if (const char* env = std::getenv("MAXSPACE_WORKERS")) {
    const int workers = std::atoi(env);
    if (workers >= 1) return workers;
  }
  return fallback;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"MAXSPACE / MAXSPACE-RDWV advertisement scheduling toolkit"};
  app.require_subcommand(1);

  // generate
  GenerateArgs gen;
  auto* generate_cmd =
      app.add_subcommand("generate", "write random instances and a manifest");
  generate_cmd->add_option("--class", gen.class_spec,
                           "size,frequency,profit,window")->required();
  generate_cmd->add_option("--dims", gen.dims, "n,K,L");
  generate_cmd->add_option("--count", gen.count, "instances to write");
  generate_cmd->add_option("--seed", gen.seed, "base seed");
  generate_cmd->add_option("--out-dir", gen.out_dir, "output directory");
  generate_cmd->add_option("--kind", gen.kind,
                           "rdwv (default) or maxspace (fixed frequencies)");

  // convert
  std::string convert_in, convert_out = "-";
  bool falkenauer = false;
  auto* convert_cmd = app.add_subcommand(
      "convert", "convert a cutting-stock/bin-packing file to an instance");
  convert_cmd->add_option("input", convert_in, "source file")->required();
  convert_cmd->add_option("--out", convert_out, "output file, - for stdout");
  convert_cmd->add_flag("--falkenauer-triples", falkenauer,
                        "use the triples slot-count rule");

  // solve
  std::string solve_algo, solve_preset = "auto", solve_instance;
  std::string emit_solution;
  std::optional<double> opt_alpha;
  std::optional<int> opt_iterations, opt_shake, opt_tabu_cap, opt_tabu_iters,
      opt_tabu_version;
  std::uint64_t seed = 0;
  double time_limit = 600.0;
  auto* solve_cmd = app.add_subcommand("solve", "run one solver on one file");
  solve_cmd->add_option("--algo", solve_algo,
                        "vns | grasp | grasp-vns | grasp-tabu")->required();
  solve_cmd->add_option("--preset", solve_preset, "maxspace | rdwv | auto");
  solve_cmd->add_option("--alpha", opt_alpha, "construction greediness");
  solve_cmd->add_option("--grasp-iterations", opt_iterations, "");
  solve_cmd->add_option("--shake-strength", opt_shake, "disturbances Q");
  solve_cmd->add_option("--tabu-capacity", opt_tabu_cap, "");
  solve_cmd->add_option("--tabu-iterations", opt_tabu_iters, "");
  solve_cmd->add_option("--tabu-version", opt_tabu_version, "1 | 2 | 3");
  solve_cmd->add_option("--seed", seed, "rng seed");
  solve_cmd->add_option("--time-limit", time_limit, "seconds");
  solve_cmd->add_option("--emit-solution", emit_solution,
                        "write the schedule to this file");
  solve_cmd->add_option("instance", solve_instance, "instance file")
      ->required();

  // oracle
  std::string oracle_instance, oracle_emit;
  double oracle_guard = 1e8;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "exact optimum by exhaustion (tiny only)");
  oracle_cmd->add_option("instance", oracle_instance, "instance file")
      ->required();
  oracle_cmd->add_option("--guard", oracle_guard,
                         "largest admissible configuration count");
  oracle_cmd->add_option("--emit-solution", oracle_emit, "");

  // export-ilp
  std::string ilp_instance, ilp_which = "maxspace", ilp_out = "-";
  auto* ilp_cmd =
      app.add_subcommand("export-ilp", "write an LP-format model");
  ilp_cmd->add_option("instance", ilp_instance, "instance file")->required();
  ilp_cmd->add_option("--which", ilp_which, "maxspace | minspace | rdwv");
  ilp_cmd->add_option("--out", ilp_out, "output file, - for stdout");

  // bench
  std::vector<std::string> bench_instances;
  std::string bench_algos = "vns,grasp,grasp-vns,grasp-tabu";
  std::string bench_preset = "auto";
  std::string bench_seeds = "0";
  std::string bench_out = "bench-out";
  std::optional<int> bench_grasp_iterations;
  double bench_limit = 600.0;
  int bench_workers = 1;
  auto* bench_cmd =
      app.add_subcommand("bench", "run an algorithm x instance x seed grid");
  bench_cmd->add_option("instances", bench_instances, "instance files")
      ->required();
  bench_cmd->add_option("--algos", bench_algos, "comma-separated algorithms");
  bench_cmd->add_option("--preset", bench_preset, "maxspace | rdwv | auto");
  bench_cmd->add_option("--seeds", bench_seeds, "comma-separated seeds");
  bench_cmd->add_option("--time-limit", bench_limit, "seconds per cell");
  bench_cmd->add_option("--out-dir", bench_out, "directory for csv outputs");
  bench_cmd->add_option("--grasp-iterations", bench_grasp_iterations,
                        "override the preset iteration budget");
  bench_cmd->add_option("--workers", bench_workers,
                        "concurrent cells (or MAXSPACE_WORKERS)");

  // profile
  std::string profile_records, profile_out = "profile-out";
  auto* profile_cmd = app.add_subcommand(
      "profile", "performance/time profiles and win table from records");
  profile_cmd->add_option("records", profile_records, "records csv")
      ->required();
  profile_cmd->add_option("--out-dir", profile_out, "output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*generate_cmd) return run_generate(gen);

    if (*convert_cmd) {
      const Instance instance = from_bpplib_file(
          convert_in, falkenauer ? BpplibClassHint::FalkenauerTriples
                                 : BpplibClassHint::Other);
      if (convert_out == "-") {
        write_instance(instance, std::cout);
      } else {
        std::ofstream out(convert_out);
        write_instance(instance, out);
      }
      return 0;
    }

    if (*solve_cmd) {
      Algo algo;
      if (!algo_from_string(solve_algo, algo))
        throw UsageError("unknown --algo '" + solve_algo + "'");
      const Instance instance = load_instance(solve_instance);
      const SolverConfig config = build_config(
          algo, solve_preset, instance, opt_alpha, opt_iterations, opt_shake,
          opt_tabu_cap, opt_tabu_iters, opt_tabu_version, seed, time_limit);
      const SolveResult result = solve(instance, algo, config);
      if (!result.schedule.check_feasible().ok())
        throw std::runtime_error("solver produced an infeasible schedule");
      if (!emit_solution.empty()) {
        std::ofstream out(emit_solution);
        write_solution(result.schedule, out);
      }
      std::cerr << to_string(algo) << " on " << solve_instance << " (n="
                << instance.ad_count() << " K=" << instance.slot_count()
                << " L=" << instance.capacity() << ")\n";
      std::cout << "value=" << result.value << " time_s=" << result.time_seconds
                << " iter_best=" << result.iteration_of_best << "\n";
      return 0;
    }

    if (*oracle_cmd) {
      const Instance instance = load_instance(oracle_instance);
      try {
        const OracleResult result = brute_force(instance, oracle_guard);
        if (!oracle_emit.empty()) {
          std::ofstream out(oracle_emit);
          write_solution(result.schedule, out);
        }
        std::cout << "value=" << result.value << "\n";
        return 0;
      } catch (const SearchSpaceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitGuard;
      }
    }

    if (*ilp_cmd) {
      const Instance instance = load_instance(ilp_instance);
      IlpFormulation which;
      if (ilp_which == "maxspace") which = IlpFormulation::MaxSpace;
      else if (ilp_which == "minspace") which = IlpFormulation::MinSpace;
      else if (ilp_which == "rdwv") which = IlpFormulation::MaxSpaceRdwv;
      else throw UsageError("--which must be maxspace, minspace or rdwv");
      if (ilp_out == "-") {
        export_ilp(instance, which, std::cout);
      } else {
        std::ofstream out(ilp_out);
        export_ilp(instance, which, out);
      }
      return 0;
    }

    if (*bench_cmd) {
      std::vector<Instance> instances;
      instances.reserve(bench_instances.size());
      for (const std::string& path : bench_instances)
        instances.push_back(load_instance(path));

      GridSpec spec;
      for (std::size_t i = 0; i < instances.size(); ++i)
        spec.instances.emplace_back(
            fs::path(bench_instances[i]).filename().string(), &instances[i]);

      std::istringstream algos(bench_algos);
      std::string algo_name;
      while (std::getline(algos, algo_name, ',')) {
        Algo algo;
        if (!algo_from_string(algo_name, algo))
          throw UsageError("unknown algorithm '" + algo_name + "'");
        PresetFamily family;
        if (bench_preset == "maxspace") family = PresetFamily::MaxSpace;
        else if (bench_preset == "rdwv") family = PresetFamily::Rdwv;
        else if (bench_preset == "auto")
          family = instances.empty() ? PresetFamily::MaxSpace
                                     : preset_for(instances.front());
        else throw UsageError("--preset must be maxspace, rdwv or auto");
        SolverConfig config = tuned_config(algo, family);
        if (bench_grasp_iterations)
          config.grasp_iterations = *bench_grasp_iterations;
        spec.algorithms.push_back({algo_name, algo, config});
      }

      std::istringstream seeds(bench_seeds);
      std::string seed_token;
      while (std::getline(seeds, seed_token, ','))
        spec.seeds.push_back(std::stoull(seed_token));
      spec.time_limit_seconds = bench_limit;
      spec.workers = worker_override(bench_workers);

      fs::create_directories(bench_out);
      const auto records =
          run_grid(spec, (fs::path(bench_out) / "records.csv").string());
      std::ofstream manifest(fs::path(bench_out) / "manifest.txt");
      write_grid_manifest(spec, manifest);
      std::cerr << records.size() << " runs recorded in " << bench_out
                << "/records.csv\n";
      return 0;
    }

    if (*profile_cmd) {
      std::ifstream in(profile_records);
      if (!in)
        throw std::runtime_error("cannot open records: " + profile_records);
      const auto records = read_records_csv(in);
      fs::create_directories(profile_out);

      std::vector<std::string> excluded;
      std::ofstream perf(fs::path(profile_out) / "performance_profile.csv");
      write_profile_csv(performance_profile(records, &excluded), perf);
      for (const std::string& id : excluded)
        std::cerr << "note: instance " << id
                  << " has best value 0 and was excluded\n";

      std::ofstream times(fs::path(profile_out) / "time_profile.csv");
      write_profile_csv(time_profile(records), times);

      std::ofstream wins(fs::path(profile_out) / "win_table.csv");
      write_win_csv(win_table(records), wins);
      std::cerr << "profiles written to " << profile_out << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInstance;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGuard;
  }
  return kExitUsage;
}
