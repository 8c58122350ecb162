#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <string>

#include "maxspace/construct.hpp"
#include "maxspace/neighborhoods.hpp"
#include "maxspace/rng.hpp"
#include "maxspace/schedule.hpp"

namespace maxspace {

enum class Algo { Vns, Grasp, GraspVns, GraspTabu };
enum class GraspInner { BestImprove, Vns, Tabu };

// How Tabu Search picks the neighborhood each iteration.
enum class TabuVersion {
  Random = 1,            // uniform draw every iteration
  StayUntilNoImprove = 2,  // keep the current one while it improves
  Cyclic = 3,            // next one every iteration
};

struct SolverConfig {
  double alpha = 0.3;            // construction greediness, in [0, 1]
  int grasp_iterations = 2000;
  int shake_strength = 8;        // disturbances per shake, in [1, 10]
  int tabu_capacity = 55;        // signatures remembered, in [5, 100]
  int tabu_iterations = 60;      // stop budget, in [50, 500]
  TabuVersion tabu_version = TabuVersion::StayUntilNoImprove;
  bool tabu_aspiration = true;   // allow tabu moves that set a new best
  bool tabu_count_all_iterations = false;  // budget counts every iteration
                                           // instead of non-improving ones
  double time_limit_seconds = 600.0;
  std::uint64_t seed = 0;
  std::size_t chg_pair_budget = 0;  // see EnumOptions

  void validate() const;  // throws std::invalid_argument out of range
};

enum class PresetFamily { MaxSpace, Rdwv };

// Tuned parameter sets shipped with the solver, one per algorithm and
// problem family.
SolverConfig tuned_config(Algo algo, PresetFamily family);
PresetFamily preset_for(const Instance& instance);

std::string to_string(Algo algo);
bool algo_from_string(const std::string& name, Algo& out);

// Wall-clock budget shared down a solver call tree.
class Deadline {
 public:
  static Deadline unlimited() { return Deadline(); }
  explicit Deadline(double seconds)
      : limited_(true),
        end_(std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(seconds))) {}

  bool expired() const {
    return limited_ && std::chrono::steady_clock::now() >= end_;
  }

 private:
  Deadline() = default;
  bool limited_ = false;
  std::chrono::steady_clock::time_point end_{};
};

// Move memory: a bounded FIFO of (kind, ads) signatures. Slots and copy
// indices are deliberately not part of the signature.
struct MoveSignature {
  MoveKind kind;
  int ad_a = 0;
  int ad_b = 0;
  bool operator==(const MoveSignature&) const = default;
};
MoveSignature signature_of(const Move& move);

class TabuList {
 public:
  explicit TabuList(std::size_t capacity) : capacity_(capacity) {}
  bool contains(const MoveSignature& sig) const;
  void push(const MoveSignature& sig);
  std::size_t size() const { return entries_.size(); }

 private:
  std::size_t capacity_;
  std::deque<MoveSignature> entries_;
};

struct SolveResult {
  Schedule schedule;
  std::int64_t value = 0;
  double time_seconds = 0.0;
  // GRASP: iteration that last improved the incumbent. VNS: phase cycle that
  // did. Constructive-only results report 0.
  int iteration_of_best = 0;
};

// Tabu search over all neighborhoods, phases alternating while a full
// minimize+maximize cycle still improves the best primary value. Within a
// phase the best non-tabu move of the selected neighborhood is taken (tabu
// ones too when aspiration is on and they beat the incumbent); the phase
// ends after `tabu_iterations` iterations without a new incumbent.
Schedule tabu_search(const Schedule& start, const SolverConfig& config,
                     Rng& rng, const Deadline& deadline);

// Deterministic descent: best strictly-improving move of neighborhood k,
// restart at the first neighborhood after every success, stop when the last
// one is exhausted.
Schedule vnd(Schedule start, Phase phase, const SolverConfig& config,
             const Deadline& deadline);

// Shake-and-descend around vnd, phases alternating as in tabu_search.
// Shaking applies `shake_strength` moves drawn uniformly from the current
// neighborhood's stream (empty streams skip silently); the result is kept
// only when the primary value strictly improves.
SolveResult vns_improve(Schedule start, const SolverConfig& config, Rng& rng,
                        const Deadline& deadline);
SolveResult vns(const Instance& instance, const SolverConfig& config);

SolveResult grasp(const Instance& instance, const SolverConfig& config,
                  GraspInner inner);

// Algo dispatcher used by the CLI and the benchmark harness.
SolveResult solve(const Instance& instance, Algo algo,
                  const SolverConfig& config);

}  // namespace maxspace
