#include "maxspace/metaheuristics.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>

namespace maxspace {

void SolverConfig::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("config: alpha must be in [0, 1]");
  if (grasp_iterations < 1)
    throw std::invalid_argument("config: grasp_iterations must be >= 1");
  if (shake_strength < 1 || shake_strength > 10)
    throw std::invalid_argument("config: shake_strength must be in [1, 10]");
  if (tabu_capacity < 5 || tabu_capacity > 100)
    throw std::invalid_argument("config: tabu_capacity must be in [5, 100]");
  if (tabu_iterations < 50 || tabu_iterations > 500)
    throw std::invalid_argument("config: tabu_iterations must be in [50, 500]");
  if (time_limit_seconds < 0.0)
    throw std::invalid_argument("config: time limit must be >= 0");
}

SolverConfig tuned_config(Algo algo, PresetFamily family) {
  SolverConfig c;
  if (family == PresetFamily::MaxSpace) {
    switch (algo) {
      case Algo::Vns:
        c.alpha = 0.2;
        c.shake_strength = 8;
        break;
      case Algo::Grasp:
        c.alpha = 0.3;
        c.grasp_iterations = 2000;
        break;
      case Algo::GraspTabu:
        c.alpha = 0.9;
        c.grasp_iterations = 2000;
        c.tabu_capacity = 55;
        c.tabu_iterations = 60;
        c.tabu_version = TabuVersion::StayUntilNoImprove;
        break;
      case Algo::GraspVns:
        c.alpha = 0.5;
        c.grasp_iterations = 1000;
        c.shake_strength = 10;
        break;
    }
  } else {
    switch (algo) {
      case Algo::Vns:
        c.alpha = 0.0;
        c.shake_strength = 5;
        break;
      case Algo::Grasp:
        c.alpha = 0.3;
        c.grasp_iterations = 2000;
        break;
      case Algo::GraspTabu:
        c.alpha = 0.2;
        c.grasp_iterations = 2000;
        c.tabu_capacity = 100;
        c.tabu_iterations = 320;
        c.tabu_version = TabuVersion::Cyclic;
        break;
      case Algo::GraspVns:
        c.alpha = 0.2;
        c.grasp_iterations = 2000;
        c.shake_strength = 9;
        break;
    }
  }
  return c;
}

PresetFamily preset_for(const Instance& instance) {
  return instance.maxspace_like() ? PresetFamily::MaxSpace
                                  : PresetFamily::Rdwv;
}

std::string to_string(Algo algo) {
  switch (algo) {
    case Algo::Vns:
      return "vns";
    case Algo::Grasp:
      return "grasp";
    case Algo::GraspVns:
      return "grasp-vns";
    case Algo::GraspTabu:
      return "grasp-tabu";
  }
  return "?";
}

bool algo_from_string(const std::string& name, Algo& out) {
  if (name == "vns") out = Algo::Vns;
  else if (name == "grasp") out = Algo::Grasp;
  else if (name == "grasp-vns") out = Algo::GraspVns;
  else if (name == "grasp-tabu") out = Algo::GraspTabu;
  else return false;
  return true;
}

MoveSignature signature_of(const Move& move) {
  struct Visitor {
    MoveSignature operator()(const AddMove& m) const {
      return {MoveKind::Add, m.ad, 0};
    }
    MoveSignature operator()(const ChgMove& m) const {
      return {MoveKind::Chg, m.ad_out, m.ad_in};
    }
    MoveSignature operator()(const RpckMove& m) const {
      return {MoveKind::Rpck, m.ad_a, m.ad_b};
    }
    MoveSignature operator()(const AddCpyMove& m) const {
      return {MoveKind::AddCpy, m.ad, 0};
    }
    MoveSignature operator()(const MvMove& m) const {
      return {MoveKind::Mv, m.ad, 0};
    }
  };
  return std::visit(Visitor{}, move);
}

bool TabuList::contains(const MoveSignature& sig) const {
  return std::find(entries_.begin(), entries_.end(), sig) != entries_.end();
}

void TabuList::push(const MoveSignature& sig) {
  entries_.push_back(sig);
  while (entries_.size() > capacity_) entries_.pop_front();
}

namespace {

constexpr Phase kPhases[2] = {Phase::Minimize, Phase::Maximize};

// Best strictly-improving move of one neighborhood; ties keep the earliest
// in enumeration order.
std::optional<MoveEval> best_improving(const Schedule& s,
                                       NeighborhoodKind kind, Phase phase,
                                       const EnumOptions& options) {
  std::optional<MoveEval> best;
  std::int64_t best_score = 0;
  for_each_move(s, kind, options, [&](const MoveEval& eval) {
    const std::int64_t sc = score(eval, phase);
    if (sc > best_score) {
      best_score = sc;
      best = eval;
    }
    return true;
  });
  return best;
}

struct TabuPick {
  MoveEval eval;
  std::int64_t sc;
};

// Best admissible move of one neighborhood under the tabu rule. A tabu move
// is admissible only when aspiration is on and it would beat best_value.
std::optional<TabuPick> best_admissible(const Schedule& s,
                                        NeighborhoodKind kind, Phase phase,
                                        const TabuList& tabu,
                                        const SolverConfig& config,
                                        std::int64_t best_value,
                                        const EnumOptions& options) {
  std::optional<TabuPick> best;
  for_each_move(s, kind, options, [&](const MoveEval& eval) {
    if (tabu.contains(signature_of(eval.move))) {
      if (!config.tabu_aspiration) return true;
      if (s.primary_value() + eval.primary_delta <= best_value) return true;
    }
    const std::int64_t sc = score(eval, phase);
    if (!best || sc > best->sc) best = TabuPick{eval, sc};
    return true;
  });
  return best;
}

EnumOptions enum_options(const SolverConfig& config) {
  return EnumOptions{config.chg_pair_budget};
}

// One tabu phase: returns whether the incumbent improved.
bool tabu_phase(Schedule& current, Schedule& best, Phase phase,
                TabuList& tabu, const SolverConfig& config, Rng& rng,
                const Deadline& deadline,
                const std::vector<NeighborhoodKind>& kinds) {
  const EnumOptions options = enum_options(config);
  bool improved_any = false;
  int stall = 0;
  int iteration = 0;
  std::size_t stay_index = 0;
  while (!deadline.expired()) {
    const int spent =
        config.tabu_count_all_iterations ? iteration : stall;
    if (spent >= config.tabu_iterations) break;
    ++iteration;

    NeighborhoodKind kind;
    switch (config.tabu_version) {
      case TabuVersion::Random:
        kind = kinds[rng.bounded(kinds.size())];
        break;
      case TabuVersion::StayUntilNoImprove:
        kind = kinds[stay_index];
        break;
      case TabuVersion::Cyclic:
        kind = kinds[static_cast<std::size_t>(iteration - 1) % kinds.size()];
        break;
      default:
        kind = kinds[0];
        break;
    }

    bool improved_now = false;
    const auto pick = best_admissible(current, kind, phase, tabu, config,
                                      best.primary_value(), options);
    if (pick) {
      apply_move(current, pick->eval.move);
      tabu.push(signature_of(pick->eval.move));
      if (current.primary_value() > best.primary_value()) {
        best = current;
        improved_now = true;
        improved_any = true;
      }
    }
    if (improved_now) {
      stall = 0;
    } else {
      ++stall;
      if (config.tabu_version == TabuVersion::StayUntilNoImprove)
        stay_index = (stay_index + 1) % kinds.size();
    }
  }
  return improved_any;
}

void shake(Schedule& s, NeighborhoodKind kind, int strength, Rng& rng,
           const EnumOptions& options) {
  for (int i = 0; i < strength; ++i) {
    const auto moves = enumerate(s, kind, options);
    if (moves.empty()) continue;
    apply_move(s, moves[rng.bounded(moves.size())].move);
  }
}

// Best-improvement descent across all neighborhoods at once, ranking moves
// by (primary delta, phase-adjusted slack delta) so value gains always win
// over layout gains. Runs to a local optimum per phase, alternating while a
// full cycle still raises the primary value.
void best_improve_descent(Schedule& s, const SolverConfig& config,
                          const Deadline& deadline) {
  const auto kinds = neighborhood_order(s.instance());
  const EnumOptions options = enum_options(config);
  bool cycle_improved = true;
  while (cycle_improved && !deadline.expired()) {
    const std::int64_t cycle_start = s.primary_value();
    for (Phase phase : kPhases) {
      while (!deadline.expired()) {
        std::optional<MoveEval> best;
        std::pair<std::int64_t, std::int64_t> best_rank{0, 0};
        for (NeighborhoodKind kind : kinds) {
          for_each_move(s, kind, options, [&](const MoveEval& eval) {
            const std::pair<std::int64_t, std::int64_t> rank{
                eval.primary_delta, score(eval, phase) - eval.primary_delta};
            if (rank > best_rank) {
              best_rank = rank;
              best = eval;
            }
            return true;
          });
        }
        if (!best) break;
        apply_move(s, best->move);
      }
    }
    cycle_improved = s.primary_value() > cycle_start;
  }
}

}  // namespace

Schedule tabu_search(const Schedule& start, const SolverConfig& config,
                     Rng& rng, const Deadline& deadline) {
  Schedule current = start;
  Schedule best = start;
  TabuList tabu(static_cast<std::size_t>(config.tabu_capacity));
  const auto kinds = neighborhood_order(start.instance());
  bool cycle_improved = true;
  while (cycle_improved && !deadline.expired()) {
    cycle_improved = false;
    for (Phase phase : kPhases) {
      if (deadline.expired()) break;
      if (tabu_phase(current, best, phase, tabu, config, rng, deadline,
                     kinds))
        cycle_improved = true;
    }
  }
  return best;
}

Schedule vnd(Schedule start, Phase phase, const SolverConfig& config,
             const Deadline& deadline) {
  const auto kinds = neighborhood_order(start.instance());
  const EnumOptions options = enum_options(config);
  std::size_t k = 0;
  while (k < kinds.size() && !deadline.expired()) {
    const auto best = best_improving(start, kinds[k], phase, options);
    if (best) {
      apply_move(start, best->move);
      k = 0;
    } else {
      ++k;
    }
  }
  return start;
}

SolveResult vns_improve(Schedule start, const SolverConfig& config, Rng& rng,
                        const Deadline& deadline) {
  const auto kinds = neighborhood_order(start.instance());
  Schedule best = start;
  int best_cycle = 0;
  int cycle = 0;
  bool cycle_improved = true;
  while (cycle_improved && !deadline.expired()) {
    cycle_improved = false;
    ++cycle;
    for (Phase phase : kPhases) {
      if (deadline.expired()) break;
      start = vnd(std::move(start), phase, config, deadline);
      if (start.primary_value() > best.primary_value()) {
        best = start;
        best_cycle = cycle;
        cycle_improved = true;
      }
      std::size_t k = 0;
      while (k < kinds.size() && !deadline.expired()) {
        Schedule shaken = start;
        shake(shaken, kinds[k], config.shake_strength, rng,
              enum_options(config));
        shaken = vnd(std::move(shaken), phase, config, deadline);
        if (shaken.primary_value() > start.primary_value()) {
          start = std::move(shaken);
          k = 0;
        } else {
          ++k;
        }
        if (start.primary_value() > best.primary_value()) {
          best = start;
          best_cycle = cycle;
          cycle_improved = true;
        }
      }
    }
  }
  return {std::move(best), 0, 0.0, best_cycle};
}

namespace {

double elapsed_seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                       since)
      .count();
}

}  // namespace

SolveResult vns(const Instance& instance, const SolverConfig& config) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();
  const Deadline deadline(config.time_limit_seconds);
  Rng rng(config.seed);
  Schedule initial = constructive(instance, config.alpha, rng);
  SolveResult result{std::move(initial), 0, 0.0, 0};
  if (!deadline.expired())
    result = vns_improve(std::move(result.schedule), config, rng, deadline);
  result.value = result.schedule.primary_value();
  result.time_seconds = elapsed_seconds(started);
  return result;
}

SolveResult grasp(const Instance& instance, const SolverConfig& config,
                  GraspInner inner) {
  config.validate();
  const auto started = std::chrono::steady_clock::now();
  const Deadline deadline(config.time_limit_seconds);

  std::optional<Schedule> best;
  int best_iteration = 0;
  for (int iteration = 1; iteration <= config.grasp_iterations; ++iteration) {
    Rng rng(derive_seed(config.seed, static_cast<std::uint64_t>(iteration)));
    Schedule s = constructive(instance, config.alpha, rng);
    if (!deadline.expired()) {
      switch (inner) {
        case GraspInner::BestImprove:
          best_improve_descent(s, config, deadline);
          break;
        case GraspInner::Vns:
          s = vns_improve(std::move(s), config, rng, deadline).schedule;
          break;
        case GraspInner::Tabu:
          s = tabu_search(s, config, rng, deadline);
          break;
      }
    }
    if (!best || s.primary_value() > best->primary_value()) {
      best = std::move(s);
      best_iteration = iteration;
    }
    if (deadline.expired()) break;
  }

  SolveResult result{std::move(*best), 0, 0.0, best_iteration};
  result.value = result.schedule.primary_value();
  result.time_seconds = elapsed_seconds(started);
  return result;
}

SolveResult solve(const Instance& instance, Algo algo,
                  const SolverConfig& config) {
  switch (algo) {
    case Algo::Vns:
      return vns(instance, config);
    case Algo::Grasp:
      return grasp(instance, config, GraspInner::BestImprove);
    case Algo::GraspVns:
      return grasp(instance, config, GraspInner::Vns);
    case Algo::GraspTabu:
      return grasp(instance, config, GraspInner::Tabu);
  }
  throw std::invalid_argument("solve: unknown algorithm");
}

}  // namespace maxspace
