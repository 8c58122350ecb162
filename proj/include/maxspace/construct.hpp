#pragma once

#include <cstdint>

#include "maxspace/rng.hpp"
#include "maxspace/schedule.hpp"

namespace maxspace {

enum class FirstFitOutcome { Placed, Discarded };

// Place an unscheduled ad greedily: scan release..deadline left to right,
// put a copy in every slot with room until freq_max copies are placed. When
// fewer than freq_min slots fit, the schedule is left untouched. No
// backtracking, single pass.
FirstFitOutcome first_fit(Schedule& schedule, int ad);

// Greedy cost of an ad, as an exact rational: size * freq_min over 1 for
// fixed-frequency instances, value over size otherwise.
struct CandidateCost {
  std::int64_t num = 0;
  std::int64_t den = 1;
};
CandidateCost candidate_cost(const Instance& instance, int ad);

// Randomized greedy construction. Costs are computed once up front. Each
// round recomputes min/max cost over the remaining candidates, keeps those
// with cost >= max - alpha * (max - min), draws one uniformly, tries
// first-fit and drops the ad from the pool either way. alpha = 0 is fully
// greedy, alpha = 1 a uniform random order. The threshold test runs in exact
// integer arithmetic with alpha quantized to thousandths, so equal costs
// never depend on floating-point rounding and streams reproduce bit-for-bit.
Schedule constructive(const Instance& instance, double alpha, Rng& rng);

}  // namespace maxspace
