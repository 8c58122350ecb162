#include "maxspace/construct.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace maxspace {

FirstFitOutcome first_fit(Schedule& schedule, int ad) {
  if (schedule.is_scheduled(ad))
    throw std::invalid_argument("first_fit: ad already scheduled");
  const std::vector<int> slots = schedule.fit_slots(ad);
  if (slots.empty()) return FirstFitOutcome::Discarded;
  for (int slot : slots) schedule.add_copy(ad, slot);
  return FirstFitOutcome::Placed;
}

CandidateCost candidate_cost(const Instance& instance, int ad) {
  const Ad& info = instance.ad(ad);
  if (instance.maxspace_like()) {
    return {static_cast<std::int64_t>(info.size) * info.freq_min, 1};
  }
  return {info.value, info.size};
}

namespace {

bool cost_less(const CandidateCost& a, const CandidateCost& b) {
  return a.num * b.den < b.num * a.den;
}

// cost >= max - (alpha_mil / 1000) * (max - min), cross-multiplied so the
// comparison is exact. Magnitudes stay far below 2^63 for any instance with
// sizes, values and frequencies in 32 bits' small range.
bool in_candidate_list(const CandidateCost& cost, const CandidateCost& max,
                       const CandidateCost& min, std::int64_t alpha_mil) {
  const std::int64_t lhs = 1000 * cost.num * max.den * min.den;
  const std::int64_t rhs = 1000 * max.num * cost.den * min.den -
                           alpha_mil * cost.den *
                               (max.num * min.den - min.num * max.den);
  return lhs >= rhs;
}

}  // namespace

Schedule constructive(const Instance& instance, double alpha, Rng& rng) {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("constructive: alpha must be in [0, 1]");
  const auto alpha_mil =
      static_cast<std::int64_t>(std::lround(alpha * 1000.0));

  Schedule schedule(instance);

  std::vector<CandidateCost> costs(
      static_cast<std::size_t>(instance.ad_count()) + 1);
  for (int ad = 1; ad <= instance.ad_count(); ++ad)
    costs[static_cast<std::size_t>(ad)] = candidate_cost(instance, ad);

  std::vector<int> candidates;
  candidates.reserve(static_cast<std::size_t>(instance.ad_count()));
  for (int ad = 1; ad <= instance.ad_count(); ++ad) candidates.push_back(ad);

  std::vector<int> restricted;
  while (!candidates.empty()) {
    CandidateCost min = costs[static_cast<std::size_t>(candidates.front())];
    CandidateCost max = min;
    for (int ad : candidates) {
      const CandidateCost& c = costs[static_cast<std::size_t>(ad)];
      if (cost_less(c, min)) min = c;
      if (cost_less(max, c)) max = c;
    }

    restricted.clear();
    for (int ad : candidates) {
      if (in_candidate_list(costs[static_cast<std::size_t>(ad)], max, min,
                            alpha_mil))
        restricted.push_back(ad);
    }

    const int chosen = restricted[rng.bounded(restricted.size())];
    first_fit(schedule, chosen);  // discarded ads leave no trace

    for (std::size_t i = 0; i < candidates.size(); ++i) {
      if (candidates[i] == chosen) {
        candidates.erase(candidates.begin() + static_cast<std::ptrdiff_t>(i));
        break;
      }
    }
  }

  return schedule;
}

}  // namespace maxspace
