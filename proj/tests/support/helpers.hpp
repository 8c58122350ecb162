#pragma once

#include <cstdint>
#include <vector>

#include "maxspace/construct.hpp"
#include "maxspace/core.hpp"
#include "maxspace/exact.hpp"
#include "maxspace/neighborhoods.hpp"
#include "maxspace/rng.hpp"
#include "maxspace/schedule.hpp"

namespace maxspace::testing {

// The 7-ad example instance used across the suites:
//   sizes 6 4 2 3 1 1 5, frequencies 3 2 1 2 1 1 1, K = 4, L = 6.
// Its optimum fills all four slots completely (value 24).
inline Instance seven_ads() {
  std::vector<Ad> ads;
  const int sizes[] = {6, 4, 2, 3, 1, 1, 5};
  const int freqs[] = {3, 2, 1, 2, 1, 1, 1};
  for (int i = 0; i < 7; ++i) {
    Ad ad;
    ad.size = sizes[i];
    ad.value = sizes[i];
    ad.freq_min = ad.freq_max = freqs[i];
    ad.release = 1;
    ad.deadline = 4;
    ads.push_back(ad);
  }
  return Instance(ProblemKind::MaxSpace, 4, 6, std::move(ads));
}

inline Instance tiny_maxspace(int ad_count, int slot_count, int capacity,
                              std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Ad> ads;
  for (int i = 0; i < ad_count; ++i) {
    Ad ad;
    ad.size = static_cast<int>(rng.uniform_int(1, capacity));
    ad.value = ad.size;
    ad.freq_min = ad.freq_max =
        static_cast<int>(rng.uniform_int(1, std::min(slot_count, 3)));
    ad.release = 1;
    ad.deadline = slot_count;
    ads.push_back(ad);
  }
  return Instance(ProblemKind::MaxSpace, slot_count, capacity,
                  std::move(ads));
}

inline Instance tiny_rdwv(int ad_count, int slot_count, int capacity,
                          std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Ad> ads;
  for (int i = 0; i < ad_count; ++i) {
    Ad ad;
    ad.size = static_cast<int>(rng.uniform_int(1, capacity));
    ad.value = static_cast<int>(rng.uniform_int(1, 10));
    ad.freq_min = static_cast<int>(rng.uniform_int(1, std::min(slot_count, 2)));
    ad.freq_max =
        ad.freq_min +
        static_cast<int>(rng.uniform_int(0, std::min(slot_count, 2)));
    ad.release = static_cast<int>(
        rng.uniform_int(1, std::max(1, slot_count - ad.freq_min)));
    ad.deadline = static_cast<int>(
        rng.uniform_int(std::min(ad.release + ad.freq_min - 1, slot_count),
                        slot_count));
    ads.push_back(ad);
  }
  return Instance(ProblemKind::MaxSpaceRdwv, slot_count, capacity,
                  std::move(ads));
}

// Mixed tiny instance (n <= 8, K <= 4, L <= 10) whose enumeration bound fits
// the oracle guard; retries seeds until one qualifies.
inline Instance tiny_for_oracle(std::uint64_t seed, bool* was_maxspace = nullptr) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    const std::uint64_t s = derive_seed(seed, attempt);
    Rng dims(s);
    const int n = static_cast<int>(dims.uniform_int(1, 8));
    const int k = static_cast<int>(dims.uniform_int(1, 4));
    const int l = static_cast<int>(dims.uniform_int(2, 10));
    const bool maxspace = dims.bounded(2) == 0;
    Instance instance = maxspace ? tiny_maxspace(n, k, l, derive_seed(s, 1))
                                 : tiny_rdwv(n, k, l, derive_seed(s, 2));
    if (brute_force_bound(instance) <= 1e8) {
      if (was_maxspace) *was_maxspace = maxspace;
      return instance;
    }
  }
}

// A feasible schedule with some texture: greedy construction followed by a
// few random feasible moves.
inline Schedule random_schedule(const Instance& instance, std::uint64_t seed,
                                int extra_moves = 6) {
  Rng rng(seed);
  Schedule s = constructive(instance, 0.5, rng);
  const auto kinds = neighborhood_order(instance);
  for (int i = 0; i < extra_moves; ++i) {
    const NeighborhoodKind kind = kinds[rng.bounded(kinds.size())];
    const auto moves = enumerate(s, kind);
    if (moves.empty()) continue;
    apply_move(s, moves[rng.bounded(moves.size())].move);
  }
  return s;
}

inline std::int64_t recomputed_primary(const Schedule& s) {
  std::int64_t total = 0;
  for (int ad = 1; ad <= s.instance().ad_count(); ++ad)
    total += static_cast<std::int64_t>(s.instance().ad(ad).value) *
             s.copy_count(ad);
  return total;
}

inline std::int64_t recomputed_slack(const Schedule& s) {
  std::int64_t total = 0;
  for (int slot = 1; slot <= s.instance().slot_count(); ++slot) {
    const std::int64_t gap = s.instance().capacity() - s.load(slot);
    total += gap * gap;
  }
  return total;
}

}  // namespace maxspace::testing
