#pragma once

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "maxspace/core.hpp"
#include "maxspace/schedule.hpp"

namespace maxspace {

class SearchSpaceTooLarge : public std::runtime_error {
 public:
  SearchSpaceTooLarge(double bound, double guard)
      : std::runtime_error("search space of about " + std::to_string(bound) +
                           " configurations exceeds the guard of " +
                           std::to_string(guard)),
        bound_(bound) {}
  double bound() const { return bound_; }

 private:
  double bound_;
};

// Upper bound on the number of placement configurations the oracle would
// enumerate: the product over ads of (1 + the number of window-slot subsets
// of admissible sizes). Saturates at 1e18.
double brute_force_bound(const Instance& instance);

struct OracleResult {
  std::int64_t value;
  Schedule schedule;
};

// Exhaustive optimum of the primary value. Ads are branched in id order,
// copy counts 0 then freq_min..freq_max, slot subsets in lexicographic
// order. Value ties keep the placement whose per-ad slot lists compare
// lexicographically smallest, with an unscheduled ad sorting before any
// scheduled one, so the result is deterministic. Throws SearchSpaceTooLarge
// when the bound above exceeds `guard`.
OracleResult brute_force(const Instance& instance, double guard = 1e8);

// LP-format model export. MaxSpace and MaxSpaceRdwv maximize the packed
// size resp. value with binary x_i_j / y_i variables; MinSpace minimizes the
// peak load F with every ad forcibly scheduled and needs fixed-frequency
// input. Variable-frequency instances get a pair of frequency-link rows
// (wmin y <= sum x <= wmax y); fixed frequencies collapse them to one
// equality. Window complements are pinned with explicit x_i_j = 0 rows.
enum class IlpFormulation { MaxSpace, MinSpace, MaxSpaceRdwv };

void export_ilp(const Instance& instance, IlpFormulation which,
                std::ostream& out);

// FNV-1a of the canonical serialization; stamped into LP headers so a model
// file can be traced back to its instance.
std::string instance_hash_hex(const Instance& instance);

}  // namespace maxspace
