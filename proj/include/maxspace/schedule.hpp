#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxspace/core.hpp"
#include "maxspace/fenwick.hpp"
#include "maxspace/move.hpp"

namespace maxspace {

// Outcome of validating a schedule. Violations are reported in a fixed
// order — slot overflow, duplicate copy, window, frequency — and only the
// first offense found (lowest slot, then lowest ad id) is named, so failure
// output is deterministic.
struct FeasibilityReport {
  enum class Violation {
    None,
    SlotOverflow,
    DuplicateCopy,
    WindowViolation,
    FrequencyViolation,
  };

  Violation violation = Violation::None;
  int slot = 0;  // offending slot, when meaningful
  int ad = 0;    // offending ad, when meaningful
  std::string message;

  bool ok() const { return violation == Violation::None; }
};

// One assignment of ad copies to slots, the mutable solution object.
//
// The placement is kept as a dual index — per-ad sorted slot lists and
// per-slot sorted ad lists — together with cached per-slot loads, cached
// objective values and a SlackTree mirroring the loads. add_copy/remove_copy
// maintain all of those; nothing else mutates them.
//
// The low-level edits only enforce representability (indices in range, no
// duplicate copy in a slot). Capacity, window and frequency violations are
// representable on purpose: check_feasible() is the boundary validator, and
// apply_move() refuses moves that would leave the schedule infeasible.
//
// A schedule borrows its instance, which must outlive it. Single-owner
// mutable: concurrent solver runs each work on their own copies.
class Schedule {
 public:
  explicit Schedule(const Instance& instance);

  const Instance& instance() const { return *instance_; }

  bool is_scheduled(int ad) const {
    return !placement_[static_cast<std::size_t>(ad)].empty();
  }
  int copy_count(int ad) const {
    return static_cast<int>(placement_[static_cast<std::size_t>(ad)].size());
  }
  // Slots holding a copy of `ad`, ascending.
  const std::vector<int>& placement(int ad) const {
    return placement_[static_cast<std::size_t>(ad)];
  }
  // Ads present in `slot`, ascending.
  const std::vector<int>& slot_ads(int slot) const {
    return slot_ads_[static_cast<std::size_t>(slot)];
  }
  int load(int slot) const { return loads_[static_cast<std::size_t>(slot)]; }
  bool slot_contains(int slot, int ad) const;

  // Sum over ads of value * copies.
  std::int64_t primary_value() const { return primary_value_; }
  // Sum over slots of (capacity - load)^2.
  std::int64_t squared_slack() const { return squared_slack_; }

  const SlackTree& slack_tree() const { return tree_; }

  // Throws std::invalid_argument on out-of-range indices or a duplicate copy.
  void add_copy(int ad, int slot);
  void remove_copy(int ad, int slot);
  void clear();

  FeasibilityReport check_feasible() const;

  // First-fit slot choice for an unscheduled ad: scan release..deadline in
  // increasing order, keep slots where a copy fits, stop at freq_max. Empty
  // when fewer than freq_min slots fit, i.e. the ad must be discarded.
  std::vector<int> fit_slots(int ad) const;

  // Placements, loads and cached objectives all equal. The slack tree is a
  // function of the loads, so it is covered too.
  bool logically_equal(const Schedule& other) const;

 private:
  const Instance* instance_;
  std::vector<std::vector<int>> placement_;  // [ad] -> sorted slots
  std::vector<std::vector<int>> slot_ads_;   // [slot] -> sorted ads
  std::vector<int> loads_;                   // [slot]
  std::int64_t primary_value_ = 0;
  std::int64_t squared_slack_ = 0;
  SlackTree tree_;
};

// Mutates the schedule and returns the exact deltas plus undo data. Moves
// that would violate an invariant (capacity, window, duplicate, frequency
// bounds, or an Add/Chg whose first-fit cannot reach freq_min) are rejected
// with std::invalid_argument and leave the schedule unchanged.
DeltaRecord apply_move(Schedule& schedule, const Move& move);

// Exact inverse of apply: restores the schedule bit-for-bit.
void revert_move(Schedule& schedule, const DeltaRecord& record);

}  // namespace maxspace
