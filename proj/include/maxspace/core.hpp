#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Domain types for the MAXSPACE family of advertisement-scheduling problems.
// A banner has K slots of capacity L; ad i occupies size_i units per copy and
// pays value_i per scheduled copy. All ids and slot indices are 1-based.

namespace maxspace {

enum class ProblemKind { MaxSpace, MaxSpaceRdwv };

struct Ad {
  int id = 0;        // 1..n, assigned by the owning instance
  int size = 1;      // space units per copy (s_i)
  int value = 1;     // profit per scheduled copy (v_i)
  int freq_min = 1;  // least copies a scheduled ad must have
  int freq_max = 1;  // most copies an ad may have
  int release = 1;   // first admissible slot
  int deadline = 1;  // last admissible slot

  int window_len() const { return deadline - release + 1; }
};

// Immutable problem instance. Construction validates every ad against the
// slot count and, for kind MaxSpace, the fixed-frequency restrictions
// (freq_min = freq_max, value = size, release = 1, deadline = K); violations
// throw std::invalid_argument naming the offending ad and rule.
class Instance {
 public:
  Instance(ProblemKind kind, int slot_count, int capacity, std::vector<Ad> ads);

  ProblemKind kind() const { return kind_; }
  int slot_count() const { return slot_count_; }
  int capacity() const { return capacity_; }
  int ad_count() const { return static_cast<int>(ads_.size()); }
  const Ad& ad(int id) const { return ads_[static_cast<std::size_t>(id - 1)]; }
  const std::vector<Ad>& ads() const { return ads_; }

  // True when every ad satisfies the fixed-frequency restrictions, whatever
  // the declared kind. Solvers dispatch on this structural test, not on the
  // kind tag, so re-labelling a MaxSpace instance as MaxSpaceRdwv changes
  // nothing about how it is solved.
  bool maxspace_like() const { return maxspace_like_; }

  // Same ads re-labelled as MaxSpaceRdwv. Only valid for MaxSpace instances.
  Instance as_rdwv() const;

 private:
  ProblemKind kind_;
  int slot_count_;
  int capacity_;
  std::vector<Ad> ads_;
  bool maxspace_like_;
};

}  // namespace maxspace
