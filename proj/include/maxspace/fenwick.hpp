#pragma once

#include <cassert>
#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

namespace maxspace {

// Range-query structures over the K slots of one schedule:
//   - a binary indexed tree over free space (capacity - load), answering
//     "can t copies of size s possibly fit in slots [lo, hi]" in O(log K);
//   - min- and max-trees over slot loads (a flat complete binary tree),
//     answering range-min/range-max and the leftmost least-loaded slot in
//     O(log K), with exact O(log K) point updates in both directions.
//
// Every read or write of a tree or value cell bumps touches(), so tests can
// bound the work a query performs: all queries stay within
// 4 * ceil(log2 K) + 8 node touches. Loads above the capacity are accepted
// (the mirrored schedule may be infeasible while it is being validated);
// free space then goes negative in the sum tree, which is harmless.
class SlackTree {
 public:
  SlackTree(int slot_count, int capacity)
      : k_(slot_count), cap_(capacity) {
    assert(slot_count >= 1 && capacity >= 1);
    leaves_ = 1;
    while (leaves_ < k_) leaves_ <<= 1;
    load_.assign(static_cast<std::size_t>(k_) + 1, 0);
    sum_.assign(static_cast<std::size_t>(k_) + 1, 0);
    // All slots empty: node i of the sum tree spans lowbit(i) slots.
    for (int i = 1; i <= k_; ++i)
      sum_[static_cast<std::size_t>(i)] =
          static_cast<std::int64_t>(cap_) * lowbit(i);
    min_.assign(static_cast<std::size_t>(leaves_) * 2, kMinPad);
    max_.assign(static_cast<std::size_t>(leaves_) * 2, kMaxPad);
    for (int j = 1; j <= k_; ++j) {
      min_[static_cast<std::size_t>(leaf(j))] = 0;
      max_[static_cast<std::size_t>(leaf(j))] = 0;
    }
    for (int i = leaves_ - 1; i >= 1; --i) {
      pull(min_, i, /*take_max=*/false);
      pull(max_, i, /*take_max=*/true);
    }
  }

  int size() const { return k_; }
  int capacity() const { return cap_; }
  int load(int slot) const { return load_[static_cast<std::size_t>(slot)]; }

  void point_update(int slot, int new_load) {
    assert(1 <= slot && slot <= k_);
    assert(new_load >= 0);
    const int old_load = load_[static_cast<std::size_t>(slot)];
    if (new_load == old_load) return;
    load_[static_cast<std::size_t>(slot)] = new_load;
    ++touches_;

    const std::int64_t delta = static_cast<std::int64_t>(old_load) - new_load;
    for (int i = slot; i <= k_; i += lowbit(i)) {
      sum_[static_cast<std::size_t>(i)] += delta;
      ++touches_;
    }

    int node = leaf(slot);
    min_[static_cast<std::size_t>(node)] = new_load;
    max_[static_cast<std::size_t>(node)] = new_load;
    touches_ += 2;
    for (node >>= 1; node >= 1; node >>= 1) {
      pull(min_, node, /*take_max=*/false);
      pull(max_, node, /*take_max=*/true);
    }
  }

  // Sum of (capacity - load) over slots [lo, hi].
  std::int64_t range_free(int lo, int hi) const {
    assert(1 <= lo && lo <= hi && hi <= k_);
    return prefix_sum(hi) - prefix_sum(lo - 1);
  }

  // Necessary condition for placing `copies` copies of size `size` into
  // [lo, hi]: total free space suffices. Not sufficient, since a copy also
  // needs a single slot with room; callers still run the per-slot fit.
  bool can_place(int copies, int size, int lo, int hi) const {
    return range_free(lo, hi) >=
           static_cast<std::int64_t>(copies) * static_cast<std::int64_t>(size);
  }

  int range_min_load(int lo, int hi) const {
    assert(1 <= lo && lo <= hi && hi <= k_);
    int best = kMinPad;
    for (int l = leaf(lo), r = leaf(hi) + 1; l < r; l >>= 1, r >>= 1) {
      if (l & 1) {
        best = std::min(best, min_[static_cast<std::size_t>(l++)]);
        ++touches_;
      }
      if (r & 1) {
        best = std::min(best, min_[static_cast<std::size_t>(--r)]);
        ++touches_;
      }
    }
    return best;
  }

  int range_max_load(int lo, int hi) const {
    assert(1 <= lo && lo <= hi && hi <= k_);
    int best = kMaxPad;
    for (int l = leaf(lo), r = leaf(hi) + 1; l < r; l >>= 1, r >>= 1) {
      if (l & 1) {
        best = std::max(best, max_[static_cast<std::size_t>(l++)]);
        ++touches_;
      }
      if (r & 1) {
        best = std::max(best, max_[static_cast<std::size_t>(--r)]);
        ++touches_;
      }
    }
    return best;
  }

  // Leftmost slot of minimum load in [lo, hi], with that load.
  std::pair<int, int> min_load_slot(int lo, int hi) const {
    assert(1 <= lo && lo <= hi && hi <= k_);
    // Canonical cover of [lo, hi] in spatial order: left-edge nodes ascend,
    // right-edge nodes are collected in reverse.
    int cover[64];
    int left_count = 0;
    int right_count = 0;
    for (int l = leaf(lo), r = leaf(hi) + 1; l < r; l >>= 1, r >>= 1) {
      if (l & 1) cover[left_count++] = l++;
      if (r & 1) cover[63 - right_count++] = --r;
    }
    for (int i = 0; i < right_count; ++i)
      cover[left_count + i] = cover[64 - right_count + i];

    int values[64];
    int best = kMinPad;
    for (int i = 0; i < left_count + right_count; ++i) {
      values[i] = min_[static_cast<std::size_t>(cover[i])];
      ++touches_;
      best = std::min(best, values[i]);
    }
    int node = 0;
    for (int i = 0; i < left_count + right_count; ++i) {
      if (values[i] == best) {
        node = cover[i];
        break;
      }
    }
    while (node < leaves_) {
      ++touches_;
      node = min_[static_cast<std::size_t>(2 * node)] == best ? 2 * node
                                                              : 2 * node + 1;
    }
    return {node - leaves_ + 1, best};
  }

  std::uint64_t touches() const { return touches_; }
  void reset_touches() { touches_ = 0; }

 private:
  static constexpr int kMinPad = std::numeric_limits<int>::max();
  static constexpr int kMaxPad = std::numeric_limits<int>::min();

  static int lowbit(int i) { return i & -i; }
  int leaf(int slot) const { return leaves_ + slot - 1; }

  void pull(std::vector<int>& tree, int node, bool take_max) {
    const int a = tree[static_cast<std::size_t>(2 * node)];
    const int b = tree[static_cast<std::size_t>(2 * node + 1)];
    tree[static_cast<std::size_t>(node)] = take_max ? std::max(a, b)
                                                    : std::min(a, b);
    touches_ += 3;
  }

  std::int64_t prefix_sum(int i) const {
    std::int64_t acc = 0;
    for (; i > 0; i -= lowbit(i)) {
      acc += sum_[static_cast<std::size_t>(i)];
      ++touches_;
    }
    return acc;
  }

  int k_;
  int cap_;
  int leaves_ = 1;
  std::vector<int> load_;
  std::vector<std::int64_t> sum_;
  std::vector<int> min_;
  std::vector<int> max_;
  mutable std::uint64_t touches_ = 0;
};

}  // namespace maxspace
