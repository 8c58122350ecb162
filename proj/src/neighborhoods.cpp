#include "maxspace/neighborhoods.hpp"

#include <algorithm>
#include <stdexcept>

namespace maxspace {

std::vector<NeighborhoodKind> neighborhood_order(const Instance& instance) {
  if (instance.maxspace_like()) {
    return {NeighborhoodKind::Mv, NeighborhoodKind::Rpck,
            NeighborhoodKind::Add, NeighborhoodKind::Chg};
  }
  return {NeighborhoodKind::Mv, NeighborhoodKind::Rpck,
          NeighborhoodKind::AddCpy, NeighborhoodKind::Add,
          NeighborhoodKind::Chg};
}

namespace {

std::int64_t square(std::int64_t x) { return x * x; }

// Change in squared free space when `slot` takes `size_delta` more load.
std::int64_t slack_change(const Schedule& s, int slot, int size_delta) {
  const std::int64_t cap = s.instance().capacity();
  const std::int64_t gap = cap - s.load(slot);
  return square(gap - size_delta) - square(gap);
}

// Number of window slots that could take one more copy of `ad`, assuming the
// ad currently has no copies. Uses the slack tree to reject windows whose
// least-loaded slot is already too full and to accept whole windows whose
// fullest slot still has room, falling back to a scan in between.
int add_fit_count(const Schedule& s, const Ad& ad) {
  const SlackTree& tree = s.slack_tree();
  const int cap = s.instance().capacity();
  if (tree.range_min_load(ad.release, ad.deadline) + ad.size > cap) return 0;
  if (tree.range_max_load(ad.release, ad.deadline) + ad.size <= cap)
    return ad.window_len();
  int count = 0;
  for (int slot = ad.release; slot <= ad.deadline; ++slot) {
    if (s.load(slot) + ad.size <= cap) ++count;
  }
  return count;
}

bool emit_mv(const Schedule& s,
             const std::function<bool(const MoveEval&)>& visit) {
  const Instance& inst = s.instance();
  const int cap = inst.capacity();
  for (int ad = 1; ad <= inst.ad_count(); ++ad) {
    const auto& slots = s.placement(ad);
    if (slots.empty()) continue;
    const Ad& info = inst.ad(ad);
    for (int copy = 1; copy <= static_cast<int>(slots.size()); ++copy) {
      const int from = slots[static_cast<std::size_t>(copy) - 1];
      for (int to = info.release; to <= info.deadline; ++to) {
        if (to == from || s.slot_contains(to, ad)) continue;
        if (s.load(to) + info.size > cap) continue;
        MoveEval eval{Move{MvMove{ad, copy, to}}, 0, 0};
        eval.slack_delta =
            slack_change(s, from, -info.size) + slack_change(s, to, info.size);
        if (!visit(eval)) return false;
      }
    }
  }
  return true;
}

bool emit_rpck(const Schedule& s,
               const std::function<bool(const MoveEval&)>& visit) {
  const Instance& inst = s.instance();
  const int cap = inst.capacity();
  for (int ad_a = 1; ad_a <= inst.ad_count(); ++ad_a) {
    const auto& slots_a = s.placement(ad_a);
    if (slots_a.empty()) continue;
    const Ad& a = inst.ad(ad_a);
    for (int copy_a = 1; copy_a <= static_cast<int>(slots_a.size());
         ++copy_a) {
      const int slot_a = slots_a[static_cast<std::size_t>(copy_a) - 1];
      for (int ad_b = ad_a + 1; ad_b <= inst.ad_count(); ++ad_b) {
        const auto& slots_b = s.placement(ad_b);
        if (slots_b.empty()) continue;
        const Ad& b = inst.ad(ad_b);
        if (slot_a < b.release || slot_a > b.deadline) continue;
        if (s.slot_contains(slot_a, ad_b)) continue;
        for (int copy_b = 1; copy_b <= static_cast<int>(slots_b.size());
             ++copy_b) {
          const int slot_b = slots_b[static_cast<std::size_t>(copy_b) - 1];
          if (slot_b == slot_a) continue;
          if (slot_b < a.release || slot_b > a.deadline) continue;
          if (s.slot_contains(slot_b, ad_a)) continue;
          if (s.load(slot_a) - a.size + b.size > cap) continue;
          if (s.load(slot_b) - b.size + a.size > cap) continue;
          MoveEval eval{Move{RpckMove{ad_a, copy_a, ad_b, copy_b}}, 0, 0};
          eval.slack_delta = slack_change(s, slot_a, b.size - a.size) +
                             slack_change(s, slot_b, a.size - b.size);
          if (!visit(eval)) return false;
        }
      }
    }
  }
  return true;
}

bool emit_addcpy(const Schedule& s,
                 const std::function<bool(const MoveEval&)>& visit) {
  const Instance& inst = s.instance();
  if (inst.maxspace_like()) return true;  // fixed frequencies, nothing to add
  const int cap = inst.capacity();
  for (int ad = 1; ad <= inst.ad_count(); ++ad) {
    const int copies = s.copy_count(ad);
    if (copies == 0) continue;
    const Ad& info = inst.ad(ad);
    if (copies >= info.freq_max) continue;
    for (int slot = info.release; slot <= info.deadline; ++slot) {
      if (s.slot_contains(slot, ad)) continue;
      if (s.load(slot) + info.size > cap) continue;
      MoveEval eval{Move{AddCpyMove{ad, copies + 1, slot}}, info.value, 0};
      if (!visit(eval)) return false;
    }
  }
  return true;
}

bool emit_add(const Schedule& s,
              const std::function<bool(const MoveEval&)>& visit) {
  const Instance& inst = s.instance();
  const SlackTree& tree = s.slack_tree();
  for (int ad = 1; ad <= inst.ad_count(); ++ad) {
    if (s.is_scheduled(ad)) continue;
    const Ad& info = inst.ad(ad);
    if (!tree.can_place(info.freq_min, info.size, info.release, info.deadline))
      continue;
    const int fits = add_fit_count(s, info);
    if (fits < info.freq_min) continue;
    const int placed = std::min(fits, info.freq_max);
    MoveEval eval{Move{AddMove{ad}},
                  static_cast<std::int64_t>(placed) * info.value, 0};
    if (!visit(eval)) return false;
  }
  return true;
}

bool emit_chg(const Schedule& s, const EnumOptions& options,
              const std::function<bool(const MoveEval&)>& visit) {
  const Instance& inst = s.instance();
  const SlackTree& tree = s.slack_tree();
  const int cap = inst.capacity();
  std::size_t scanned = 0;
  for (int ad_out = 1; ad_out <= inst.ad_count(); ++ad_out) {
    const auto& out_slots = s.placement(ad_out);
    if (out_slots.empty()) continue;
    const Ad& out = inst.ad(ad_out);
    for (int ad_in = 1; ad_in <= inst.ad_count(); ++ad_in) {
      if (ad_in == ad_out || s.is_scheduled(ad_in)) continue;
      if (options.chg_pair_budget != 0 &&
          ++scanned > options.chg_pair_budget)
        return true;  // budget exhausted; stream is a prefix
      const Ad& in = inst.ad(ad_in);

      // Free space in the incoming window once the outgoing ad is gone.
      const auto lo = std::lower_bound(out_slots.begin(), out_slots.end(),
                                       in.release);
      const auto hi =
          std::upper_bound(out_slots.begin(), out_slots.end(), in.deadline);
      const auto overlap = static_cast<std::int64_t>(hi - lo);
      const std::int64_t freed =
          tree.range_free(in.release, in.deadline) +
          overlap * out.size;
      if (freed < static_cast<std::int64_t>(in.freq_min) * in.size) continue;

      int fits = 0;
      auto removed = lo;
      for (int slot = in.release; slot <= in.deadline; ++slot) {
        int load = s.load(slot);
        if (removed != hi && *removed == slot) {
          load -= out.size;
          ++removed;
        }
        if (load + in.size <= cap) ++fits;
      }
      if (fits < in.freq_min) continue;
      const int placed = std::min(fits, in.freq_max);
      MoveEval eval{Move{ChgMove{ad_out, ad_in}}, 0, 0};
      eval.primary_delta =
          static_cast<std::int64_t>(placed) * in.value -
          static_cast<std::int64_t>(out_slots.size()) * out.value;
      if (!visit(eval)) return false;
    }
  }
  return true;
}

}  // namespace

void for_each_move(const Schedule& schedule, NeighborhoodKind kind,
                   const EnumOptions& options,
                   const std::function<bool(const MoveEval&)>& visit) {
  switch (kind) {
    case NeighborhoodKind::Mv:
      emit_mv(schedule, visit);
      break;
    case NeighborhoodKind::Rpck:
      emit_rpck(schedule, visit);
      break;
    case NeighborhoodKind::AddCpy:
      emit_addcpy(schedule, visit);
      break;
    case NeighborhoodKind::Add:
      emit_add(schedule, visit);
      break;
    case NeighborhoodKind::Chg:
      emit_chg(schedule, options, visit);
      break;
  }
}

std::vector<MoveEval> enumerate(const Schedule& schedule,
                                NeighborhoodKind kind,
                                const EnumOptions& options) {
  std::vector<MoveEval> moves;
  for_each_move(schedule, kind, options, [&moves](const MoveEval& eval) {
    moves.push_back(eval);
    return true;
  });
  return moves;
}

std::int64_t score(const MoveEval& eval, Phase phase) {
  switch (kind_of(eval.move)) {
    case MoveKind::Mv:
    case MoveKind::Rpck:
      return phase == Phase::Minimize ? -eval.slack_delta : eval.slack_delta;
    default:
      return eval.primary_delta;
  }
}

std::int64_t score(const Schedule& schedule, const Move& move, Phase phase) {
  const Instance& inst = schedule.instance();
  struct Visitor {
    const Schedule& s;
    const Instance& inst;

    MoveEval operator()(const AddMove& m) const {
      const Ad& info = inst.ad(m.ad);
      const int fits = add_fit_count(s, info);
      if (fits < info.freq_min)
        throw std::invalid_argument("score: infeasible add");
      const int placed = std::min(fits, info.freq_max);
      return {Move{m}, static_cast<std::int64_t>(placed) * info.value, 0};
    }
    MoveEval operator()(const ChgMove& m) const {
      const Ad& out = inst.ad(m.ad_out);
      const Ad& in = inst.ad(m.ad_in);
      const auto& out_slots = s.placement(m.ad_out);
      int fits = 0;
      for (int slot = in.release; slot <= in.deadline; ++slot) {
        int load = s.load(slot);
        if (std::binary_search(out_slots.begin(), out_slots.end(), slot))
          load -= out.size;
        if (load + in.size <= inst.capacity()) ++fits;
      }
      if (fits < in.freq_min)
        throw std::invalid_argument("score: infeasible chg");
      const int placed = std::min(fits, in.freq_max);
      MoveEval eval{Move{m}, 0, 0};
      eval.primary_delta =
          static_cast<std::int64_t>(placed) * in.value -
          static_cast<std::int64_t>(out_slots.size()) * out.value;
      return eval;
    }
    MoveEval operator()(const RpckMove& m) const {
      const Ad& a = inst.ad(m.ad_a);
      const Ad& b = inst.ad(m.ad_b);
      const int slot_a =
          s.placement(m.ad_a)[static_cast<std::size_t>(m.copy_a) - 1];
      const int slot_b =
          s.placement(m.ad_b)[static_cast<std::size_t>(m.copy_b) - 1];
      MoveEval eval{Move{m}, 0, 0};
      eval.slack_delta = slack_change(s, slot_a, b.size - a.size) +
                         slack_change(s, slot_b, a.size - b.size);
      return eval;
    }
    MoveEval operator()(const AddCpyMove& m) const {
      return {Move{m}, inst.ad(m.ad).value, 0};
    }
    MoveEval operator()(const MvMove& m) const {
      const Ad& info = inst.ad(m.ad);
      const int from =
          s.placement(m.ad)[static_cast<std::size_t>(m.copy) - 1];
      MoveEval eval{Move{m}, 0, 0};
      eval.slack_delta = slack_change(s, from, -info.size) +
                         slack_change(s, m.slot, info.size);
      return eval;
    }
  };
  return score(std::visit(Visitor{schedule, inst}, move), phase);
}

}  // namespace maxspace
