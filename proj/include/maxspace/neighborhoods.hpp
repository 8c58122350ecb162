#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "maxspace/schedule.hpp"

namespace maxspace {

// Objective used by the layout moves (Mv, Rpck), which never change the
// primary value: first level the slot loads out (Minimize the squared free
// space), then pile them up (Maximize it). Add, Chg and AddCpy always score
// by the primary value, whatever the phase.
enum class Phase { Minimize, Maximize };

enum class NeighborhoodKind { Mv, Rpck, AddCpy, Add, Chg };

// Exploration order per problem shape, cheapest first: Mv, Rpck, Add, Chg
// for fixed-frequency instances; Mv, Rpck, AddCpy, Add, Chg otherwise.
std::vector<NeighborhoodKind> neighborhood_order(const Instance& instance);

// A feasible move plus its exact objective deltas. slack_delta is filled for
// Mv and Rpck (the moves the layout objective drives); for the value moves
// it is not computed here — apply_move() reports it exactly when needed.
struct MoveEval {
  Move move;
  std::int64_t primary_delta = 0;
  std::int64_t slack_delta = 0;
};

struct EnumOptions {
  // Upper bound on (outgoing, incoming) pairs the Chg generator may scan per
  // enumeration; 0 means unlimited. Chg is by far the most expensive
  // neighborhood, so callers on large instances can cap it; the stream is
  // then a deterministic prefix.
  std::size_t chg_pair_budget = 0;
};

// Visit every feasible move of one kind, in deterministic order: ascending
// ad id, then copy index, then slot (Chg: outgoing ad, then incoming ad;
// Rpck pairs are emitted once, with ad_a < ad_b). The visitor returns false
// to stop early. The schedule is only read.
void for_each_move(const Schedule& schedule, NeighborhoodKind kind,
                   const EnumOptions& options,
                   const std::function<bool(const MoveEval&)>& visit);

std::vector<MoveEval> enumerate(const Schedule& schedule,
                                NeighborhoodKind kind,
                                const EnumOptions& options = {});

// Phase-adjusted score, larger is better: the primary delta for value moves,
// the slack delta signed so that improving the current phase is positive for
// layout moves.
std::int64_t score(const MoveEval& eval, Phase phase);

// Same, recomputed from scratch for an arbitrary feasible move.
std::int64_t score(const Schedule& schedule, const Move& move, Phase phase);

}  // namespace maxspace
