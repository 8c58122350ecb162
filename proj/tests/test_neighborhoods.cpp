#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "maxspace/neighborhoods.hpp"

using namespace maxspace;
using namespace maxspace::testing;

namespace {

// Phase objective difference measured by actually applying the move.
std::int64_t applied_score(Schedule& s, const Move& move, Phase phase) {
  const DeltaRecord rec = apply_move(s, move);
  std::int64_t delta;
  switch (kind_of(move)) {
    case MoveKind::Mv:
    case MoveKind::Rpck:
      delta = phase == Phase::Minimize ? -rec.slack_delta : rec.slack_delta;
      break;
    default:
      delta = rec.primary_delta;
  }
  revert_move(s, rec);
  return delta;
}

}  // namespace

TEST_SUITE_BEGIN("neighborhoods");

TEST_CASE("neighborhood order tracks the problem shape") {
  const Instance ms = seven_ads();
  CHECK(neighborhood_order(ms) ==
        std::vector<NeighborhoodKind>{NeighborhoodKind::Mv,
                                      NeighborhoodKind::Rpck,
                                      NeighborhoodKind::Add,
                                      NeighborhoodKind::Chg});
  const Instance rdwv = tiny_rdwv(3, 4, 8, 1);
  CHECK(neighborhood_order(rdwv) ==
        std::vector<NeighborhoodKind>{
            NeighborhoodKind::Mv, NeighborhoodKind::Rpck,
            NeighborhoodKind::AddCpy, NeighborhoodKind::Add,
            NeighborhoodKind::Chg});
}

TEST_CASE("add stream is empty when every slot is full") {
  const Instance inst = seven_ads();
  Schedule s(inst);
  s.add_copy(1, 1);
  s.add_copy(1, 2);
  s.add_copy(1, 3);
  s.add_copy(7, 4);
  s.add_copy(5, 4);  // all four slots at load 6
  CHECK(enumerate(s, NeighborhoodKind::Add).empty());
}

TEST_CASE("addcpy stream is empty on fixed-frequency instances") {
  const Instance inst = seven_ads();
  const Schedule s = random_schedule(inst, 3);
  CHECK(enumerate(s, NeighborhoodKind::AddCpy).empty());
  CHECK(inst.maxspace_like());
}

TEST_CASE("mv moves of a 2-slot micro instance") {
  // X (size 4) and Y (size 2) both sit in slot 1 of a K=2, L=6 banner.
  std::vector<Ad> ads(2);
  ads[0] = {0, 4, 4, 1, 1, 1, 2};
  ads[1] = {0, 2, 2, 1, 1, 1, 2};
  const Instance inst(ProblemKind::MaxSpaceRdwv, 2, 6, ads);
  Schedule s(inst);
  s.add_copy(1, 1);
  s.add_copy(2, 1);

  const auto moves = enumerate(s, NeighborhoodKind::Mv);
  REQUIRE(moves.size() == 2);  // each ad can hop to the empty slot
  const auto& x = std::get<MvMove>(moves[0].move);
  CHECK(x.ad == 1);
  CHECK(x.slot == 2);
  const auto& y = std::get<MvMove>(moves[1].move);
  CHECK(y.ad == 2);
  CHECK(y.copy == 1);
  CHECK(y.slot == 2);
}

TEST_CASE("enumeration is deterministic") {
  const Instance inst = tiny_rdwv(7, 4, 9, 11);
  const Schedule s = random_schedule(inst, 11);
  for (NeighborhoodKind kind : neighborhood_order(inst)) {
    const auto first = enumerate(s, kind);
    const auto second = enumerate(s, kind);
    REQUIRE(first.size() == second.size());
    for (std::size_t i = 0; i < first.size(); ++i) {
      CHECK(first[i].move == second[i].move);
      CHECK(first[i].primary_delta == second[i].primary_delta);
      CHECK(first[i].slack_delta == second[i].slack_delta);
    }
  }
}

TEST_CASE("every enumerated move applies feasibly with the promised deltas") {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 4000; ++seed) {
    const Instance inst = (seed % 2 == 0) ? tiny_maxspace(6, 4, 8, seed)
                                          : tiny_rdwv(6, 4, 8, seed);
    Schedule s = random_schedule(inst, seed);
    REQUIRE(s.check_feasible().ok());
    for (NeighborhoodKind kind : neighborhood_order(inst)) {
      for (const MoveEval& eval : enumerate(s, kind)) {
        const DeltaRecord rec = apply_move(s, eval.move);
        REQUIRE(s.check_feasible().ok());
        REQUIRE(rec.primary_delta == eval.primary_delta);
        if (kind == NeighborhoodKind::Mv || kind == NeighborhoodKind::Rpck) {
          REQUIRE(rec.slack_delta == eval.slack_delta);
          REQUIRE(rec.primary_delta == 0);  // layout moves keep the value
        }
        revert_move(s, rec);
        ++checked;
      }
    }
  }
}

TEST_CASE("score matches the objective difference after apply") {
  int checked = 0;
  for (std::uint64_t seed = 100; checked < 2000; ++seed) {
    const Instance inst = (seed % 2 == 0) ? tiny_maxspace(6, 4, 8, seed)
                                          : tiny_rdwv(6, 4, 8, seed);
    Schedule s = random_schedule(inst, seed);
    for (NeighborhoodKind kind : neighborhood_order(inst)) {
      for (const MoveEval& eval : enumerate(s, kind)) {
        for (Phase phase : {Phase::Minimize, Phase::Maximize}) {
          const auto direct = score(s, eval.move, phase);
          CHECK(direct == score(eval, phase));
          CHECK(direct == applied_score(s, eval.move, phase));
        }
        ++checked;
      }
    }
  }
}

TEST_CASE("equal-size rpck changes nothing; unequal sizes only the slack") {
  std::vector<Ad> ads(3);
  ads[0] = {0, 2, 2, 1, 2, 1, 3};
  ads[1] = {0, 2, 2, 1, 2, 1, 3};
  ads[2] = {0, 3, 3, 1, 2, 1, 3};
  const Instance inst(ProblemKind::MaxSpaceRdwv, 3, 6, ads);
  Schedule s(inst);
  s.add_copy(1, 1);
  s.add_copy(2, 2);
  s.add_copy(3, 3);

  for (const MoveEval& eval : enumerate(s, NeighborhoodKind::Rpck)) {
    const auto& m = std::get<RpckMove>(eval.move);
    const DeltaRecord rec = apply_move(s, eval.move);
    CHECK(rec.primary_delta == 0);
    if (inst.ad(m.ad_a).size == inst.ad(m.ad_b).size)
      CHECK(rec.slack_delta == 0);
    revert_move(s, rec);
  }
}

TEST_CASE("mv from a full slot to a slack-4 slot scores +8 when minimizing") {
  std::vector<Ad> ads(4, Ad{0, 2, 2, 1, 3, 1, 2});
  const Instance inst(ProblemKind::MaxSpaceRdwv, 2, 6, ads);
  Schedule s(inst);
  s.add_copy(1, 1);
  s.add_copy(2, 1);
  s.add_copy(3, 1);
  s.add_copy(4, 2);  // loads (6, 2)
  CHECK(score(s, Move{MvMove{1, 1, 2}}, Phase::Minimize) == 8);
  CHECK(score(s, Move{MvMove{1, 1, 2}}, Phase::Maximize) == -8);
}

TEST_CASE("chg delta is copies-in times value-in minus copies-out times value-out") {
  std::vector<Ad> ads(2);
  ads[0] = {0, 3, 4, 2, 2, 1, 4};  // scheduled: 2 copies at value 4
  ads[1] = {0, 2, 9, 1, 3, 1, 4};  // wants in: 3 copies at value 9
  const Instance inst(ProblemKind::MaxSpaceRdwv, 4, 6, ads);
  Schedule s(inst);
  s.add_copy(1, 1);
  s.add_copy(1, 2);

  const auto moves = enumerate(s, NeighborhoodKind::Chg);
  REQUIRE(moves.size() == 1);
  CHECK(moves[0].primary_delta == 3 * 9 - 2 * 4);
  const DeltaRecord rec = apply_move(s, moves[0].move);
  CHECK(rec.primary_delta == 19);
  CHECK(s.copy_count(2) == 3);
  CHECK_FALSE(s.is_scheduled(1));
}

TEST_CASE("chg pair budget truncates the stream deterministically") {
  const Instance inst = tiny_maxspace(8, 4, 12, 5);
  Schedule s(inst);
  first_fit(s, 1);
  first_fit(s, 2);
  const auto full = enumerate(s, NeighborhoodKind::Chg);
  EnumOptions capped;
  capped.chg_pair_budget = 1;
  const auto prefix = enumerate(s, NeighborhoodKind::Chg, capped);
  CHECK(prefix.size() <= full.size());
  for (std::size_t i = 0; i < prefix.size(); ++i)
    CHECK(prefix[i].move == full[i].move);
}

TEST_SUITE_END();
