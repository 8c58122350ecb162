#include <map>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "lp_eval.hpp"
#include "maxspace/construct.hpp"
#include "maxspace/exact.hpp"
#include "maxspace/instances.hpp"

using namespace maxspace;
using namespace maxspace::testing;

namespace {

// x_i_j / y_i assignment matching a schedule, zero-filled elsewhere.
std::map<std::string, long long> assignment_of(const Schedule& s) {
  std::map<std::string, long long> values;
  const Instance& inst = s.instance();
  for (int ad = 1; ad <= inst.ad_count(); ++ad) {
    values["y_" + std::to_string(ad)] = s.is_scheduled(ad) ? 1 : 0;
    for (int slot = 1; slot <= inst.slot_count(); ++slot)
      values["x_" + std::to_string(ad) + "_" + std::to_string(slot)] =
          s.slot_contains(slot, ad) ? 1 : 0;
  }
  values["F"] = 0;
  for (int slot = 1; slot <= inst.slot_count(); ++slot)
    values["F"] = std::max(values["F"], static_cast<long long>(s.load(slot)));
  return values;
}

}  // namespace

TEST_SUITE_BEGIN("exact");

TEST_CASE("7-ad instance optimum fills the banner completely") {
  const Instance inst = seven_ads();
  const OracleResult result = brute_force(inst);
  CHECK(result.value == 24);  // K * L, a perfect packing exists
  CHECK(result.schedule.check_feasible().ok());
  CHECK(result.schedule.primary_value() == 24);
}

TEST_CASE("golden instance file matches the in-memory instance") {
  const Instance fromFile =
      read_instance_file(std::string(MAXSPACE_DATA_DIR) + "/table1.inst");
  CHECK(write_instance_string(fromFile) == write_instance_string(seven_ads()));
  CHECK(brute_force(fromFile).value == 24);
}

TEST_CASE("single oversized ad yields optimum 0") {
  std::vector<Ad> ads(1);
  ads[0] = {0, 7, 7, 1, 1, 1, 4};
  const Instance inst(ProblemKind::MaxSpaceRdwv, 4, 6, ads);
  const OracleResult result = brute_force(inst);
  CHECK(result.value == 0);
  CHECK_FALSE(result.schedule.is_scheduled(1));
}

TEST_CASE("single unit ad with w = K packs K copies") {
  std::vector<Ad> ads(1);
  ads[0] = {0, 1, 3, 4, 4, 1, 4};
  const Instance inst(ProblemKind::MaxSpaceRdwv, 4, 6, ads);
  CHECK(brute_force(inst).value == 4 * 3);
}

TEST_CASE("ties go to the lexicographically smallest placement") {
  // Two interchangeable unit ads, one slot each: both optima pack both ads,
  // and the smallest placement is ad1 -> slot1, ad2 -> slot2.
  std::vector<Ad> ads(2, Ad{0, 1, 1, 1, 1, 1, 2});
  const Instance inst(ProblemKind::MaxSpaceRdwv, 2, 1, ads);
  const OracleResult result = brute_force(inst);
  CHECK(result.value == 2);
  CHECK(result.schedule.placement(1) == std::vector<int>{1});
  CHECK(result.schedule.placement(2) == std::vector<int>{2});

  // Only one of the two fits a single slot. An unscheduled ad sorts before
  // any scheduled one, so the smallest placement skips ad 1.
  const Instance one(ProblemKind::MaxSpaceRdwv, 1, 1,
                     std::vector<Ad>(2, Ad{0, 1, 1, 1, 1, 1, 1}));
  const OracleResult single = brute_force(one);
  CHECK(single.value == 1);
  CHECK_FALSE(single.schedule.is_scheduled(1));
  CHECK(single.schedule.placement(2) == std::vector<int>{1});
}

TEST_CASE("oracle equals itself under the fixed-frequency embedding") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    bool was_maxspace = false;
    const Instance inst = tiny_for_oracle(seed, &was_maxspace);
    if (!inst.maxspace_like()) continue;
    if (inst.kind() != ProblemKind::MaxSpace) continue;
    const auto direct = brute_force(inst);
    const auto embedded = brute_force(inst.as_rdwv());
    CHECK(direct.value == embedded.value);
  }
}

TEST_CASE("oracle dominates heuristic solutions on tiny instances") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const Instance inst = tiny_for_oracle(seed);
    const auto oracle = brute_force(inst);
    for (double alpha : {0.0, 0.5, 1.0}) {
      Rng rng(seed);
      const Schedule s = constructive(inst, alpha, rng);
      CHECK(s.primary_value() <= oracle.value);
    }
  }
}

TEST_CASE("the guard rejects oversized search spaces") {
  std::vector<Ad> ads(40);
  for (auto& ad : ads) ad = {0, 1, 1, 1, 10, 1, 20};
  const Instance inst(ProblemKind::MaxSpaceRdwv, 20, 100, ads);
  CHECK(brute_force_bound(inst) > 1e8);
  CHECK_THROWS_AS(brute_force(inst), SearchSpaceTooLarge);
}

TEST_CASE("smallest model: 2 variables, 2 rows") {
  std::vector<Ad> ads(1);
  ads[0] = {0, 1, 1, 1, 1, 1, 1};
  const Instance inst(ProblemKind::MaxSpace, 1, 1, ads);
  std::ostringstream out;
  export_ilp(inst, IlpFormulation::MaxSpace, out);
  std::istringstream in(out.str());
  const LpModel model = parse_lp(in);
  CHECK(model.maximize);
  CHECK(model.rows.size() == 2);  // cap_1 and link_1
  CHECK(model.binaries.size() == 2);  // x_1_1 and y_1
}

TEST_CASE("window complements are pinned to zero") {
  std::vector<Ad> ads(1);
  ads[0] = {0, 2, 5, 1, 1, 2, 2};
  const Instance inst(ProblemKind::MaxSpaceRdwv, 3, 6, ads);
  std::ostringstream out;
  export_ilp(inst, IlpFormulation::MaxSpaceRdwv, out);
  const std::string text = out.str();
  CHECK(text.find("win_1_1: x_1_1 = 0") != std::string::npos);
  CHECK(text.find("win_1_3: x_1_3 = 0") != std::string::npos);
  CHECK(text.find("win_1_2") == std::string::npos);
}

TEST_CASE("exported models accept the oracle optimum at the same objective") {
  for (std::uint64_t seed = 40; seed < 52; ++seed) {
    const Instance inst = tiny_for_oracle(seed);
    const OracleResult oracle = brute_force(inst);
    const auto assignment = assignment_of(oracle.schedule);

    std::ostringstream out;
    export_ilp(inst,
               inst.maxspace_like() ? IlpFormulation::MaxSpace
                                    : IlpFormulation::MaxSpaceRdwv,
               out);
    std::istringstream in(out.str());
    const LpModel model = parse_lp(in);
    for (const LpRow& row : model.rows) {
      CAPTURE(row.name);
      REQUIRE(row_satisfied(row, assignment));
    }
    CHECK(evaluate(model.objective, assignment) == oracle.value);
  }
}

TEST_CASE("min-height model matches a hand-built packing") {
  std::vector<Ad> ads(2);
  ads[0] = {0, 3, 3, 1, 1, 1, 2};
  ads[1] = {0, 2, 2, 2, 2, 1, 2};
  const Instance inst(ProblemKind::MaxSpace, 2, 6, ads);
  std::ostringstream out;
  export_ilp(inst, IlpFormulation::MinSpace, out);
  std::istringstream in(out.str());
  const LpModel model = parse_lp(in);
  CHECK_FALSE(model.maximize);

  Schedule s(inst);
  s.add_copy(1, 1);
  s.add_copy(2, 1);
  s.add_copy(2, 2);
  const auto assignment = assignment_of(s);
  for (const LpRow& row : model.rows) {
    CAPTURE(row.name);
    REQUIRE(row_satisfied(row, assignment));
  }
  CHECK(evaluate(model.objective, assignment) == 5);  // peak load

  // Variable-frequency input is rejected for this formulation.
  const Instance rdwv = tiny_rdwv(3, 3, 6, 8);
  std::ostringstream sink;
  if (!rdwv.maxspace_like())
    CHECK_THROWS_AS(export_ilp(rdwv, IlpFormulation::MinSpace, sink),
                    std::invalid_argument);
}

TEST_CASE("variable frequencies produce a pair of link rows") {
  std::vector<Ad> ads(1);
  ads[0] = {0, 2, 5, 1, 3, 1, 4};
  const Instance inst(ProblemKind::MaxSpaceRdwv, 4, 6, ads);
  std::ostringstream out;
  export_ilp(inst, IlpFormulation::MaxSpaceRdwv, out);
  const std::string text = out.str();
  CHECK(text.find("linklo_1:") != std::string::npos);
  CHECK(text.find("linkhi_1:") != std::string::npos);
  CHECK(text.find("instance-hash: " + instance_hash_hex(inst)) !=
        std::string::npos);
}

TEST_SUITE_END();
