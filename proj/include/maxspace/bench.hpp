#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "maxspace/core.hpp"
#include "maxspace/metaheuristics.hpp"

namespace maxspace {

// One (instance, algorithm, seed) benchmark cell. time_s is quantized to
// milliseconds at record time, so a record survives a CSV round trip
// bit-for-bit.
struct RunRecord {
  std::string instance_id;
  std::string algorithm_id;
  std::uint64_t seed = 0;
  std::int64_t value = 0;
  double time_s = 0.0;
  int iter_best = 0;
  bool feasible = true;

  bool operator==(const RunRecord&) const = default;
};

struct GridAlgorithm {
  std::string id;
  Algo algo;
  SolverConfig config;  // seed and time limit overridden per cell
};

struct GridSpec {
  std::vector<std::pair<std::string, const Instance*>> instances;
  std::vector<GridAlgorithm> algorithms;
  std::vector<std::uint64_t> seeds;
  double time_limit_seconds = 600.0;
  int workers = 1;  // cells run concurrently up to this cap
};

// Runs every cell, appending finished rows to `csv_path` right away (the
// file is crash-safe append-only while running) and rewriting it sorted on
// completion. Pass an empty path to skip persistence. A cell that throws is
// recorded as a failed row (feasible = 0, value 0) instead of aborting the
// grid. Returned records are sorted by (instance, algorithm, seed).
std::vector<RunRecord> run_grid(const GridSpec& spec,
                                const std::string& csv_path);

// records CSV: header instance,algorithm,seed,value,time_s,iter_best,feasible
void write_records_csv(const std::vector<RunRecord>& records,
                       std::ostream& out);
std::vector<RunRecord> read_records_csv(std::istream& in);

struct ProfilePoint {
  double x;  // quality ratio or time, depending on the profile
  double y;  // fraction of instances resp. runs

  bool operator==(const ProfilePoint&) const = default;
};

using ProfileSet = std::map<std::string, std::vector<ProfilePoint>>;

// Solution-quality profile: for each algorithm, the step curve of
// y(x) = fraction of instances on which the algorithm reached at least x
// times the best value any algorithm found there. With several seeds an
// algorithm is represented by its best value per instance. Instances whose
// best value is 0 carry no signal and are skipped; their ids are appended to
// `excluded` when given. Missing (instance, algorithm) cells are an error.
ProfileSet performance_profile(const std::vector<RunRecord>& records,
                               std::vector<std::string>* excluded = nullptr);

// Cumulative running-time curve per algorithm over all runs.
ProfileSet time_profile(const std::vector<RunRecord>& records);

// wins[a][b] = number of instances where algorithm a's value strictly beats
// algorithm b's (per-instance best over seeds, as above).
struct WinTable {
  std::vector<std::string> algorithms;
  std::vector<std::vector<int>> wins;
  int instance_count = 0;
};
WinTable win_table(const std::vector<RunRecord>& records);

// profile CSV: algorithm,x,y — win CSV: row,col,count
void write_profile_csv(const ProfileSet& profiles, std::ostream& out);
void write_win_csv(const WinTable& table, std::ostream& out);

// Plain-text manifest of a grid's dimensions, written next to the records.
void write_grid_manifest(const GridSpec& spec, std::ostream& out);

}  // namespace maxspace
