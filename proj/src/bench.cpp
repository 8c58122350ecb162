#include "maxspace/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace maxspace {

namespace {

std::string format_time(double seconds) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.3f", seconds);
  return buffer;
}

double quantize_time(double seconds) {
  return std::strtod(format_time(seconds).c_str(), nullptr);
}

std::string format_record(const RunRecord& r) {
  std::ostringstream row;
  row << r.instance_id << ',' << r.algorithm_id << ',' << r.seed << ','
      << r.value << ',' << format_time(r.time_s) << ',' << r.iter_best << ','
      << (r.feasible ? 1 : 0);
  return row.str();
}

constexpr char kCsvHeader[] =
    "instance,algorithm,seed,value,time_s,iter_best,feasible";

bool record_order(const RunRecord& a, const RunRecord& b) {
  return std::tie(a.instance_id, a.algorithm_id, a.seed) <
         std::tie(b.instance_id, b.algorithm_id, b.seed);
}

RunRecord run_cell(const Instance& instance, const std::string& instance_id,
                   const GridAlgorithm& algorithm, std::uint64_t seed,
                   double time_limit) {
  RunRecord record;
  record.instance_id = instance_id;
  record.algorithm_id = algorithm.id;
  record.seed = seed;
  SolverConfig config = algorithm.config;
  config.seed = seed;
  config.time_limit_seconds = time_limit;
  try {
    const SolveResult result = solve(instance, algorithm.algo, config);
    record.value = result.value;
    record.time_s = quantize_time(result.time_seconds);
    record.iter_best = result.iteration_of_best;
    record.feasible = result.schedule.check_feasible().ok();
  } catch (const std::exception&) {
    record.value = 0;
    record.time_s = 0.0;
    record.iter_best = 0;
    record.feasible = false;
  }
  return record;
}

}  // namespace

std::vector<RunRecord> run_grid(const GridSpec& spec,
                                const std::string& csv_path) {
  struct Cell {
    std::size_t instance_index;
    std::size_t algorithm_index;
    std::size_t seed_index;
  };
  std::vector<Cell> cells;
  for (std::size_t i = 0; i < spec.instances.size(); ++i)
    for (std::size_t a = 0; a < spec.algorithms.size(); ++a)
      for (std::size_t s = 0; s < spec.seeds.size(); ++s)
        cells.push_back({i, a, s});

  std::ofstream csv;
  if (!csv_path.empty()) {
    csv.open(csv_path);
    if (!csv) throw std::runtime_error("cannot open " + csv_path);
    csv << kCsvHeader << '\n' << std::flush;
  }

  std::vector<RunRecord> records(cells.size());
  std::mutex csv_mutex;
  std::atomic<std::size_t> next{0};

  auto worker = [&]() {
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= cells.size()) return;
      const Cell& cell = cells[index];
      const auto& [instance_id, instance] =
          spec.instances[cell.instance_index];
      const RunRecord record =
          run_cell(*instance, instance_id, spec.algorithms[cell.algorithm_index],
                   spec.seeds[cell.seed_index], spec.time_limit_seconds);
      records[index] = record;
      if (csv.is_open()) {
        const std::lock_guard<std::mutex> lock(csv_mutex);
        csv << format_record(record) << '\n' << std::flush;
      }
    }
  };

  const int workers = std::max(1, spec.workers);
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    for (auto& thread : pool) thread.join();
  }

  std::sort(records.begin(), records.end(), record_order);
  if (!csv_path.empty()) {
    csv.close();
    std::ofstream sorted(csv_path, std::ios::trunc);
    write_records_csv(records, sorted);
  }
  return records;
}

void write_records_csv(const std::vector<RunRecord>& records,
                       std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const RunRecord& record : records) out << format_record(record) << '\n';
}

std::vector<RunRecord> read_records_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader)
    throw std::runtime_error("records csv: bad or missing header");
  std::vector<RunRecord> records;
  int line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    std::istringstream fields(line);
    RunRecord r;
    std::string token;
    try {
      std::getline(fields, r.instance_id, ',');
      std::getline(fields, r.algorithm_id, ',');
      std::getline(fields, token, ',');
      r.seed = std::stoull(token);
      std::getline(fields, token, ',');
      r.value = std::stoll(token);
      std::getline(fields, token, ',');
      r.time_s = std::strtod(token.c_str(), nullptr);
      std::getline(fields, token, ',');
      r.iter_best = std::stoi(token);
      if (!std::getline(fields, token)) throw std::invalid_argument("short");
      r.feasible = token == "1";
    } catch (const std::exception&) {
      throw std::runtime_error("records csv: malformed line " +
                               std::to_string(line_number));
    }
    records.push_back(std::move(r));
  }
  return records;
}

namespace {

// (instance -> algorithm -> best value over seeds), plus the algorithm set.
struct Aggregated {
  std::map<std::string, std::map<std::string, std::int64_t>> by_instance;
  std::set<std::string> algorithms;
};

Aggregated aggregate(const std::vector<RunRecord>& records) {
  Aggregated agg;
  for (const RunRecord& r : records) {
    agg.algorithms.insert(r.algorithm_id);
    auto& per_algo = agg.by_instance[r.instance_id];
    auto [it, inserted] = per_algo.emplace(r.algorithm_id, r.value);
    if (!inserted) it->second = std::max(it->second, r.value);
  }
  for (const auto& [instance_id, per_algo] : agg.by_instance) {
    for (const std::string& algorithm : agg.algorithms) {
      if (!per_algo.count(algorithm))
        throw std::runtime_error("performance_profile: no record for (" +
                                 instance_id + ", " + algorithm + ")");
    }
  }
  return agg;
}

std::vector<ProfilePoint> step_curve_desc(std::vector<double> xs,
                                          std::size_t total) {
  std::sort(xs.begin(), xs.end(), std::greater<double>());
  std::vector<ProfilePoint> points;
  std::size_t covered = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    ++covered;
    if (i + 1 < xs.size() && xs[i + 1] == xs[i]) continue;
    points.push_back(
        {xs[i], static_cast<double>(covered) / static_cast<double>(total)});
  }
  return points;
}

}  // namespace

ProfileSet performance_profile(const std::vector<RunRecord>& records,
                               std::vector<std::string>* excluded) {
  if (records.empty())
    throw std::runtime_error("performance_profile: no records");
  const Aggregated agg = aggregate(records);

  std::map<std::string, std::vector<double>> ratios;
  std::size_t usable = 0;
  for (const auto& [instance_id, per_algo] : agg.by_instance) {
    std::int64_t best = 0;
    for (const auto& [algorithm, value] : per_algo)
      best = std::max(best, value);
    if (best == 0) {
      if (excluded) excluded->push_back(instance_id);
      continue;
    }
    ++usable;
    for (const auto& [algorithm, value] : per_algo)
      ratios[algorithm].push_back(static_cast<double>(value) /
                                  static_cast<double>(best));
  }
  if (usable == 0)
    throw std::runtime_error("performance_profile: every instance has best 0");

  ProfileSet profiles;
  for (auto& [algorithm, xs] : ratios) {
    auto points = step_curve_desc(std::move(xs), usable);
    // Guarantee an x = 1.0 point: its y is the tie-with-best fraction.
    if (points.empty() || points.front().x < 1.0)
      points.insert(points.begin(), {1.0, 0.0});
    profiles[algorithm] = std::move(points);
  }
  return profiles;
}

ProfileSet time_profile(const std::vector<RunRecord>& records) {
  if (records.empty()) throw std::runtime_error("time_profile: no records");
  std::map<std::string, std::vector<double>> times;
  for (const RunRecord& r : records)
    times[r.algorithm_id].push_back(r.time_s);

  ProfileSet profiles;
  for (auto& [algorithm, ts] : times) {
    std::sort(ts.begin(), ts.end());
    std::vector<ProfilePoint> points;
    const auto total = static_cast<double>(ts.size());
    for (std::size_t i = 0; i < ts.size(); ++i) {
      if (i + 1 < ts.size() && ts[i + 1] == ts[i]) continue;
      points.push_back({ts[i], static_cast<double>(i + 1) / total});
    }
    profiles[algorithm] = std::move(points);
  }
  return profiles;
}

WinTable win_table(const std::vector<RunRecord>& records) {
  const Aggregated agg = aggregate(records);
  WinTable table;
  table.algorithms.assign(agg.algorithms.begin(), agg.algorithms.end());
  const std::size_t m = table.algorithms.size();
  table.wins.assign(m, std::vector<int>(m, 0));
  table.instance_count = static_cast<int>(agg.by_instance.size());
  for (const auto& [instance_id, per_algo] : agg.by_instance) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        if (a == b) continue;
        if (per_algo.at(table.algorithms[a]) >
            per_algo.at(table.algorithms[b]))
          ++table.wins[a][b];
      }
    }
  }
  return table;
}

void write_profile_csv(const ProfileSet& profiles, std::ostream& out) {
  out << "algorithm,x,y\n";
  char buffer[96];
  for (const auto& [algorithm, points] : profiles) {
    for (const ProfilePoint& p : points) {
      std::snprintf(buffer, sizeof buffer, "%.17g,%.17g", p.x, p.y);
      out << algorithm << ',' << buffer << '\n';
    }
  }
}

void write_win_csv(const WinTable& table, std::ostream& out) {
  out << "row,col,count\n";
  for (std::size_t a = 0; a < table.algorithms.size(); ++a) {
    for (std::size_t b = 0; b < table.algorithms.size(); ++b) {
      if (a == b) continue;
      out << table.algorithms[a] << ',' << table.algorithms[b] << ','
          << table.wins[a][b] << '\n';
    }
  }
}

void write_grid_manifest(const GridSpec& spec, std::ostream& out) {
  out << "instances: " << spec.instances.size() << '\n';
  for (const auto& [id, instance] : spec.instances) {
    out << "  " << id << " (n=" << instance->ad_count()
        << " K=" << instance->slot_count() << " L=" << instance->capacity()
        << ")\n";
  }
  out << "algorithms: " << spec.algorithms.size() << '\n';
  for (const GridAlgorithm& algorithm : spec.algorithms)
    out << "  " << algorithm.id << " (" << to_string(algorithm.algo) << ")\n";
  out << "seeds:";
  for (std::uint64_t seed : spec.seeds) out << ' ' << seed;
  out << '\n';
  out << "time_limit_seconds: " << spec.time_limit_seconds << '\n';
}

}  // namespace maxspace
