#include "maxspace/exact.hpp"

#include <algorithm>
#include <ostream>
#include <vector>

#include "maxspace/instances.hpp"

namespace maxspace {

double brute_force_bound(const Instance& instance) {
  constexpr double kSaturate = 1e18;
  double total = 1.0;
  for (const Ad& ad : instance.ads()) {
    const int window = ad.window_len();
    const int hi = std::min(ad.freq_max, window);
    double branches = 1.0;  // the "skip this ad" choice
    for (int t = ad.freq_min; t <= hi; ++t) {
      double choose = 1.0;
      for (int i = 0; i < t; ++i) choose *= double(window - i) / double(i + 1);
      branches += choose;
    }
    total *= branches;
    if (total > kSaturate) return kSaturate;
  }
  return total;
}

namespace {

struct BruteForce {
  const Instance& inst;
  std::vector<int> loads;                       // [slot]
  std::vector<std::vector<int>> placement;      // [ad] -> chosen slots
  std::vector<std::int64_t> optimistic_suffix;  // value bound from ad i on
  std::int64_t current_value = 0;
  std::int64_t best_value = -1;
  std::vector<std::vector<int>> best_placement;

  explicit BruteForce(const Instance& instance)
      : inst(instance),
        loads(static_cast<std::size_t>(instance.slot_count()) + 1, 0),
        placement(static_cast<std::size_t>(instance.ad_count()) + 1),
        optimistic_suffix(static_cast<std::size_t>(instance.ad_count()) + 2,
                          0) {
    for (int ad = inst.ad_count(); ad >= 1; --ad) {
      const Ad& info = inst.ad(ad);
      const int copies = std::min(info.freq_max, info.window_len());
      optimistic_suffix[static_cast<std::size_t>(ad)] =
          optimistic_suffix[static_cast<std::size_t>(ad) + 1] +
          static_cast<std::int64_t>(copies) * info.value;
    }
  }

  void branch_ad(int ad) {
    if (ad > inst.ad_count()) {
      if (current_value > best_value ||
          (current_value == best_value && placement < best_placement)) {
        best_value = current_value;
        best_placement = placement;
      }
      return;
    }
    // Branches that cannot reach the incumbent are dropped; ties survive.
    if (current_value + optimistic_suffix[static_cast<std::size_t>(ad)] <
        best_value)
      return;
    const Ad& info = inst.ad(ad);
    branch_ad(ad + 1);  // skip
    const int hi = std::min(info.freq_max, info.window_len());
    for (int copies = info.freq_min; copies <= hi; ++copies)
      choose_slots(ad, copies, info.release);
  }

  void choose_slots(int ad, int remaining, int from) {
    if (remaining == 0) {
      branch_ad(ad + 1);
      return;
    }
    const Ad& info = inst.ad(ad);
    for (int slot = from; slot <= info.deadline - remaining + 1; ++slot) {
      if (loads[static_cast<std::size_t>(slot)] + info.size >
          inst.capacity())
        continue;
      loads[static_cast<std::size_t>(slot)] += info.size;
      placement[static_cast<std::size_t>(ad)].push_back(slot);
      current_value += info.value;
      choose_slots(ad, remaining - 1, slot + 1);
      current_value -= info.value;
      placement[static_cast<std::size_t>(ad)].pop_back();
      loads[static_cast<std::size_t>(slot)] -= info.size;
    }
  }
};

}  // namespace

OracleResult brute_force(const Instance& instance, double guard) {
  const double bound = brute_force_bound(instance);
  if (bound > guard) throw SearchSpaceTooLarge(bound, guard);

  BruteForce search(instance);
  search.branch_ad(1);

  Schedule schedule(instance);
  for (int ad = 1; ad <= instance.ad_count(); ++ad) {
    for (int slot : search.best_placement[static_cast<std::size_t>(ad)])
      schedule.add_copy(ad, slot);
  }
  return {search.best_value, std::move(schedule)};
}

std::string instance_hash_hex(const Instance& instance) {
  const std::string canonical = write_instance_string(instance);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : canonical) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static const char* digits = "0123456789abcdef";
  std::string hex(16, '0');
  for (int i = 15; i >= 0; --i) {
    hex[static_cast<std::size_t>(i)] = digits[hash & 0xF];
    hash >>= 4;
  }
  return hex;
}

namespace {

std::string var_x(int ad, int slot) {
  return "x_" + std::to_string(ad) + "_" + std::to_string(slot);
}

std::string var_y(int ad) { return "y_" + std::to_string(ad); }

// "c x" with the coefficient omitted when it is 1.
void term(std::ostream& out, bool& first, long long coeff,
          const std::string& var) {
  if (coeff == 0) return;
  if (first) {
    if (coeff < 0) out << "- ";
    first = false;
  } else {
    out << (coeff < 0 ? " - " : " + ");
  }
  const long long mag = coeff < 0 ? -coeff : coeff;
  if (mag != 1) out << mag << ' ';
  out << var;
}

}  // namespace

void export_ilp(const Instance& instance, IlpFormulation which,
                std::ostream& out) {
  if (which == IlpFormulation::MinSpace && !instance.maxspace_like())
    throw std::invalid_argument(
        "export_ilp: the min-height model needs fixed-frequency input");

  const int n = instance.ad_count();
  const int k = instance.slot_count();
  const bool min_space = which == IlpFormulation::MinSpace;
  const bool windowed = which == IlpFormulation::MaxSpaceRdwv;

  out << "\\ " << (min_space ? "minspace"
                             : (windowed ? "maxspace-rdwv" : "maxspace"))
      << " model\n";
  out << "\\ instance-hash: " << instance_hash_hex(instance) << "\n";
  out << "\\ n: " << n << "  K: " << k << "  L: " << instance.capacity()
      << "\n";

  bool first = true;
  if (min_space) {
    out << "Minimize\n obj: F\n";
  } else {
    out << "Maximize\n obj: ";
    for (int ad = 1; ad <= n; ++ad) {
      const Ad& info = instance.ad(ad);
      const int coeff = windowed ? info.value : info.size;
      for (int slot = 1; slot <= k; ++slot)
        term(out, first, coeff, var_x(ad, slot));
    }
    out << "\n";
  }

  out << "Subject To\n";
  for (int slot = 1; slot <= k; ++slot) {
    if (n == 0 && !min_space) break;  // no variables, nothing to constrain
    out << " cap_" << slot << ": ";
    first = true;
    if (min_space) term(out, first, 1, "F");
    for (int ad = 1; ad <= n; ++ad) {
      const Ad& info = instance.ad(ad);
      term(out, first, min_space ? -info.size : info.size, var_x(ad, slot));
    }
    out << (min_space ? " >= 0\n"
                      : " <= " + std::to_string(instance.capacity()) + "\n");
  }

  for (int ad = 1; ad <= n; ++ad) {
    const Ad& info = instance.ad(ad);
    const int lo = windowed ? info.release : 1;
    const int hi = windowed ? info.deadline : k;
    if (min_space) {
      out << " link_" << ad << ": ";
      first = true;
      for (int slot = lo; slot <= hi; ++slot)
        term(out, first, 1, var_x(ad, slot));
      out << " = " << info.freq_min << "\n";
    } else if (info.freq_min == info.freq_max) {
      out << " link_" << ad << ": ";
      first = true;
      for (int slot = lo; slot <= hi; ++slot)
        term(out, first, 1, var_x(ad, slot));
      term(out, first, -info.freq_min, var_y(ad));
      out << " = 0\n";
    } else {
      out << " linklo_" << ad << ": ";
      first = true;
      for (int slot = lo; slot <= hi; ++slot)
        term(out, first, 1, var_x(ad, slot));
      term(out, first, -info.freq_min, var_y(ad));
      out << " >= 0\n";
      out << " linkhi_" << ad << ": ";
      first = true;
      for (int slot = lo; slot <= hi; ++slot)
        term(out, first, 1, var_x(ad, slot));
      term(out, first, -info.freq_max, var_y(ad));
      out << " <= 0\n";
    }
  }

  if (windowed) {
    for (int ad = 1; ad <= n; ++ad) {
      const Ad& info = instance.ad(ad);
      for (int slot = 1; slot <= k; ++slot) {
        if (slot >= info.release && slot <= info.deadline) continue;
        out << " win_" << ad << "_" << slot << ": " << var_x(ad, slot)
            << " = 0\n";
      }
    }
  }

  if (min_space) out << "Bounds\n F >= 0\n";

  out << "Binary\n";
  for (int ad = 1; ad <= n; ++ad) {
    for (int slot = 1; slot <= k; ++slot) out << ' ' << var_x(ad, slot) << '\n';
  }
  if (!min_space) {
    for (int ad = 1; ad <= n; ++ad) out << ' ' << var_y(ad) << '\n';
  }
  out << "End\n";
}

}  // namespace maxspace
