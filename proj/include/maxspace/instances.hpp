#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "maxspace/core.hpp"
#include "maxspace/schedule.hpp"

namespace maxspace {

// Canonical instance text format.
//
//   line 1:  kind n K L          kind is "maxspace" or "rdwv"
//   then n ad lines, one per ad:
//     maxspace   s w                         (short form)
//     rdwv       s v wmin wmax r d
//
// maxspace ad lines may also use the six-field form as long as the fields
// satisfy the fixed-frequency restrictions. Blank lines and lines starting
// with '#' are skipped on input; the writer never emits them, so writing a
// loaded canonical file reproduces it byte for byte.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

Instance read_instance(std::istream& in);
Instance read_instance_file(const std::string& path);
void write_instance(const Instance& instance, std::ostream& out);
std::string write_instance_string(const Instance& instance);

// Random instance generation: ads are drawn i.i.d. uniformly from the class
// intervals below (all ends inclusive), deterministically per seed.
//
//   size    Small [1, L/4]   Medium (L/4, L/2]   Large (L/2, L]
//           with L/4 and L/2 rounded down, so the classes tile [1, L]
//   freq    Infrequent   wmin [1, 5]    wmax [6, 10]
//           MediumFreq   wmin [11, 15]  wmax [16, 20]
//           VeryFrequent wmin [21, 25]  wmax [26, 30]
//   profit  SizeLinked v = s            Random v in [1, 100]
//   window  None r = 1, d = K           Random r in [1, K - wmin],
//                                       then d in [r + wmin, K]
//
// Per-ad draw order: s, v (Random profit only), wmin, wmax, r, d (Random
// window only). With as_maxspace set the generator instead draws a single
// frequency w uniformly from [wmin lo, wmax hi] of the class and emits a
// fixed-frequency instance (v = s, full window).
enum class SizeClass { Small, Medium, Large };
enum class FreqClass { Infrequent, MediumFreq, VeryFrequent };
enum class ProfitClass { SizeLinked, Random };
enum class WindowClass { None, Random };

struct GeneratorSpec {
  SizeClass size_class = SizeClass::Small;
  FreqClass freq_class = FreqClass::Infrequent;
  ProfitClass profit_class = ProfitClass::SizeLinked;
  WindowClass window_class = WindowClass::None;
  int ad_count = 100;
  int slot_count = 75;
  int capacity = 50;
  std::uint64_t seed = 0;
  bool as_maxspace = false;
};

// Throws std::invalid_argument when the frequency class cannot fit the slot
// count (a windowed wmin needs K - wmin >= 1; a full-window one wmin <= K).
Instance generate(const GeneratorSpec& spec);

// The four stock (n, K, L) dimensions used by the benchmark batches.
struct Dims {
  int ad_count;
  int slot_count;
  int capacity;
};
std::array<Dims, 4> reference_dims();

// Cutting-stock / bin-packing text: an item-count line, a capacity line,
// then one "length demand" line per item (plain bin-packing files omit the
// demand, which defaults to 1). Mapping: L = capacity, s = length,
// w = min(demand, K), value = size, full window. K is the demand sum divided
// by three for Falkenauer triple files (must divide evenly) and
// ceil(sum of length*demand / L) otherwise.
enum class BpplibClassHint { FalkenauerTriples, Other };
Instance from_bpplib(std::istream& in, BpplibClassHint hint);
Instance from_bpplib_file(const std::string& path, BpplibClassHint hint);

// Solution text: one "slot j: id id ..." line per non-empty slot, then a
// "value=<int>" trailer.
void write_solution(const Schedule& schedule, std::ostream& out);
Schedule read_solution(const Instance& instance, std::istream& in);

}  // namespace maxspace
