#include "maxspace/instances.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "maxspace/rng.hpp"

namespace maxspace {

namespace {

bool skippable(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;  // blank
}

// Reads physical lines, tracking numbers for error messages.
struct LineReader {
  std::istream& in;
  int number = 0;

  bool next(std::string& line) {
    while (std::getline(in, line)) {
      ++number;
      if (!skippable(line)) return true;
    }
    return false;
  }
};

std::vector<long long> parse_ints(const std::string& line, int line_number) {
  std::istringstream fields(line);
  std::vector<long long> values;
  long long v;
  while (fields >> v) values.push_back(v);
  std::string rest;
  if (fields.clear(), fields >> rest)
    throw ParseError(line_number, "unexpected token '" + rest + "'");
  return values;
}

int checked_int(long long v, const char* what, int line_number) {
  if (v < -2000000000LL || v > 2000000000LL)
    throw ParseError(line_number, std::string(what) + " out of range");
  return static_cast<int>(v);
}

}  // namespace

Instance read_instance(std::istream& in) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "empty instance file");

  std::istringstream header(line);
  std::string kind_token;
  long long n = 0, k = 0, l = 0;
  if (!(header >> kind_token >> n >> k >> l))
    throw ParseError(reader.number, "expected header 'kind n K L'");
  ProblemKind kind;
  if (kind_token == "maxspace") kind = ProblemKind::MaxSpace;
  else if (kind_token == "rdwv") kind = ProblemKind::MaxSpaceRdwv;
  else
    throw ParseError(reader.number,
                     "unknown problem kind '" + kind_token + "'");
  const int ad_count = checked_int(n, "ad count", reader.number);
  const int slot_count = checked_int(k, "slot count", reader.number);
  const int capacity = checked_int(l, "capacity", reader.number);
  if (ad_count < 0) throw ParseError(reader.number, "negative ad count");

  std::vector<Ad> ads;
  ads.reserve(static_cast<std::size_t>(ad_count));
  for (int i = 0; i < ad_count; ++i) {
    if (!reader.next(line))
      throw ParseError(reader.number + 1,
                       "expected " + std::to_string(ad_count) +
                           " ad lines, got " + std::to_string(i));
    const auto fields = parse_ints(line, reader.number);
    Ad ad;
    if (fields.size() == 2 && kind == ProblemKind::MaxSpace) {
      ad.size = checked_int(fields[0], "size", reader.number);
      ad.value = ad.size;
      ad.freq_min = ad.freq_max =
          checked_int(fields[1], "frequency", reader.number);
      ad.release = 1;
      ad.deadline = slot_count;
    } else if (fields.size() == 6) {
      ad.size = checked_int(fields[0], "size", reader.number);
      ad.value = checked_int(fields[1], "value", reader.number);
      ad.freq_min = checked_int(fields[2], "freq_min", reader.number);
      ad.freq_max = checked_int(fields[3], "freq_max", reader.number);
      ad.release = checked_int(fields[4], "release", reader.number);
      ad.deadline = checked_int(fields[5], "deadline", reader.number);
    } else {
      throw ParseError(reader.number,
                       kind == ProblemKind::MaxSpace
                           ? "expected 's w' or 's v wmin wmax r d'"
                           : "expected 's v wmin wmax r d'");
    }
    ads.push_back(ad);
  }
  if (reader.next(line))
    throw ParseError(reader.number, "trailing content after last ad");

  try {
    return Instance(kind, slot_count, capacity, std::move(ads));
  } catch (const std::invalid_argument& e) {
    throw ParseError(reader.number, e.what());
  }
}

Instance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open instance file: " + path);
  return read_instance(in);
}

void write_instance(const Instance& instance, std::ostream& out) {
  const bool short_form = instance.kind() == ProblemKind::MaxSpace;
  out << (short_form ? "maxspace" : "rdwv") << ' ' << instance.ad_count()
      << ' ' << instance.slot_count() << ' ' << instance.capacity() << '\n';
  for (const Ad& ad : instance.ads()) {
    if (short_form) {
      out << ad.size << ' ' << ad.freq_min << '\n';
    } else {
      out << ad.size << ' ' << ad.value << ' ' << ad.freq_min << ' '
          << ad.freq_max << ' ' << ad.release << ' ' << ad.deadline << '\n';
    }
  }
}

std::string write_instance_string(const Instance& instance) {
  std::ostringstream out;
  write_instance(instance, out);
  return out.str();
}

namespace {

struct Interval {
  int lo;
  int hi;
};

Interval size_interval(SizeClass cls, int capacity) {
  const int quarter = capacity / 4;
  const int half = capacity / 2;
  switch (cls) {
    case SizeClass::Small:
      return {1, std::max(1, quarter)};
    case SizeClass::Medium:
      return {quarter + 1, half};
    case SizeClass::Large:
    default:
      return {half + 1, capacity};
  }
}

Interval freq_min_interval(FreqClass cls) {
  switch (cls) {
    case FreqClass::Infrequent:
      return {1, 5};
    case FreqClass::MediumFreq:
      return {11, 15};
    case FreqClass::VeryFrequent:
    default:
      return {21, 25};
  }
}

Interval freq_max_interval(FreqClass cls) {
  switch (cls) {
    case FreqClass::Infrequent:
      return {6, 10};
    case FreqClass::MediumFreq:
      return {16, 20};
    case FreqClass::VeryFrequent:
    default:
      return {26, 30};
  }
}

int draw(Rng& rng, Interval iv) {
  return static_cast<int>(rng.uniform_int(iv.lo, iv.hi));
}

}  // namespace

Instance generate(const GeneratorSpec& spec) {
  if (spec.ad_count < 1 || spec.slot_count < 1 || spec.capacity < 1)
    throw std::invalid_argument("generate: dimensions must be positive");
  const Interval wmin_iv = freq_min_interval(spec.freq_class);
  const Interval wmax_iv = freq_max_interval(spec.freq_class);
  if (spec.as_maxspace) {
    if (wmax_iv.hi > spec.slot_count)
      throw std::invalid_argument(
          "generate: frequency class infeasible for K (w may exceed K)");
  } else if (spec.window_class == WindowClass::Random) {
    if (wmin_iv.hi > spec.slot_count - 1)
      throw std::invalid_argument(
          "generate: frequency class infeasible for K (needs K - wmin >= 1)");
  } else if (wmin_iv.hi > spec.slot_count) {
    throw std::invalid_argument(
        "generate: frequency class infeasible for K (wmin may exceed K)");
  }

  Rng rng(spec.seed);
  const Interval size_iv = size_interval(spec.size_class, spec.capacity);
  std::vector<Ad> ads;
  ads.reserve(static_cast<std::size_t>(spec.ad_count));
  for (int i = 0; i < spec.ad_count; ++i) {
    Ad ad;
    ad.size = draw(rng, size_iv);
    if (spec.as_maxspace) {
      ad.value = ad.size;
      ad.freq_min = ad.freq_max = draw(rng, {wmin_iv.lo, wmax_iv.hi});
      ad.release = 1;
      ad.deadline = spec.slot_count;
    } else {
      ad.value = spec.profit_class == ProfitClass::SizeLinked
                     ? ad.size
                     : draw(rng, {1, 100});
      ad.freq_min = draw(rng, wmin_iv);
      ad.freq_max = draw(rng, wmax_iv);
      if (spec.window_class == WindowClass::Random) {
        ad.release = draw(rng, {1, spec.slot_count - ad.freq_min});
        ad.deadline = draw(rng, {ad.release + ad.freq_min, spec.slot_count});
      } else {
        ad.release = 1;
        ad.deadline = spec.slot_count;
      }
    }
    ads.push_back(ad);
  }
  const ProblemKind kind = spec.as_maxspace ? ProblemKind::MaxSpace
                                            : ProblemKind::MaxSpaceRdwv;
  return Instance(kind, spec.slot_count, spec.capacity, std::move(ads));
}

std::array<Dims, 4> reference_dims() {
  return {Dims{100, 75, 50}, Dims{500, 250, 100}, Dims{1000, 500, 250},
          Dims{10000, 500, 200}};
}

Instance from_bpplib(std::istream& in, BpplibClassHint hint) {
  LineReader reader{in};
  std::string line;
  if (!reader.next(line)) throw ParseError(1, "empty file");
  auto fields = parse_ints(line, reader.number);
  if (fields.size() != 1)
    throw ParseError(reader.number, "expected the item count alone");
  const int item_count = checked_int(fields[0], "item count", reader.number);
  if (item_count < 1) throw ParseError(reader.number, "no items");

  if (!reader.next(line))
    throw ParseError(reader.number + 1, "missing capacity line");
  fields = parse_ints(line, reader.number);
  if (fields.size() != 1)
    throw ParseError(reader.number, "expected the capacity alone");
  const int capacity = checked_int(fields[0], "capacity", reader.number);
  if (capacity < 1) throw ParseError(reader.number, "capacity must be >= 1");

  std::vector<std::pair<int, int>> items;  // (length, demand)
  long long demand_sum = 0;
  long long weighted_sum = 0;
  for (int i = 0; i < item_count; ++i) {
    if (!reader.next(line))
      throw ParseError(reader.number + 1,
                       "expected " + std::to_string(item_count) +
                           " item lines, got " + std::to_string(i));
    fields = parse_ints(line, reader.number);
    if (fields.empty() || fields.size() > 2)
      throw ParseError(reader.number, "expected 'length' or 'length demand'");
    const int length = checked_int(fields[0], "length", reader.number);
    const int demand =
        fields.size() == 2 ? checked_int(fields[1], "demand", reader.number)
                           : 1;
    if (length < 1) throw ParseError(reader.number, "length must be >= 1");
    if (demand < 1) throw ParseError(reader.number, "demand must be >= 1");
    items.emplace_back(length, demand);
    demand_sum += demand;
    weighted_sum += static_cast<long long>(length) * demand;
  }

  long long slot_count;
  if (hint == BpplibClassHint::FalkenauerTriples) {
    if (demand_sum % 3 != 0)
      throw ParseError(reader.number,
                       "triple files need a demand sum divisible by 3");
    slot_count = demand_sum / 3;
  } else {
    slot_count = (weighted_sum + capacity - 1) / capacity;
  }
  if (slot_count < 1) slot_count = 1;
  if (slot_count > 2000000)
    throw ParseError(reader.number, "slot count out of range");
  const int k = static_cast<int>(slot_count);

  std::vector<Ad> ads;
  ads.reserve(items.size());
  for (const auto& [length, demand] : items) {
    Ad ad;
    ad.size = length;
    ad.value = length;
    ad.freq_min = ad.freq_max = std::min(demand, k);
    ad.release = 1;
    ad.deadline = k;
    ads.push_back(ad);
  }
  return Instance(ProblemKind::MaxSpace, k, capacity, std::move(ads));
}

Instance from_bpplib_file(const std::string& path, BpplibClassHint hint) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return from_bpplib(in, hint);
}

void write_solution(const Schedule& schedule, std::ostream& out) {
  for (int slot = 1; slot <= schedule.instance().slot_count(); ++slot) {
    const auto& ads = schedule.slot_ads(slot);
    if (ads.empty()) continue;
    out << "slot " << slot << ':';
    for (int ad : ads) out << ' ' << ad;
    out << '\n';
  }
  out << "value=" << schedule.primary_value() << '\n';
}

Schedule read_solution(const Instance& instance, std::istream& in) {
  Schedule schedule(instance);
  LineReader reader{in};
  std::string line;
  bool saw_value = false;
  while (reader.next(line)) {
    if (line.rfind("value=", 0) == 0) {
      const long long declared = std::stoll(line.substr(6));
      if (declared != schedule.primary_value())
        throw ParseError(reader.number,
                         "declared value " + std::to_string(declared) +
                             " does not match placements");
      saw_value = true;
      continue;
    }
    std::istringstream fields(line);
    std::string word;
    int slot;
    char colon;
    if (!(fields >> word >> slot >> std::noskipws >> colon) ||
        word != "slot" || colon != ':')
      throw ParseError(reader.number, "expected 'slot <j>: id id ...'");
    fields >> std::skipws;
    int ad;
    while (fields >> ad) {
      try {
        schedule.add_copy(ad, slot);
      } catch (const std::invalid_argument& e) {
        throw ParseError(reader.number, e.what());
      }
    }
  }
  if (!saw_value) throw ParseError(reader.number, "missing value trailer");
  return schedule;
}

}  // namespace maxspace
