#include "maxspace/schedule.hpp"

#include <algorithm>
#include <stdexcept>

#include "maxspace/core.hpp"

namespace maxspace {

namespace {

std::string describe_kind(ProblemKind kind) {
  return kind == ProblemKind::MaxSpace ? "maxspace" : "rdwv";
}

void require(bool condition, const std::string& message) {
  if (!condition) throw std::invalid_argument(message);
}

}  // namespace

Instance::Instance(ProblemKind kind, int slot_count, int capacity,
                   std::vector<Ad> ads)
    : kind_(kind), slot_count_(slot_count), capacity_(capacity),
      ads_(std::move(ads)) {
  require(slot_count_ >= 1, "instance: slot count must be >= 1");
  require(capacity_ >= 1, "instance: capacity must be >= 1");
  for (std::size_t i = 0; i < ads_.size(); ++i) {
    Ad& ad = ads_[i];
    ad.id = static_cast<int>(i) + 1;
    const std::string who = "ad " + std::to_string(ad.id);
    require(ad.size >= 1, who + ": size must be >= 1");
    require(ad.value >= 1, who + ": value must be >= 1");
    require(1 <= ad.freq_min && ad.freq_min <= ad.freq_max,
            who + ": frequency bounds must satisfy 1 <= min <= max");
    require(1 <= ad.release && ad.release <= ad.deadline &&
                ad.deadline <= slot_count_,
            who + ": window must satisfy 1 <= release <= deadline <= K");
    require(ad.window_len() >= ad.freq_min,
            who + ": window shorter than minimum frequency");
    if (kind_ == ProblemKind::MaxSpace) {
      require(ad.freq_min == ad.freq_max,
              who + ": maxspace ads need a fixed frequency");
      require(ad.value == ad.size, who + ": maxspace ads need value = size");
      require(ad.release == 1 && ad.deadline == slot_count_,
              who + ": maxspace ads span all slots");
    }
  }
  maxspace_like_ = true;
  for (const Ad& ad : ads_) {
    if (ad.freq_min != ad.freq_max || ad.value != ad.size || ad.release != 1 ||
        ad.deadline != slot_count_) {
      maxspace_like_ = false;
      break;
    }
  }
}

Instance Instance::as_rdwv() const {
  require(kind_ == ProblemKind::MaxSpace,
          "as_rdwv: instance is already " + describe_kind(kind_));
  return Instance(ProblemKind::MaxSpaceRdwv, slot_count_, capacity_, ads_);
}

MoveKind kind_of(const Move& move) {
  struct Visitor {
    MoveKind operator()(const AddMove&) const { return MoveKind::Add; }
    MoveKind operator()(const ChgMove&) const { return MoveKind::Chg; }
    MoveKind operator()(const RpckMove&) const { return MoveKind::Rpck; }
    MoveKind operator()(const AddCpyMove&) const { return MoveKind::AddCpy; }
    MoveKind operator()(const MvMove&) const { return MoveKind::Mv; }
  };
  return std::visit(Visitor{}, move);
}

std::string to_string(const Move& move) {
  struct Visitor {
    std::string operator()(const AddMove& m) const {
      return "add(" + std::to_string(m.ad) + ")";
    }
    std::string operator()(const ChgMove& m) const {
      return "chg(" + std::to_string(m.ad_out) + "," +
             std::to_string(m.ad_in) + ")";
    }
    std::string operator()(const RpckMove& m) const {
      return "rpck(" + std::to_string(m.ad_a) + "." +
             std::to_string(m.copy_a) + "," + std::to_string(m.ad_b) + "." +
             std::to_string(m.copy_b) + ")";
    }
    std::string operator()(const AddCpyMove& m) const {
      return "addcpy(" + std::to_string(m.ad) + "." + std::to_string(m.copy) +
             "->" + std::to_string(m.slot) + ")";
    }
    std::string operator()(const MvMove& m) const {
      return "mv(" + std::to_string(m.ad) + "." + std::to_string(m.copy) +
             "->" + std::to_string(m.slot) + ")";
    }
  };
  return std::visit(Visitor{}, move);
}

Schedule::Schedule(const Instance& instance)
    : instance_(&instance),
      placement_(static_cast<std::size_t>(instance.ad_count()) + 1),
      slot_ads_(static_cast<std::size_t>(instance.slot_count()) + 1),
      loads_(static_cast<std::size_t>(instance.slot_count()) + 1, 0),
      tree_(instance.slot_count(), instance.capacity()) {
  const std::int64_t cap = instance.capacity();
  squared_slack_ = cap * cap * instance.slot_count();
}

bool Schedule::slot_contains(int slot, int ad) const {
  const auto& ads = slot_ads_[static_cast<std::size_t>(slot)];
  return std::binary_search(ads.begin(), ads.end(), ad);
}

void Schedule::add_copy(int ad, int slot) {
  require(1 <= ad && ad <= instance_->ad_count(),
          "add_copy: ad id out of range");
  require(1 <= slot && slot <= instance_->slot_count(),
          "add_copy: slot out of range");
  auto& slots = placement_[static_cast<std::size_t>(ad)];
  auto pos = std::lower_bound(slots.begin(), slots.end(), slot);
  require(pos == slots.end() || *pos != slot,
          "add_copy: ad " + std::to_string(ad) + " already in slot " +
              std::to_string(slot));
  slots.insert(pos, slot);

  auto& ads = slot_ads_[static_cast<std::size_t>(slot)];
  ads.insert(std::lower_bound(ads.begin(), ads.end(), ad), ad);

  const Ad& info = instance_->ad(ad);
  const std::int64_t cap = instance_->capacity();
  int& load = loads_[static_cast<std::size_t>(slot)];
  const std::int64_t old_gap = cap - load;
  load += info.size;
  const std::int64_t new_gap = cap - load;
  squared_slack_ += new_gap * new_gap - old_gap * old_gap;
  primary_value_ += info.value;
  tree_.point_update(slot, load);
}

void Schedule::remove_copy(int ad, int slot) {
  require(1 <= ad && ad <= instance_->ad_count(),
          "remove_copy: ad id out of range");
  require(1 <= slot && slot <= instance_->slot_count(),
          "remove_copy: slot out of range");
  auto& slots = placement_[static_cast<std::size_t>(ad)];
  auto pos = std::lower_bound(slots.begin(), slots.end(), slot);
  require(pos != slots.end() && *pos == slot,
          "remove_copy: ad " + std::to_string(ad) + " has no copy in slot " +
              std::to_string(slot));
  slots.erase(pos);

  auto& ads = slot_ads_[static_cast<std::size_t>(slot)];
  ads.erase(std::lower_bound(ads.begin(), ads.end(), ad));

  const Ad& info = instance_->ad(ad);
  const std::int64_t cap = instance_->capacity();
  int& load = loads_[static_cast<std::size_t>(slot)];
  const std::int64_t old_gap = cap - load;
  load -= info.size;
  const std::int64_t new_gap = cap - load;
  squared_slack_ += new_gap * new_gap - old_gap * old_gap;
  primary_value_ -= info.value;
  tree_.point_update(slot, load);
}

void Schedule::clear() {
  for (int ad = 1; ad <= instance_->ad_count(); ++ad)
    placement_[static_cast<std::size_t>(ad)].clear();
  for (int slot = 1; slot <= instance_->slot_count(); ++slot) {
    slot_ads_[static_cast<std::size_t>(slot)].clear();
    loads_[static_cast<std::size_t>(slot)] = 0;
    tree_.point_update(slot, 0);
  }
  primary_value_ = 0;
  const std::int64_t cap = instance_->capacity();
  squared_slack_ = cap * cap * instance_->slot_count();
}

FeasibilityReport Schedule::check_feasible() const {
  FeasibilityReport report;
  const int k = instance_->slot_count();
  const int cap = instance_->capacity();

  for (int slot = 1; slot <= k; ++slot) {
    if (loads_[static_cast<std::size_t>(slot)] > cap) {
      report.violation = FeasibilityReport::Violation::SlotOverflow;
      report.slot = slot;
      report.message = "slot " + std::to_string(slot) + " load " +
                       std::to_string(loads_[static_cast<std::size_t>(slot)]) +
                       " exceeds capacity " + std::to_string(cap);
      return report;
    }
  }

  for (int ad = 1; ad <= instance_->ad_count(); ++ad) {
    const auto& slots = placement_[static_cast<std::size_t>(ad)];
    for (std::size_t i = 1; i < slots.size(); ++i) {
      if (slots[i] == slots[i - 1]) {
        report.violation = FeasibilityReport::Violation::DuplicateCopy;
        report.ad = ad;
        report.slot = slots[i];
        report.message = "ad " + std::to_string(ad) +
                         " appears twice in slot " + std::to_string(slots[i]);
        return report;
      }
    }
  }

  for (int ad = 1; ad <= instance_->ad_count(); ++ad) {
    const Ad& info = instance_->ad(ad);
    for (int slot : placement_[static_cast<std::size_t>(ad)]) {
      if (slot < info.release || slot > info.deadline) {
        report.violation = FeasibilityReport::Violation::WindowViolation;
        report.ad = ad;
        report.slot = slot;
        report.message = "ad " + std::to_string(ad) + " placed in slot " +
                         std::to_string(slot) + " outside window [" +
                         std::to_string(info.release) + "," +
                         std::to_string(info.deadline) + "]";
        return report;
      }
    }
  }

  for (int ad = 1; ad <= instance_->ad_count(); ++ad) {
    const Ad& info = instance_->ad(ad);
    const int copies = copy_count(ad);
    if (copies != 0 && (copies < info.freq_min || copies > info.freq_max)) {
      report.violation = FeasibilityReport::Violation::FrequencyViolation;
      report.ad = ad;
      report.message = "ad " + std::to_string(ad) + " has " +
                       std::to_string(copies) + " copies, bounds [" +
                       std::to_string(info.freq_min) + "," +
                       std::to_string(info.freq_max) + "]";
      return report;
    }
  }

  return report;
}

std::vector<int> Schedule::fit_slots(int ad) const {
  const Ad& info = instance_->ad(ad);
  const int cap = instance_->capacity();
  std::vector<int> chosen;
  for (int slot = info.release; slot <= info.deadline; ++slot) {
    if (loads_[static_cast<std::size_t>(slot)] + info.size > cap) continue;
    if (slot_contains(slot, ad)) continue;
    chosen.push_back(slot);
    if (static_cast<int>(chosen.size()) == info.freq_max) break;
  }
  if (static_cast<int>(chosen.size()) < info.freq_min) chosen.clear();
  return chosen;
}

bool Schedule::logically_equal(const Schedule& other) const {
  return instance_ == other.instance_ && placement_ == other.placement_ &&
         slot_ads_ == other.slot_ads_ && loads_ == other.loads_ &&
         primary_value_ == other.primary_value_ &&
         squared_slack_ == other.squared_slack_;
}

namespace {

struct Applier {
  Schedule& s;

  DeltaRecord operator()(const AddMove& m) {
    require(!s.is_scheduled(m.ad), "apply add: ad already scheduled");
    DeltaRecord rec{Move{m}, 0, 0, s.fit_slots(m.ad), {}};
    require(!rec.placed.empty(), "apply add: ad does not fit");
    for (int slot : rec.placed) s.add_copy(m.ad, slot);
    return rec;
  }

  DeltaRecord operator()(const ChgMove& m) {
    require(m.ad_out != m.ad_in, "apply chg: ads must differ");
    require(s.is_scheduled(m.ad_out), "apply chg: outgoing ad not scheduled");
    require(!s.is_scheduled(m.ad_in), "apply chg: incoming ad scheduled");
    DeltaRecord rec{Move{m}, 0, 0, {}, s.placement(m.ad_out)};
    for (int slot : rec.removed) s.remove_copy(m.ad_out, slot);
    rec.placed = s.fit_slots(m.ad_in);
    if (rec.placed.empty()) {
      for (int slot : rec.removed) s.add_copy(m.ad_out, slot);
      throw std::invalid_argument("apply chg: incoming ad does not fit");
    }
    for (int slot : rec.placed) s.add_copy(m.ad_in, slot);
    return rec;
  }

  DeltaRecord operator()(const RpckMove& m) {
    require(m.ad_a != m.ad_b, "apply rpck: ads must differ");
    validate_copy(m.ad_a, m.copy_a, "rpck");
    validate_copy(m.ad_b, m.copy_b, "rpck");
    const int slot_a =
        s.placement(m.ad_a)[static_cast<std::size_t>(m.copy_a) - 1];
    const int slot_b =
        s.placement(m.ad_b)[static_cast<std::size_t>(m.copy_b) - 1];
    require(slot_a != slot_b, "apply rpck: copies share a slot");
    const Ad& a = s.instance().ad(m.ad_a);
    const Ad& b = s.instance().ad(m.ad_b);
    require(a.release <= slot_b && slot_b <= a.deadline,
            "apply rpck: destination outside window of first ad");
    require(b.release <= slot_a && slot_a <= b.deadline,
            "apply rpck: destination outside window of second ad");
    require(!s.slot_contains(slot_b, m.ad_a),
            "apply rpck: first ad already in destination");
    require(!s.slot_contains(slot_a, m.ad_b),
            "apply rpck: second ad already in destination");
    const int cap = s.instance().capacity();
    require(s.load(slot_a) - a.size + b.size <= cap &&
                s.load(slot_b) - b.size + a.size <= cap,
            "apply rpck: swap exceeds capacity");
    DeltaRecord rec{Move{m}, 0, 0, {slot_b, slot_a}, {slot_a, slot_b}};
    s.remove_copy(m.ad_a, slot_a);
    s.remove_copy(m.ad_b, slot_b);
    s.add_copy(m.ad_a, slot_b);
    s.add_copy(m.ad_b, slot_a);
    return rec;
  }

  DeltaRecord operator()(const AddCpyMove& m) {
    const Ad& info = s.instance().ad(m.ad);
    require(s.is_scheduled(m.ad), "apply addcpy: ad not scheduled");
    require(s.copy_count(m.ad) < info.freq_max,
            "apply addcpy: ad already at maximum frequency");
    require(m.copy == s.copy_count(m.ad) + 1,
            "apply addcpy: stale copy index");
    require(info.release <= m.slot && m.slot <= info.deadline,
            "apply addcpy: slot outside window");
    require(!s.slot_contains(m.slot, m.ad), "apply addcpy: duplicate copy");
    require(s.load(m.slot) + info.size <= s.instance().capacity(),
            "apply addcpy: slot overflow");
    DeltaRecord rec{Move{m}, 0, 0, {m.slot}, {}};
    s.add_copy(m.ad, m.slot);
    return rec;
  }

  DeltaRecord operator()(const MvMove& m) {
    validate_copy(m.ad, m.copy, "mv");
    const int from = s.placement(m.ad)[static_cast<std::size_t>(m.copy) - 1];
    require(from != m.slot, "apply mv: identity move");
    const Ad& info = s.instance().ad(m.ad);
    require(info.release <= m.slot && m.slot <= info.deadline,
            "apply mv: slot outside window");
    require(!s.slot_contains(m.slot, m.ad), "apply mv: duplicate copy");
    require(s.load(m.slot) + info.size <= s.instance().capacity(),
            "apply mv: slot overflow");
    DeltaRecord rec{Move{m}, 0, 0, {m.slot}, {from}};
    s.remove_copy(m.ad, from);
    s.add_copy(m.ad, m.slot);
    return rec;
  }

  void validate_copy(int ad, int copy, const char* what) const {
    require(s.is_scheduled(ad),
            std::string("apply ") + what + ": ad not scheduled");
    require(1 <= copy && copy <= s.copy_count(ad),
            std::string("apply ") + what + ": copy index out of range");
  }
};

}  // namespace

DeltaRecord apply_move(Schedule& schedule, const Move& move) {
  const std::int64_t primary_before = schedule.primary_value();
  const std::int64_t slack_before = schedule.squared_slack();
  DeltaRecord rec = std::visit(Applier{schedule}, move);
  rec.primary_delta = schedule.primary_value() - primary_before;
  rec.slack_delta = schedule.squared_slack() - slack_before;
  return rec;
}

void revert_move(Schedule& schedule, const DeltaRecord& record) {
  struct Visitor {
    Schedule& s;
    const DeltaRecord& rec;

    void operator()(const AddMove& m) const {
      for (int slot : rec.placed) s.remove_copy(m.ad, slot);
    }
    void operator()(const ChgMove& m) const {
      for (int slot : rec.placed) s.remove_copy(m.ad_in, slot);
      for (int slot : rec.removed) s.add_copy(m.ad_out, slot);
    }
    void operator()(const RpckMove& m) const {
      // placed = {slot_b, slot_a}, removed = {slot_a, slot_b}
      s.remove_copy(m.ad_a, rec.placed[0]);
      s.remove_copy(m.ad_b, rec.placed[1]);
      s.add_copy(m.ad_a, rec.removed[0]);
      s.add_copy(m.ad_b, rec.removed[1]);
    }
    void operator()(const AddCpyMove& m) const {
      s.remove_copy(m.ad, rec.placed[0]);
    }
    void operator()(const MvMove& m) const {
      s.remove_copy(m.ad, rec.placed[0]);
      s.add_copy(m.ad, rec.removed[0]);
    }
  };
  std::visit(Visitor{schedule, record}, record.move);
}

}  // namespace maxspace
