#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace maxspace {

// The five local-search moves. Copy indices are 1-based positions in the
// ad's sorted slot list at the time the move is built.

struct AddMove {
  int ad;  // unscheduled ad, placed by first-fit

  bool operator==(const AddMove&) const = default;
};

struct ChgMove {
  int ad_out;  // scheduled ad, loses all copies
  int ad_in;   // unscheduled ad, placed by first-fit afterwards

  bool operator==(const ChgMove&) const = default;
};

struct RpckMove {
  int ad_a;
  int copy_a;
  int ad_b;
  int copy_b;  // the two copies swap slots

  bool operator==(const RpckMove&) const = default;
};

struct AddCpyMove {
  int ad;
  int copy;  // index the new copy will take, i.e. current count + 1
  int slot;

  bool operator==(const AddCpyMove&) const = default;
};

struct MvMove {
  int ad;
  int copy;
  int slot;  // destination

  bool operator==(const MvMove&) const = default;
};

using Move = std::variant<AddMove, ChgMove, RpckMove, AddCpyMove, MvMove>;

enum class MoveKind { Add, Chg, Rpck, AddCpy, Mv };

MoveKind kind_of(const Move& move);
std::string to_string(const Move& move);

// Everything needed to undo one applied move and to account for it: exact
// objective deltas plus the slots that gained or lost a copy.
//
// Slot bookkeeping per kind:
//   Add     placed = slots that received the ad
//   AddCpy  placed = {slot}
//   Mv      removed = {from}, placed = {to}
//   Chg     removed = ad_out's former slots, placed = ad_in's new slots
//   Rpck    removed = {slot of copy a, slot of copy b} before the swap,
//           placed  = the same two slots with owners exchanged
struct DeltaRecord {
  Move move;
  std::int64_t primary_delta = 0;
  std::int64_t slack_delta = 0;
  std::vector<int> placed;
  std::vector<int> removed;
};

}  // namespace maxspace
