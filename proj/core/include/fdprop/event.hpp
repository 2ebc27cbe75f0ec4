#ifndef FDPROP_EVENT_HPP
#define FDPROP_EVENT_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fdprop/domain.hpp"
#include "fdprop/var.hpp"

namespace fdprop {

// Event kinds as mask bits. bc is the derived disjunction lbc|ubc.
using EvMask = std::uint8_t;
inline constexpr EvMask EV_FIX = 1;
inline constexpr EvMask EV_LBC = 2;
inline constexpr EvMask EV_UBC = 4;
inline constexpr EvMask EV_DMC = 8;
inline constexpr EvMask EV_BC = EV_LBC | EV_UBC;
inline constexpr EvMask EV_ALL = EV_FIX | EV_LBC | EV_UBC | EV_DMC;
inline constexpr int kNumEventKinds = 4;

inline int event_kind_index(EvMask single) {
  switch (single) {
    case EV_FIX: return 0;
    case EV_LBC: return 1;
    case EV_UBC: return 2;
    default: return 3;
  }
}
inline EvMask event_kind_bit(int idx) { return EvMask(1u << idx); }

// Exact events of one strict change: fix iff size drops to 1 from >1,
// lbc iff inf rises, ubc iff sup falls, dmc iff any strict change.
EvMask classify(const ChangeRec& rec);

std::string event_mask_str(EvMask m);

// The events(D, D') of one or more changes, as per-variable masks.
// Union of batches realizes the event-composition law.
class EventBatch {
 public:
  void add(VarId x, EvMask m);
  void add(const ChangeRec& rec) { add(rec.var, classify(rec)); }
  void merge(const EventBatch& o);

  bool empty() const { return evs_.empty(); }
  EvMask mask_of(VarId x) const;
  const std::vector<std::pair<VarId, EvMask>>& entries() const { return evs_; }

  bool operator==(const EventBatch&) const = default;

 private:
  std::vector<std::pair<VarId, EvMask>> evs_;  // sorted by var
};

// events(D, D') computed from whole domains (test oracle for the batch
// accumulated from individual tighten records).
EventBatch events_between(const Domain& before, const Domain& after);

// Which events the engine can distinguish. Coarser levels widen finer
// subscriptions; a request never representable at the level degrades to
// dmc (any change on the variable schedules the propagator).
enum class EventLevel { None, Fix, FixBc, FixLbcUbc, FixBcDmc };

EvMask widen(EvMask requested, EventLevel level);

const char* to_string(EventLevel level);

}  // namespace fdprop

#endif
