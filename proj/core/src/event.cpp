#include "fdprop/event.hpp"

#include <algorithm>

namespace fdprop {

EvMask classify(const ChangeRec& rec) {
  if (!rec.changed()) return 0;
  EvMask m = EV_DMC;
  if (rec.new_size == 0) return m | EV_FIX | EV_LBC | EV_UBC;
  if (rec.new_size == 1 && rec.old_size > 1) m |= EV_FIX;
  if (rec.new_min > rec.old_min) m |= EV_LBC;
  if (rec.new_max < rec.old_max) m |= EV_UBC;
  return m;
}

std::string event_mask_str(EvMask m) {
  std::string s;
  auto app = [&](const char* n) {
    if (!s.empty()) s += ",";
    s += n;
  };
  if (m & EV_FIX) app("fix");
  if (m & EV_LBC) app("lbc");
  if (m & EV_UBC) app("ubc");
  if (m & EV_DMC) app("dmc");
  return "{" + s + "}";
}

void EventBatch::add(VarId x, EvMask m) {
  if (m == 0) return;
  auto it = std::lower_bound(
      evs_.begin(), evs_.end(), x,
      [](const auto& e, VarId v) { return e.first < v; });
  if (it != evs_.end() && it->first == x)
    it->second |= m;
  else
    evs_.insert(it, {x, m});
}

void EventBatch::merge(const EventBatch& o) {
  for (const auto& [x, m] : o.evs_) add(x, m);
}

EvMask EventBatch::mask_of(VarId x) const {
  auto it = std::lower_bound(
      evs_.begin(), evs_.end(), x,
      [](const auto& e, VarId v) { return e.first < v; });
  return (it != evs_.end() && it->first == x) ? it->second : 0;
}

EventBatch events_between(const Domain& before, const Domain& after) {
  EventBatch b;
  for (int i = 0; i < before.num_vars(); ++i) {
    VarId x(i);
    const IntSet& s0 = before.at(x);
    const IntSet& s1 = after.at(x);
    if (s0 == s1) continue;
    ChangeRec rec;
    rec.var = x;
    rec.old_size = s0.size();
    rec.new_size = s1.size();
    if (!s0.empty()) {
      rec.old_min = s0.min();
      rec.old_max = s0.max();
    }
    if (!s1.empty()) {
      rec.new_min = s1.min();
      rec.new_max = s1.max();
    }
    b.add(rec);
  }
  return b;
}

EvMask widen(EvMask m, EventLevel level) {
  if (m == 0) return 0;
  switch (level) {
    case EventLevel::None:
      return EV_DMC;
    case EventLevel::Fix:
      if (m & (EV_LBC | EV_UBC | EV_DMC)) return EV_DMC;
      return EV_FIX;
    case EventLevel::FixBc:
    case EventLevel::FixBcDmc:
      if (m & (EV_LBC | EV_UBC)) m |= EV_BC;
      return m;
    case EventLevel::FixLbcUbc:
      return m;
  }
  return m;
}

const char* to_string(EventLevel level) {
  switch (level) {
    case EventLevel::None: return "none";
    case EventLevel::Fix: return "fix";
    case EventLevel::FixBc: return "fix-bc";
    case EventLevel::FixLbcUbc: return "fix-lbc-ubc";
    case EventLevel::FixBcDmc: return "fix-bc-dmc";
  }
  return "?";
}

}  // namespace fdprop
