#include "fdprop/deps.hpp"

#include <algorithm>
#include <cassert>

namespace fdprop {

DependencyTable::DependencyTable(int num_vars)
    : lists_(size_t(num_vars) * kNumEventKinds) {}

void DependencyTable::ensure_props(PropId max_id) {
  if (size_t(max_id) >= subs_.size()) subs_.resize(size_t(max_id) + 1);
}

void DependencyTable::add_one(PropId f, VarId x, int kind) {
  auto& list = lists_[slot(x, kind)];
  auto& subs = subs_[size_t(f)];
  list.push_back({f, std::uint32_t(subs.size())});
  subs.push_back({x, std::uint8_t(kind), std::uint32_t(list.size() - 1)});
}

void DependencyTable::remove_one(PropId f, std::uint32_t sub_idx) {
  auto& subs = subs_[size_t(f)];
  Sub victim = subs[sub_idx];
  auto& list = lists_[slot(victim.var, victim.kind)];
  // swap-remove from the dependent list
  std::uint32_t pos = victim.pos;
  if (pos + 1 != list.size()) {
    list[pos] = list.back();
    subs_[size_t(list[pos].pid)][list[pos].back].pos = pos;
  }
  list.pop_back();
  // swap-remove from f's subscription list
  if (sub_idx + 1 != subs.size()) {
    subs[sub_idx] = subs.back();
    auto& moved = subs[sub_idx];
    lists_[slot(moved.var, moved.kind)][moved.pos].back = sub_idx;
  }
  subs.pop_back();
}

void DependencyTable::subscribe(PropId f, VarId x, EvMask mask) {
  ensure_props(f);
  EvMask have = mask_of(f, x);
  EvMask need = EvMask(mask & ~have);
  for (int k = 0; k < kNumEventKinds; ++k)
    if (need & event_kind_bit(k)) add_one(f, x, k);
}

void DependencyTable::resubscribe(PropId f, const std::vector<EvRequest>& reqs) {
  ensure_props(f);
  auto wanted = [&](VarId x, int kind) {
    for (const EvRequest& r : reqs)
      if (r.var == x && (r.mask & event_kind_bit(kind))) return true;
    return false;
  };
  auto& subs = subs_[size_t(f)];
  for (std::uint32_t i = 0; i < subs.size();) {
    if (!wanted(subs[i].var, subs[i].kind))
      remove_one(f, i);  // swap-remove; re-examine slot i
    else
      ++i;
  }
  for (const EvRequest& r : reqs) subscribe(f, r.var, r.mask);
}

void DependencyTable::unsubscribe_all(PropId f) {
  ensure_props(f);
  auto& subs = subs_[size_t(f)];
  while (!subs.empty()) remove_one(f, std::uint32_t(subs.size() - 1));
}

EvMask DependencyTable::mask_of(PropId f, VarId x) const {
  if (size_t(f) >= subs_.size()) return 0;
  EvMask m = 0;
  for (const Sub& s : subs_[size_t(f)])
    if (s.var == x) m |= event_kind_bit(s.kind);
  return m;
}

std::vector<std::pair<PropId, EvMask>> DependencyTable::dependents(
    const EventBatch& b) const {
  std::vector<std::pair<PropId, EvMask>> acc;
  for (const auto& [x, mask] : b.entries()) {
    if (slot(x, 0) >= lists_.size()) continue;
    for (int k = 0; k < kNumEventKinds; ++k) {
      if (!(mask & event_kind_bit(k))) continue;
      for (const Entry& e : lists_[slot(x, k)])
        acc.emplace_back(e.pid, event_kind_bit(k));
    }
  }
  std::sort(acc.begin(), acc.end());
  std::vector<std::pair<PropId, EvMask>> out;
  for (const auto& [pid, bit] : acc) {
    if (!out.empty() && out.back().first == pid)
      out.back().second |= bit;
    else
      out.emplace_back(pid, bit);
  }
  return out;
}

size_t DependencyTable::subscription_count(PropId f) const {
  if (size_t(f) >= subs_.size()) return 0;
  return subs_[size_t(f)].size();
}

}  // namespace fdprop
