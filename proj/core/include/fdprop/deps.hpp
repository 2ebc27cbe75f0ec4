#ifndef FDPROP_DEPS_HPP
#define FDPROP_DEPS_HPP

#include <cstdint>
#include <vector>

#include "fdprop/event.hpp"
#include "fdprop/var.hpp"

namespace fdprop {

// A subscription request: propagator wants these events on this variable.
struct EvRequest {
  VarId var;
  EvMask mask;
};

// Per-(variable, event kind) lists of subscribed propagators with
// back-indices for O(1) amortized add/remove. A (propagator, variable,
// kind) triple appears at most once.
class DependencyTable {
 public:
  DependencyTable() = default;
  explicit DependencyTable(int num_vars);

  void ensure_props(PropId max_id);

  // Adds the set bits of `mask` that f does not hold yet.
  void subscribe(PropId f, VarId x, EvMask mask);
  // Replaces f's whole subscription by `reqs` (shrink or arbitrary change).
  void resubscribe(PropId f, const std::vector<EvRequest>& reqs);
  void unsubscribe_all(PropId f);

  EvMask mask_of(PropId f, VarId x) const;
  // Ids subscribed to at least one (variable, kind) of the batch, ascending,
  // each with the union of its matched event bits.
  std::vector<std::pair<PropId, EvMask>> dependents(const EventBatch& b) const;

  size_t subscription_count(PropId f) const;

 private:
  struct Entry {
    PropId pid;
    std::uint32_t back;  // index into subs_[pid]
  };
  struct Sub {
    VarId var;
    std::uint8_t kind;   // event kind index
    std::uint32_t pos;   // index into lists_[slot(var, kind)]
  };

  size_t slot(VarId x, int kind) const {
    return size_t(x.idx) * kNumEventKinds + size_t(kind);
  }
  void add_one(PropId f, VarId x, int kind);
  void remove_one(PropId f, std::uint32_t sub_idx);

  std::vector<std::vector<Entry>> lists_;
  std::vector<std::vector<Sub>> subs_;
};

}  // namespace fdprop

#endif
