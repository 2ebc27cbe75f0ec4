#ifndef FDPROP_PROP_HPP
#define FDPROP_PROP_HPP

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdprop/deps.hpp"
#include "fdprop/domain.hpp"
#include "fdprop/event.hpp"

namespace fdprop {

enum class PropStatus {
  Failed,      // domain became false
  Subsumed,    // f(D') = D' for all D' below the current domain
  AtFixpoint,  // f(f(D)) = f(D) shown for this call
  Unknown,
};

const char* to_string(PropStatus s);

// Full 14-level priority spectrum; lower number runs earlier.
namespace prio {
enum : int {
  UnaryHigh = 0,
  UnaryLow,
  BinaryHigh,
  BinaryLow,
  TernaryHigh,
  TernaryLow,
  LinearHigh,
  LinearLow,
  QuadraticHigh,
  QuadraticLow,
  CubicHigh,
  CubicLow,
  VeryslowHigh,
  VeryslowLow,
  Count,
};
}

enum class Granularity { One, Small, Medium, Full };

int num_levels(Granularity g);
// Surjection from the full spectrum onto the coarser bucket sets.
int sched_level(int full_level, Granularity g);

// Mutation gateway handed to apply(): tightens the domain and collects
// the event batch of all changes this call made.
class PropCtx {
 public:
  explicit PropCtx(Domain& dom) : dom_(dom) {}

  const Domain& dom() const { return dom_; }
  bool failed() const { return dom_.failed(); }

  bool tighten(VarId x, const IntSet& s) { return note(dom_.tighten(x, s)); }
  bool tighten_range(VarId x, val_t lo, val_t hi) {
    return note(dom_.tighten_range(x, lo, hi));
  }
  bool tighten_min(VarId x, val_t lo) { return note(dom_.tighten_min(x, lo)); }
  bool tighten_max(VarId x, val_t hi) { return note(dom_.tighten_max(x, hi)); }
  bool tighten_remove(VarId x, val_t v) {
    return note(dom_.tighten_remove(x, v));
  }

  const EventBatch& batch() const { return batch_; }
  bool changed() const { return !batch_.empty(); }

 private:
  bool note(const ChangeRec& rec) {
    if (!rec.changed()) return false;
    batch_.add(rec);
    return true;
  }

  Domain& dom_;
  EventBatch batch_;
};

class StagedPropagator;

enum class DynEventMode { Static, Monotonic, Full };
const char* to_string(DynEventMode m);

// Immutable description of a propagator; all run-time state lives in the
// solver space. apply() must be contracting and monotone and only write
// its own variables.
class Propagator {
 public:
  virtual ~Propagator() = default;

  virtual PropStatus apply(PropCtx& ctx) const = 0;
  // Static event subscription over the input variables.
  virtual void events(std::vector<EvRequest>& out) const = 0;
  // All variables the propagator reads or writes.
  virtual const std::vector<VarId>& vars() const = 0;
  virtual int priority() const = 0;
  virtual bool idempotent() const { return false; }
  virtual const char* name() const = 0;

  // es(f, D) recomputed from the current domain. Returns false if the
  // propagator has no hook for the mode (static set stays in place).
  virtual bool dynamic_events(const Domain&, DynEventMode,
                              std::vector<EvRequest>&) const {
    return false;
  }
  virtual const StagedPropagator* as_staged() const { return nullptr; }
};

// One propagator with an internal stage: stage 0 runs the cheap
// algorithm, stage 1 the strong one, each at its own priority.
class StagedPropagator : public Propagator {
 public:
  static constexpr int kStageNone = -1;
  static constexpr int kStageA = 0;
  static constexpr int kStageB = 1;

  virtual PropStatus apply_stage(PropCtx& ctx, int stage) const = 0;
  virtual int stage_priority(int stage) const = 0;
  // Stage selected by a waking event mask.
  virtual int stage_for(EvMask matched) const = 0;
  // After running stage A: does stage B still have to run?
  virtual bool needs_stage_b(const PropCtx&, PropStatus) const { return true; }

  // Runs both stages; used by audits and as the immediate combination.
  PropStatus apply(PropCtx& ctx) const override;
  int priority() const override { return stage_priority(kStageB); }
  const StagedPropagator* as_staged() const override { return this; }
};

using PropPtr = std::shared_ptr<const Propagator>;

// Construction/usage errors (runtime failure is a false domain, never an
// exception).
struct EnumerationCapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MalformedAutomaton : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace fdprop

#endif
