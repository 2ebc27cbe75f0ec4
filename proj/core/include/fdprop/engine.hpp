#ifndef FDPROP_ENGINE_HPP
#define FDPROP_ENGINE_HPP

#include <array>
#include <deque>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fdprop/deps.hpp"
#include "fdprop/domain.hpp"
#include "fdprop/event.hpp"
#include "fdprop/prop.hpp"

namespace fdprop {

enum class FixpointMode { None, Static, Dynamic };
enum class QueuePolicy { Fifo, Lifo };
enum class Combination { Single, Immediate, Multiple, Staged };

const char* to_string(FixpointMode m);
const char* to_string(QueuePolicy p);
const char* to_string(Granularity g);
const char* to_string(Combination c);

struct EngineConfig {
  FixpointMode fixpoint = FixpointMode::Dynamic;
  EventLevel events = EventLevel::FixBcDmc;
  DynEventMode dyn_events = DynEventMode::Static;
  QueuePolicy queue = QueuePolicy::Fifo;
  std::vector<QueuePolicy> queue_per_level;  // optional per-level override
  Granularity granularity = Granularity::Full;
  bool inverse_priorities = false;
  bool complete_fixpoints = false;
  bool dynamic_priorities = false;
  Combination combine = Combination::Single;
  bool audit = false;  // loop-head fixpoint invariant check

  void validate() const;  // throws std::invalid_argument
  std::string cell() const;
};

struct Stats {
  long steps = 0;     // propagator apply calls
  long enqueues = 0;  // not-queued -> queued transitions
  long failures = 0;
  long solutions = 0;
  std::array<long, prio::Count> level_steps{};
  std::vector<long> prop_steps;
  std::vector<long> prop_enqueues;

  void note_step(PropId f, int sched_lvl);
  void note_enqueue(PropId f);
};

// k priority levels, each FIFO or LIFO, with member dedup. Entries whose
// recorded level no longer matches are stale and skipped on pop.
class PropQueue {
 public:
  void configure(int levels, QueuePolicy uniform,
                 const std::vector<QueuePolicy>& per_level);
  void clear();

  bool enqueue(PropId f, int level);  // false if already queued
  void promote(PropId f, int level);  // re-level without duplication
  void erase(PropId f);

  bool empty() const { return live_ == 0; }
  bool queued(PropId f) const;
  int level_of(PropId f) const;  // -1 if not queued
  // Pops per policy: lowest numbered non-empty level first (flipped under
  // `inverse`); under `complete` the current level drains before switching.
  std::pair<PropId, int> choose(bool inverse, bool complete);

  int lowest_live_level() const;  // -1 if empty

 private:
  void ensure(PropId f);

  std::vector<std::deque<PropId>> q_;
  std::vector<QueuePolicy> pol_;
  std::vector<std::int16_t> where_;  // level+1, 0 = not queued
  size_t live_ = 0;
  int current_ = -1;
};

// The full copyable solver state: domain, dependency table, per-propagator
// run-time state, queue, and the propagator list itself.
class Space {
 public:
  explicit Space(Domain init)
      : dom_(std::move(init)), deps_(dom_.num_vars()) {}

  Domain& dom() { return dom_; }
  const Domain& dom() const { return dom_; }
  DependencyTable& deps() { return deps_; }
  const DependencyTable& deps() const { return deps_; }

  const std::vector<PropPtr>& props() const { return props_; }
  size_t num_props() const { return props_.size(); }

  struct Rt {
    std::int8_t stage = -1;  // StagedPropagator::kStageNone
    bool dead = false;
  };
  Rt& rt(PropId f) { return rt_[size_t(f)]; }
  const Rt& rt(PropId f) const { return rt_[size_t(f)]; }

  PropQueue& queue() { return queue_; }
  const PropQueue& queue() const { return queue_; }

  bool all_fixed() const;
  VarId first_unfixed() const;  // invalid VarId if all fixed

  friend class Engine;

 private:
  Domain dom_;
  DependencyTable deps_;
  std::vector<PropPtr> props_;
  std::vector<Rt> rt_;
  PropQueue queue_;
};

// Per-iteration trace record, for the trace CLI and tests.
struct TraceHook {
  std::function<void(const Space&, PropId, int stage, int level,
                     PropStatus, const EventBatch&)>
      on_step;
};

class Engine {
 public:
  explicit Engine(EngineConfig cfg);

  const EngineConfig& config() const { return cfg_; }
  Stats& stats() { return stats_; }
  const Stats& stats() const { return stats_; }

  // Registers a propagator with the space: subscribes its (widened)
  // event set. Does not enqueue; pass the id to isolv as a new propagator.
  PropId post(Space& s, PropPtr p) const;

  // Incremental propagation: the space's old propagators are at fixpoint,
  // the `fresh` ones are not. Returns false on a false domain.
  bool isolv(Space& s, std::span<const PropId> fresh);

  // Applies every propagator not in the queue to a scratch copy; true iff
  // none changes the domain (the loop-head invariant).
  bool debug_audit(const Space& s, PropId* offender = nullptr) const;

  void set_trace(TraceHook hook) { trace_ = std::move(hook); }

 private:
  int level_for(const Space& s, PropId f) const;
  void schedule(Space& s, PropId f, EvMask matched);
  void schedule_fresh(Space& s, PropId f);
  void dispose(Space& s, PropId f) const;
  void resubscribe_dynamic(Space& s, PropId f) const;

  EngineConfig cfg_;
  Stats stats_;
  TraceHook trace_;
};

}  // namespace fdprop

#endif
