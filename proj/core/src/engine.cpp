#include "fdprop/engine.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace fdprop {

const char* to_string(FixpointMode m) {
  switch (m) {
    case FixpointMode::None: return "none";
    case FixpointMode::Static: return "static";
    case FixpointMode::Dynamic: return "dynamic";
  }
  return "?";
}
const char* to_string(QueuePolicy p) {
  return p == QueuePolicy::Fifo ? "fifo" : "lifo";
}
const char* to_string(Granularity g) {
  switch (g) {
    case Granularity::One: return "one";
    case Granularity::Small: return "small";
    case Granularity::Medium: return "medium";
    case Granularity::Full: return "full";
  }
  return "?";
}
const char* to_string(Combination c) {
  switch (c) {
    case Combination::Single: return "single";
    case Combination::Immediate: return "immediate";
    case Combination::Multiple: return "multiple";
    case Combination::Staged: return "staged";
  }
  return "?";
}

void EngineConfig::validate() const {
  if (dyn_events != DynEventMode::Static && events != EventLevel::FixBcDmc)
    throw std::invalid_argument(
        "dynamic event sets require the fix-bc-dmc event level");
  if (combine == Combination::Staged && (granularity == Granularity::One ||
                                         granularity == Granularity::Small))
    throw std::invalid_argument(
        "staged propagators require medium or full priority granularity");
  if (!queue_per_level.empty() &&
      int(queue_per_level.size()) != num_levels(granularity))
    throw std::invalid_argument("queue_per_level size mismatch");
}

std::string EngineConfig::cell() const {
  std::string s;
  s += "fp=";
  s += to_string(fixpoint);
  s += ";ev=";
  s += to_string(events);
  s += ";dyn=";
  s += to_string(dyn_events);
  s += ";q=";
  s += to_string(queue);
  s += ";prio=";
  s += to_string(granularity);
  s += ";inv=";
  s += inverse_priorities ? "1" : "0";
  s += ";comp=";
  s += complete_fixpoints ? "1" : "0";
  s += ";dprio=";
  s += dynamic_priorities ? "1" : "0";
  s += ";comb=";
  s += to_string(combine);
  return s;
}

void Stats::note_step(PropId f, int sched_lvl) {
  ++steps;
  if (sched_lvl >= 0 && sched_lvl < int(level_steps.size()))
    ++level_steps[size_t(sched_lvl)];
  if (size_t(f) >= prop_steps.size()) prop_steps.resize(size_t(f) + 1, 0);
  ++prop_steps[size_t(f)];
}

void Stats::note_enqueue(PropId f) {
  ++enqueues;
  if (size_t(f) >= prop_enqueues.size())
    prop_enqueues.resize(size_t(f) + 1, 0);
  ++prop_enqueues[size_t(f)];
}

// ---------------------------------------------------------------- queue

void PropQueue::configure(int levels, QueuePolicy uniform,
                          const std::vector<QueuePolicy>& per_level) {
  q_.assign(size_t(levels), {});
  pol_.assign(size_t(levels), uniform);
  if (!per_level.empty())
    for (size_t i = 0; i < pol_.size() && i < per_level.size(); ++i)
      pol_[i] = per_level[i];
  where_.clear();
  live_ = 0;
  current_ = -1;
}

void PropQueue::clear() {
  for (auto& d : q_) d.clear();
  std::fill(where_.begin(), where_.end(), 0);
  live_ = 0;
  current_ = -1;
}

void PropQueue::ensure(PropId f) {
  if (size_t(f) >= where_.size()) where_.resize(size_t(f) + 1, 0);
}

bool PropQueue::queued(PropId f) const {
  return size_t(f) < where_.size() && where_[size_t(f)] != 0;
}

int PropQueue::level_of(PropId f) const {
  return queued(f) ? where_[size_t(f)] - 1 : -1;
}

bool PropQueue::enqueue(PropId f, int level) {
  ensure(f);
  if (where_[size_t(f)] != 0) return false;
  where_[size_t(f)] = std::int16_t(level + 1);
  q_[size_t(level)].push_back(f);
  ++live_;
  return true;
}

void PropQueue::promote(PropId f, int level) {
  ensure(f);
  if (where_[size_t(f)] == 0) {
    enqueue(f, level);
    return;
  }
  if (where_[size_t(f)] == level + 1) return;
  // old entry goes stale; the queue is silent on where a promoted
  // propagator sits in the target level, we append
  where_[size_t(f)] = std::int16_t(level + 1);
  q_[size_t(level)].push_back(f);
}

void PropQueue::erase(PropId f) {
  ensure(f);
  if (where_[size_t(f)] == 0) return;
  where_[size_t(f)] = 0;  // entry goes stale
  --live_;
}

std::pair<PropId, int> PropQueue::choose(bool inverse, bool complete) {
  assert(live_ > 0);
  auto pop_level = [&](int lvl) -> PropId {
    auto& d = q_[size_t(lvl)];
    while (!d.empty()) {
      PropId f;
      if (pol_[size_t(lvl)] == QueuePolicy::Fifo) {
        f = d.front();
        d.pop_front();
      } else {
        f = d.back();
        d.pop_back();
      }
      if (where_[size_t(f)] == lvl + 1) {
        where_[size_t(f)] = 0;
        --live_;
        return f;
      }
      // stale entry, skip
    }
    return -1;
  };

  if (complete && current_ >= 0) {
    PropId f = pop_level(current_);
    if (f >= 0) return {f, current_};
  }
  int n = int(q_.size());
  for (int i = 0; i < n; ++i) {
    int lvl = inverse ? n - 1 - i : i;
    PropId f = pop_level(lvl);
    if (f >= 0) {
      current_ = lvl;
      return {f, lvl};
    }
  }
  assert(false && "choose() on empty queue");
  return {-1, -1};
}

int PropQueue::lowest_live_level() const {
  int best = -1;
  for (size_t f = 0; f < where_.size(); ++f)
    if (where_[f] != 0) {
      int lvl = where_[f] - 1;
      if (best < 0 || lvl < best) best = lvl;
    }
  return best;
}

// ---------------------------------------------------------------- space

bool Space::all_fixed() const {
  for (int i = 0; i < dom_.num_vars(); ++i)
    if (!dom_.fixed(VarId(i))) return false;
  return true;
}

VarId Space::first_unfixed() const {
  for (int i = 0; i < dom_.num_vars(); ++i)
    if (!dom_.fixed(VarId(i))) return VarId(i);
  return VarId();
}

// ---------------------------------------------------------------- engine

Engine::Engine(EngineConfig cfg) : cfg_(std::move(cfg)) {
  cfg_.validate();
}

PropId Engine::post(Space& s, PropPtr p) const {
  PropId id = PropId(s.props_.size());
  s.props_.push_back(std::move(p));
  s.rt_.push_back({});
  s.deps_.ensure_props(id);
  std::vector<EvRequest> reqs;
  s.props_.back()->events(reqs);
  for (EvRequest& r : reqs) r.mask = widen(r.mask, cfg_.events);
  s.deps_.resubscribe(id, reqs);
  return id;
}

int Engine::level_for(const Space& s, PropId f) const {
  const Propagator& p = *s.props()[size_t(f)];
  int full = p.priority();
  if (cfg_.dynamic_priorities && !p.as_staged()) {
    int unfixed = 0;
    for (VarId x : p.vars())
      if (!s.dom().fixed(x)) ++unfixed;
    int band = full;
    if (unfixed <= 2)
      band = prio::BinaryHigh + (full & 1);
    else if (unfixed == 3)
      band = prio::TernaryHigh + (full & 1);
    full = std::min(full, band);
  }
  return sched_level(full, cfg_.granularity);
}

void Engine::schedule(Space& s, PropId f, EvMask matched) {
  auto& rt = s.rt(f);
  if (rt.dead) return;
  const Propagator& p = *s.props()[size_t(f)];
  const StagedPropagator* sp =
      cfg_.combine == Combination::Staged ? p.as_staged() : nullptr;
  if (!sp) {
    if (s.queue_.enqueue(f, level_for(s, f))) stats_.note_enqueue(f);
    return;
  }
  int want = sp->stage_for(matched);
  int lvl = sched_level(sp->stage_priority(want), cfg_.granularity);
  if (rt.stage == StagedPropagator::kStageNone) {
    rt.stage = std::int8_t(want);
    if (s.queue_.enqueue(f, lvl)) stats_.note_enqueue(f);
  } else if (rt.stage == StagedPropagator::kStageB &&
             want == StagedPropagator::kStageA) {
    rt.stage = StagedPropagator::kStageA;
    s.queue_.promote(f, lvl);
  }
  // already in stage A: stays, per the staged transition tables
}

void Engine::schedule_fresh(Space& s, PropId f) {
  auto& rt = s.rt(f);
  if (rt.dead) return;
  const Propagator& p = *s.props()[size_t(f)];
  const StagedPropagator* sp =
      cfg_.combine == Combination::Staged ? p.as_staged() : nullptr;
  if (!sp) {
    if (s.queue_.enqueue(f, level_for(s, f))) stats_.note_enqueue(f);
    return;
  }
  rt.stage = StagedPropagator::kStageA;
  int lvl =
      sched_level(sp->stage_priority(StagedPropagator::kStageA), cfg_.granularity);
  if (s.queue_.enqueue(f, lvl)) stats_.note_enqueue(f);
}

void Engine::dispose(Space& s, PropId f) const {
  s.rt(f).dead = true;
  s.rt(f).stage = StagedPropagator::kStageNone;
  s.deps_.unsubscribe_all(f);
  s.queue_.erase(f);
}

void Engine::resubscribe_dynamic(Space& s, PropId f) const {
  const Propagator& p = *s.props()[size_t(f)];
  std::vector<EvRequest> reqs;
  if (!p.dynamic_events(s.dom(), cfg_.dyn_events, reqs)) return;
  for (EvRequest& r : reqs) r.mask = widen(r.mask, cfg_.events);
  s.deps_.resubscribe(f, reqs);
}

bool Engine::isolv(Space& s, std::span<const PropId> fresh) {
  s.queue_.configure(num_levels(cfg_.granularity), cfg_.queue,
                     cfg_.queue_per_level);
  for (PropId f : fresh) schedule_fresh(s, f);

  while (!s.queue_.empty()) {
    if (cfg_.audit) {
      PropId offender = -1;
      if (!debug_audit(s, &offender))
        throw std::logic_error("loop-head fixpoint invariant violated by " +
                               std::string(s.props()[size_t(offender)]->name()));
    }
    auto [f, lvl] = s.queue_.choose(cfg_.inverse_priorities,
                                    cfg_.complete_fixpoints);
    auto& rt = s.rt(f);
    if (rt.dead) continue;
    const Propagator& p = *s.props()[size_t(f)];
    const StagedPropagator* sp =
        cfg_.combine == Combination::Staged ? p.as_staged() : nullptr;
    int stage = sp ? rt.stage : StagedPropagator::kStageNone;

    PropCtx ctx(s.dom_);
    PropStatus st = sp ? sp->apply_stage(ctx, stage) : p.apply(ctx);
    stats_.note_step(f, lvl);
    if (trace_.on_step) trace_.on_step(s, f, stage, lvl, st, ctx.batch());
    if (s.dom_.failed()) return false;

    bool changed = ctx.changed();

    // stage transition of the executed propagator
    if (sp) {
      if (st == PropStatus::Subsumed) {
        dispose(s, f);
      } else if (stage == StagedPropagator::kStageA) {
        if (sp->needs_stage_b(ctx, st)) {
          rt.stage = StagedPropagator::kStageB;
          int blvl = sched_level(sp->stage_priority(StagedPropagator::kStageB),
                                 cfg_.granularity);
          if (s.queue_.enqueue(f, blvl)) stats_.note_enqueue(f);
        } else {
          rt.stage = StagedPropagator::kStageNone;
        }
      } else {  // stage B ran
        if (st == PropStatus::Unknown && changed) {
          rt.stage = StagedPropagator::kStageB;
          int blvl = sched_level(sp->stage_priority(StagedPropagator::kStageB),
                                 cfg_.granularity);
          if (s.queue_.enqueue(f, blvl)) stats_.note_enqueue(f);
        } else {
          rt.stage = StagedPropagator::kStageNone;
        }
      }
    } else if (st == PropStatus::Subsumed) {
      dispose(s, f);
    }

    // fix(f, D): is the executed propagator provably at fixpoint?
    bool fix_self = false;
    switch (cfg_.fixpoint) {
      case FixpointMode::None:
        break;
      case FixpointMode::Static:
        fix_self = p.idempotent();
        break;
      case FixpointMode::Dynamic:
        fix_self =
            st == PropStatus::AtFixpoint || st == PropStatus::Subsumed;
        break;
    }

    // dependents are computed against the subscriptions in place before
    // this run; the executed propagator's set is updated afterwards
    auto wake = s.deps_.dependents(ctx.batch());
    if (cfg_.dyn_events != DynEventMode::Static && !rt.dead)
      resubscribe_dynamic(s, f);

    bool self_woken = false;
    for (const auto& [wf, mask] : wake) {
      if (wf == f) {
        self_woken = true;
        if (!sp && (fix_self || st == PropStatus::Subsumed)) continue;
      }
      schedule(s, wf, mask);
    }
    // under fully dynamic event sets the recomputed set need not cover the
    // propagator's own events; fall back on its fixpoint report
    if (cfg_.dyn_events == DynEventMode::Full && !sp && !rt.dead && changed &&
        !fix_self && !self_woken)
      schedule(s, f, EV_DMC);
  }
  return true;
}

bool Engine::debug_audit(const Space& s, PropId* offender) const {
  for (PropId f = 0; f < PropId(s.num_props()); ++f) {
    if (s.rt(f).dead) continue;
    if (s.queue().queued(f)) continue;
    Domain scratch = s.dom();
    PropCtx ctx(scratch);
    (void)s.props()[size_t(f)]->apply(ctx);
    if (ctx.changed()) {
      if (offender) *offender = f;
      return false;
    }
  }
  return true;
}

}  // namespace fdprop
