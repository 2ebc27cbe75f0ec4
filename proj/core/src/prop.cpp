#include "fdprop/prop.hpp"

namespace fdprop {

const char* to_string(PropStatus s) {
  switch (s) {
    case PropStatus::Failed: return "failed";
    case PropStatus::Subsumed: return "subsumed";
    case PropStatus::AtFixpoint: return "at-fixpoint";
    case PropStatus::Unknown: return "unknown";
  }
  return "?";
}

const char* to_string(DynEventMode m) {
  switch (m) {
    case DynEventMode::Static: return "static";
    case DynEventMode::Monotonic: return "monotonic";
    case DynEventMode::Full: return "full";
  }
  return "?";
}

int num_levels(Granularity g) {
  switch (g) {
    case Granularity::One: return 1;
    case Granularity::Small: return 3;
    case Granularity::Medium: return 7;
    case Granularity::Full: return prio::Count;
  }
  return 1;
}

int sched_level(int full_level, Granularity g) {
  int medium = full_level / 2;  // drop the high/low sub-level
  switch (g) {
    case Granularity::One:
      return 0;
    case Granularity::Small:
      // {unary,binary,ternary} {linear,quadratic} {cubic,veryslow}
      return medium <= 2 ? 0 : medium <= 4 ? 1 : 2;
    case Granularity::Medium:
      return medium;
    case Granularity::Full:
      return full_level;
  }
  return 0;
}

PropStatus StagedPropagator::apply(PropCtx& ctx) const {
  PropStatus a = apply_stage(ctx, kStageA);
  if (a == PropStatus::Failed) return a;
  if (a == PropStatus::Subsumed) return a;
  if (!needs_stage_b(ctx, a)) return a;
  PropStatus b = apply_stage(ctx, kStageB);
  return b;
}

}  // namespace fdprop
