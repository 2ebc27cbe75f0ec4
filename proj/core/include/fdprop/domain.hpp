#ifndef FDPROP_DOMAIN_HPP
#define FDPROP_DOMAIN_HPP

#include <cassert>
#include <utility>
#include <vector>

#include "fdprop/intset.hpp"
#include "fdprop/var.hpp"

namespace fdprop {

// What a single tighten() did to one variable. Carries old vs new
// (inf, sup, size) so the event system can classify the change.
struct ChangeRec {
  VarId var;
  val_t old_min = 0, old_max = 0, old_size = 0;
  val_t new_min = 0, new_max = 0, new_size = 0;

  bool changed() const { return new_size != old_size; }
  bool wiped() const { return new_size == 0; }
};

// Total map from variables to finite integer sets. Failed iff some
// variable's set is empty. All mutation goes through tighten().
class Domain {
 public:
  Domain() = default;
  explicit Domain(std::vector<IntSet> sets);

  int num_vars() const { return int(sets_.size()); }
  const IntSet& at(VarId x) const {
    assert(x.idx >= 0 && x.idx < num_vars());
    return sets_[size_t(x.idx)];
  }
  const IntSet& operator[](VarId x) const { return at(x); }

  bool failed() const { return failed_; }
  bool fixed(VarId x) const { return at(x).fixed(); }

  // (inf, sup); querying an empty set is a contract violation.
  std::pair<val_t, val_t> bounds(VarId x) const {
    const IntSet& s = at(x);
    assert(!s.empty() && "bounds() on failed variable");
    return {s.min(), s.max()};
  }
  val_t min(VarId x) const { return bounds(x).first; }
  val_t max(VarId x) const { return bounds(x).second; }

  // d'(x) = d(x) ∩ s; the single mutation point.
  ChangeRec tighten(VarId x, const IntSet& s);
  ChangeRec tighten_range(VarId x, val_t lo, val_t hi);
  ChangeRec tighten_min(VarId x, val_t lo);
  ChangeRec tighten_max(VarId x, val_t hi);
  ChangeRec tighten_remove(VarId x, val_t v);

  bool stronger_than(const Domain& o) const;  // this ⊑ o
  Domain range_relax() const;

  bool operator==(const Domain&) const = default;

 private:
  ChangeRec record(VarId x, IntSet next);

  std::vector<IntSet> sets_;
  bool failed_ = false;
};

Domain intersect(const Domain& a, const Domain& b);

}  // namespace fdprop

#endif
