#include "fdprop/domain.hpp"

namespace fdprop {

Domain::Domain(std::vector<IntSet> sets) : sets_(std::move(sets)) {
  for (const IntSet& s : sets_)
    if (s.empty()) failed_ = true;
}

ChangeRec Domain::record(VarId x, IntSet next) {
  IntSet& cur = sets_[size_t(x.idx)];
  ChangeRec rec;
  rec.var = x;
  rec.old_size = cur.size();
  rec.new_size = next.size();
  if (!cur.empty()) {
    rec.old_min = cur.min();
    rec.old_max = cur.max();
  }
  if (!next.empty()) {
    rec.new_min = next.min();
    rec.new_max = next.max();
  } else {
    failed_ = true;
  }
  cur = std::move(next);
  return rec;
}

ChangeRec Domain::tighten(VarId x, const IntSet& s) {
  const IntSet& cur = at(x);
  IntSet next = cur.intersect(s);
  if (next == cur) {
    ChangeRec rec;
    rec.var = x;
    rec.old_size = rec.new_size = cur.size();
    if (!cur.empty()) {
      rec.old_min = rec.new_min = cur.min();
      rec.old_max = rec.new_max = cur.max();
    }
    return rec;
  }
  return record(x, std::move(next));
}

ChangeRec Domain::tighten_range(VarId x, val_t lo, val_t hi) {
  return tighten(x, IntSet(lo, hi));
}

ChangeRec Domain::tighten_min(VarId x, val_t lo) {
  const IntSet& cur = at(x);
  if (cur.empty() || cur.min() >= lo) return tighten(x, cur);
  return tighten(x, cur.intersect_range(lo, cur.max()));
}

ChangeRec Domain::tighten_max(VarId x, val_t hi) {
  const IntSet& cur = at(x);
  if (cur.empty() || cur.max() <= hi) return tighten(x, cur);
  return tighten(x, cur.intersect_range(cur.min(), hi));
}

ChangeRec Domain::tighten_remove(VarId x, val_t v) {
  const IntSet& cur = at(x);
  if (!cur.contains(v)) return tighten(x, cur);
  return record(x, cur.remove(v));
}

bool Domain::stronger_than(const Domain& o) const {
  assert(num_vars() == o.num_vars());
  for (int i = 0; i < num_vars(); ++i)
    if (!sets_[size_t(i)].subset_of(o.sets_[size_t(i)])) return false;
  return true;
}

Domain Domain::range_relax() const {
  assert(!failed_);
  std::vector<IntSet> out;
  out.reserve(sets_.size());
  for (const IntSet& s : sets_) out.emplace_back(s.min(), s.max());
  return Domain(std::move(out));
}

Domain intersect(const Domain& a, const Domain& b) {
  assert(a.num_vars() == b.num_vars());
  std::vector<IntSet> out;
  out.reserve(size_t(a.num_vars()));
  for (int i = 0; i < a.num_vars(); ++i)
    out.push_back(a.at(VarId(i)).intersect(b.at(VarId(i))));
  return Domain(std::move(out));
}

}  // namespace fdprop
