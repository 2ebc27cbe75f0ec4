#ifndef FDPROP_INTSET_HPP
#define FDPROP_INTSET_HPP

#include <cassert>
#include <initializer_list>
#include <vector>

#include "fdprop/var.hpp"

namespace fdprop {

// Finite set of integers as a sorted list of disjoint, non-adjacent ranges.
// Invariant: ranges ascending, rs[i].hi + 2 <= rs[i+1].lo (adjacent ranges
// are merged).
class IntSet {
 public:
  struct Range {
    val_t lo, hi;
    bool operator==(const Range&) const = default;
  };

  IntSet() = default;
  IntSet(val_t lo, val_t hi) {
    if (lo <= hi) rs_.push_back({lo, hi});
  }
  IntSet(std::initializer_list<val_t> vals);

  static IntSet from_values(std::vector<val_t> vals);
  static IntSet from_ranges(std::vector<Range> rs);  // normalizes

  bool empty() const { return rs_.empty(); }
  val_t min() const {
    assert(!empty());
    return rs_.front().lo;
  }
  val_t max() const {
    assert(!empty());
    return rs_.back().hi;
  }
  val_t size() const;
  bool contains(val_t v) const;
  bool fixed() const { return rs_.size() == 1 && rs_[0].lo == rs_[0].hi; }
  val_t value() const {
    assert(fixed());
    return rs_[0].lo;
  }
  bool is_range() const { return rs_.size() <= 1; }

  IntSet intersect(const IntSet& o) const;
  IntSet intersect_range(val_t lo, val_t hi) const;
  IntSet unite(const IntSet& o) const;
  IntSet remove(val_t v) const;
  IntSet remove_all(const IntSet& o) const;  // set difference
  bool subset_of(const IntSet& o) const;

  bool operator==(const IntSet&) const = default;

  const std::vector<Range>& ranges() const { return rs_; }
  size_t num_ranges() const { return rs_.size(); }

  template <class F>
  void for_each(F&& f) const {
    for (const Range& r : rs_)
      for (val_t v = r.lo; v <= r.hi; ++v) f(v);
  }
  std::vector<val_t> values() const;

  bool well_formed() const;

 private:
  std::vector<Range> rs_;
};

}  // namespace fdprop

#endif
