#include "fdprop/intset.hpp"

#include <algorithm>

namespace fdprop {

IntSet::IntSet(std::initializer_list<val_t> vals) {
  *this = from_values(std::vector<val_t>(vals));
}

IntSet IntSet::from_values(std::vector<val_t> vals) {
  std::sort(vals.begin(), vals.end());
  vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  IntSet s;
  for (val_t v : vals) {
    if (!s.rs_.empty() && s.rs_.back().hi + 1 == v)
      s.rs_.back().hi = v;
    else
      s.rs_.push_back({v, v});
  }
  return s;
}

IntSet IntSet::from_ranges(std::vector<Range> rs) {
  std::erase_if(rs, [](const Range& r) { return r.lo > r.hi; });
  std::sort(rs.begin(), rs.end(),
            [](const Range& a, const Range& b) { return a.lo < b.lo; });
  IntSet s;
  for (const Range& r : rs) {
    if (!s.rs_.empty() && r.lo <= s.rs_.back().hi + 1)
      s.rs_.back().hi = std::max(s.rs_.back().hi, r.hi);
    else
      s.rs_.push_back(r);
  }
  return s;
}

val_t IntSet::size() const {
  val_t n = 0;
  for (const Range& r : rs_) n += r.hi - r.lo + 1;
  return n;
}

bool IntSet::contains(val_t v) const {
  auto it = std::upper_bound(
      rs_.begin(), rs_.end(), v,
      [](val_t x, const Range& r) { return x < r.lo; });
  return it != rs_.begin() && v <= std::prev(it)->hi;
}

IntSet IntSet::intersect(const IntSet& o) const {
  IntSet out;
  size_t i = 0, j = 0;
  while (i < rs_.size() && j < o.rs_.size()) {
    val_t lo = std::max(rs_[i].lo, o.rs_[j].lo);
    val_t hi = std::min(rs_[i].hi, o.rs_[j].hi);
    if (lo <= hi) out.rs_.push_back({lo, hi});
    if (rs_[i].hi < o.rs_[j].hi)
      ++i;
    else
      ++j;
  }
  return out;
}

IntSet IntSet::intersect_range(val_t lo, val_t hi) const {
  IntSet r;
  if (lo <= hi) r.rs_.push_back({lo, hi});
  return intersect(r);
}

IntSet IntSet::unite(const IntSet& o) const {
  std::vector<Range> all = rs_;
  all.insert(all.end(), o.rs_.begin(), o.rs_.end());
  return from_ranges(std::move(all));
}

IntSet IntSet::remove(val_t v) const {
  if (!contains(v)) return *this;
  IntSet out;
  for (const Range& r : rs_) {
    if (v < r.lo || v > r.hi) {
      out.rs_.push_back(r);
      continue;
    }
    if (r.lo <= v - 1) out.rs_.push_back({r.lo, v - 1});
    if (v + 1 <= r.hi) out.rs_.push_back({v + 1, r.hi});
  }
  return out;
}

IntSet IntSet::remove_all(const IntSet& o) const {
  IntSet out = *this;
  o.for_each([&](val_t v) { out = out.remove(v); });
  return out;
}

bool IntSet::subset_of(const IntSet& o) const {
  for (const Range& r : rs_) {
    // every value of r must lie in a single range of o
    auto it = std::upper_bound(
        o.rs_.begin(), o.rs_.end(), r.lo,
        [](val_t x, const Range& q) { return x < q.lo; });
    if (it == o.rs_.begin()) return false;
    const Range& q = *std::prev(it);
    if (r.lo < q.lo || r.hi > q.hi) return false;
  }
  return true;
}

std::vector<val_t> IntSet::values() const {
  std::vector<val_t> out;
  out.reserve(size_t(size()));
  for_each([&](val_t v) { out.push_back(v); });
  return out;
}

bool IntSet::well_formed() const {
  for (size_t i = 0; i < rs_.size(); ++i) {
    if (rs_[i].lo > rs_[i].hi) return false;
    if (i > 0 && rs_[i - 1].hi + 2 > rs_[i].lo) return false;
  }
  return true;
}

}  // namespace fdprop
