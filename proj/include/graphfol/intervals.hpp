#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphfol/exactnum.hpp"

namespace graphfol {

// One end of an interval on the tau line. An infinite lower end is -inf,
// an infinite upper end is +inf; infinite ends are never closed.
struct Bound {
  bool infinite = true;
  Rat value;
  bool closed = false;

  static Bound at(Rat v, bool closed) { return {false, std::move(v), closed}; }
  static Bound unbounded() { return {}; }
};

struct Interval {
  Bound lo, hi;

  static Interval closed(const Rat& a, const Rat& b) { return {Bound::at(a, true), Bound::at(b, true)}; }
  static Interval open(const Rat& a, const Rat& b) { return {Bound::at(a, false), Bound::at(b, false)}; }
  static Interval point(const Rat& a) { return closed(a, a); }
  static Interval all() { return {}; }

  bool empty() const;
  bool bounded() const { return !lo.infinite && !hi.infinite; }
  bool is_point() const { return bounded() && lo.value == hi.value; }
  bool contains(const Rat& x) const;
  Interval shifted(const Rat& by) const;
  std::string str() const;

  friend bool operator==(const Interval& a, const Interval& b);
};

// Finite union of disjoint intervals kept sorted and maximally merged.
class IntervalSet {
 public:
  IntervalSet() = default;
  IntervalSet(const Interval& iv) { add(iv); }
  static IntervalSet all() { return IntervalSet(Interval::all()); }

  void add(const Interval& iv);
  IntervalSet unite(const IntervalSet& other) const;
  IntervalSet intersect(const IntervalSet& other) const;
  IntervalSet shifted(const Rat& by) const;
  bool contains(const Rat& x) const;
  bool empty() const { return parts_.empty(); }
  const std::vector<Interval>& parts() const { return parts_; }
  // A deterministic interior point: midpoint of the longest part, moved off
  // integers when the part has positive length.
  std::optional<Rat> pick() const;
  std::string str() const;

  friend bool operator==(const IntervalSet& a, const IntervalSet& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<Interval> parts_;
};

// Slopes on one torus: the vertical (fibre) slope plus a set of tau values.
struct SlopeSet {
  bool vertical = false;
  IntervalSet tau;

  static SlopeSet only(const Slope& s);
  static SlopeSet everything() { return {true, IntervalSet::all()}; }

  bool empty() const { return !vertical && tau.empty(); }
  bool contains(const Slope& s) const;
  SlopeSet unite(const SlopeSet& o) const { return {vertical || o.vertical, tau.unite(o.tau)}; }
  SlopeSet intersect(const SlopeSet& o) const { return {vertical && o.vertical, tau.intersect(o.tau)}; }
  // Same slopes written in the coordinates obtained by applying g.
  SlopeSet image(const BasisChange& g) const;
  std::optional<Slope> pick() const;  // prefers a horizontal slope
  std::string str() const;
};

}  // namespace graphfol
