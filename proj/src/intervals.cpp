#include "graphfol/intervals.hpp"

#include <algorithm>

namespace graphfol {

namespace {

// a starts strictly before b
bool lower_before(const Bound& a, const Bound& b) {
  if (a.infinite || b.infinite) return a.infinite && !b.infinite;
  if (a.value != b.value) return a.value < b.value;
  return a.closed && !b.closed;
}

// a ends strictly before b
bool upper_before(const Bound& a, const Bound& b) {
  if (a.infinite || b.infinite) return b.infinite && !a.infinite;
  if (a.value != b.value) return a.value < b.value;
  return !a.closed && b.closed;
}

bool same_bound(const Bound& a, const Bound& b) {
  if (a.infinite || b.infinite) return a.infinite == b.infinite;
  return a.value == b.value && a.closed == b.closed;
}

std::string fmt_lower(const Bound& b) { return b.infinite ? "(-inf" : (b.closed ? "[" : "(") + to_string(b.value); }
std::string fmt_upper(const Bound& b) { return b.infinite ? "+inf)" : to_string(b.value) + (b.closed ? "]" : ")"); }

}  // namespace

bool operator==(const Interval& a, const Interval& b) { return same_bound(a.lo, b.lo) && same_bound(a.hi, b.hi); }

bool Interval::empty() const {
  if (lo.infinite || hi.infinite) return false;
  if (lo.value != hi.value) return lo.value > hi.value;
  return !(lo.closed && hi.closed);
}

bool Interval::contains(const Rat& x) const {
  if (!lo.infinite && (x < lo.value || (x == lo.value && !lo.closed))) return false;
  if (!hi.infinite && (x > hi.value || (x == hi.value && !hi.closed))) return false;
  return true;
}

Interval Interval::shifted(const Rat& by) const {
  Interval r = *this;
  if (!r.lo.infinite) r.lo.value += by;
  if (!r.hi.infinite) r.hi.value += by;
  return r;
}

std::string Interval::str() const {
  if (is_point()) return "{" + to_string(lo.value) + "}";
  return fmt_lower(lo) + ", " + fmt_upper(hi);
}

void IntervalSet::add(const Interval& iv) {
  if (iv.empty()) return;
  parts_.push_back(iv);
  std::sort(parts_.begin(), parts_.end(), [](const Interval& a, const Interval& b) { return lower_before(a.lo, b.lo); });
  std::vector<Interval> merged;
  for (const auto& p : parts_) {
    if (!merged.empty()) {
      Interval& cur = merged.back();
      bool touch = cur.hi.infinite || p.lo.infinite || cur.hi.value > p.lo.value ||
                   (cur.hi.value == p.lo.value && (cur.hi.closed || p.lo.closed));
      if (touch) {
        if (upper_before(cur.hi, p.hi)) cur.hi = p.hi;
        continue;
      }
    }
    merged.push_back(p);
  }
  parts_ = std::move(merged);
}

IntervalSet IntervalSet::unite(const IntervalSet& other) const {
  IntervalSet r = *this;
  for (const auto& p : other.parts_) r.add(p);
  return r;
}

IntervalSet IntervalSet::intersect(const IntervalSet& other) const {
  IntervalSet r;
  for (const auto& a : parts_)
    for (const auto& b : other.parts_) {
      Interval c{lower_before(a.lo, b.lo) ? b.lo : a.lo, upper_before(a.hi, b.hi) ? a.hi : b.hi};
      r.add(c);
    }
  return r;
}

IntervalSet IntervalSet::shifted(const Rat& by) const {
  IntervalSet r;
  for (const auto& p : parts_) r.parts_.push_back(p.shifted(by));
  return r;
}

bool IntervalSet::contains(const Rat& x) const {
  return std::any_of(parts_.begin(), parts_.end(), [&](const Interval& p) { return p.contains(x); });
}

std::optional<Rat> IntervalSet::pick() const {
  if (parts_.empty()) return std::nullopt;
  const Interval* best = nullptr;
  for (const auto& p : parts_) {
    if (!best) {
      best = &p;
      continue;
    }
    if (!best->bounded()) break;
    if (!p.bounded() || p.hi.value - p.lo.value > best->hi.value - best->lo.value) best = &p;
  }
  const Interval& p = *best;
  if (p.lo.infinite && p.hi.infinite) return Rat(1, 2);
  if (p.hi.infinite) return Rat(floor_of(p.lo.value)) + Rat(3, 2);
  if (p.lo.infinite) return Rat(ceil_of(p.hi.value)) - Rat(3, 2);
  if (p.is_point()) return p.lo.value;
  Rat mid = (p.lo.value + p.hi.value) / 2;
  if (is_integral(mid)) mid = (p.lo.value + mid) / 2;
  return mid;
}

std::string IntervalSet::str() const {
  if (parts_.empty()) return "{}";
  std::string s;
  for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? " u " : "") + parts_[i].str();
  return s;
}

SlopeSet SlopeSet::only(const Slope& s) {
  SlopeSet r;
  if (auto t = s.tau())
    r.tau.add(Interval::point(*t));
  else
    r.vertical = true;
  return r;
}

bool SlopeSet::contains(const Slope& s) const {
  auto t = s.tau();
  return t ? tau.contains(*t) : vertical;
}

namespace {

// Image of one endpoint under tau -> g(tau); nullopt when it lands on infinity.
std::optional<Rat> moebius(const BasisChange& g, const Rat& t) {
  Rat den = Rat(-g.m[1][0]) * t + Rat(g.m[1][1]);
  if (den == 0) return std::nullopt;
  return (Rat(g.m[0][0]) * t - Rat(g.m[0][1])) / den;
}

// Image of an interval on which g has no pole in its interior.
Interval monotone_image(const Interval& iv, const BasisChange& g) {
  auto map_end = [&](const Bound& b) -> Bound {
    if (b.infinite) {
      if (g.m[1][0] == 0) return Bound::unbounded();
      return Bound::at(ratio(-g.m[0][0], g.m[1][0]), false);
    }
    auto v = moebius(g, b.value);
    if (!v) return Bound::unbounded();
    return Bound::at(*v, b.closed);
  };
  Bound a = map_end(iv.lo), b = map_end(iv.hi);
  if (g.det() > 0) return {a, b};
  return {b, a};
}

}  // namespace

SlopeSet SlopeSet::image(const BasisChange& g) const {
  SlopeSet out;
  if (vertical) {
    if (g.m[1][0] == 0)
      out.vertical = true;
    else
      out.tau.add(Interval::point(ratio(-g.m[0][0], g.m[1][0])));
  }
  for (const auto& iv : tau.parts()) {
    if (g.m[1][0] != 0) {
      Rat pole = ratio(g.m[1][1], g.m[1][0]);
      if (iv.contains(pole)) {
        out.vertical = true;
        Interval left{iv.lo, Bound::at(pole, false)}, right{Bound::at(pole, false), iv.hi};
        if (!left.empty()) out.tau.add(monotone_image(left, g));
        if (!right.empty()) out.tau.add(monotone_image(right, g));
        continue;
      }
    }
    out.tau.add(monotone_image(iv, g));
  }
  return out;
}

std::optional<Slope> SlopeSet::pick() const {
  if (auto t = tau.pick()) return Slope::of_tau(*t);
  if (vertical) return Slope::vertical();
  return std::nullopt;
}

std::string SlopeSet::str() const {
  if (empty()) return "{}";
  std::string s = tau.empty() ? "" : tau.str();
  if (vertical) s += std::string(s.empty() ? "" : " u ") + "{vertical}";
  return s;
}

}  // namespace graphfol
