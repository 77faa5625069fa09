#include <doctest.h>

#include "graphfol/jnkernel.hpp"

using namespace graphfol;

namespace {
Rat q(int p, int d) { return ratio(p, d); }
}  // namespace

TEST_CASE("normalization moves every translation number into [0, 1)") {
  ReducedInstance a = normalize({{}, 0, {}, {q(7, 6)}});
  CHECK(a.b == -1);
  CHECK(a.taus_bar == std::vector<Rat>{q(1, 6)});
  CHECK(a.r1 == 1);
  CHECK(a.s0 == 0);

  ReducedInstance b = normalize({{}, 0, {}, {q(-7, 6)}});
  CHECK(b.b == 2);
  CHECK(b.taus_bar == std::vector<Rat>{q(5, 6)});

  ReducedInstance c = normalize({{0}, 0, {}, {Rat(0), q(-1, 2)}});
  CHECK(c.b == 1);
  CHECK(c.taus_bar == std::vector<Rat>{q(1, 2)});
  CHECK(c.source_index == std::vector<int>{1});
  CHECK(c.r1 == 1);
  CHECK(c.s0 == 0);
  CHECK(c.J0.empty());

  ReducedInstance d = normalize({{}, 0, {q(1, 2)}, {Rat(3)}});
  CHECK(d.s0 == 1);
  CHECK(d.b == -3);
}

TEST_CASE("normalization rejects out-of-range input") {
  CHECK_THROWS(normalize({{}, 0, {Rat(1)}, {}}));
  CHECK_THROWS(normalize({{}, 0, {Rat(0)}, {}}));
  CHECK_THROWS(normalize({{2}, 0, {q(1, 2)}, {q(1, 3)}}));
}

TEST_CASE("realizability on the reference instances") {
  JNResult slot = jn_decide({{}, 1, {q(1, 2), q(1, 3)}, {q(1, 6)}});
  CHECK(slot.realizable);
  REQUIRE(slot.witness);
  CHECK(slot.witness->N == 5);
  CHECK(slot.witness->slot == std::vector<Int>{3, 2, 1});

  CHECK(jn_realizable({{}, 2, {q(1, 2), q(2, 3)}, {q(1, 4), q(1, 4)}}));
  CHECK_FALSE(jn_realizable({{}, 0, {q(1, 2), q(2, 3)}, {q(5, 6)}}));
  CHECK(jn_realizable({{}, 1, {}, {q(1, 2), q(1, 3), Rat(0)}}));
}

TEST_CASE("strictness separates conjugacy from translation number") {
  // 1/2 + 1/2 = 1 is a product of two rotations only without slack.
  CHECK(jn_realizable({{}, 1, {q(1, 2)}, {q(1, 2)}}));
  CHECK(jn_realizable({{0}, 1, {q(1, 2)}, {q(1, 2)}}));
  CHECK_FALSE(jn_realizable({{}, 1, {q(1, 2), q(1, 2)}, {q(1, 2)}}));
  // Slots 2/3, 1/3, 1/3: the taus fit only if they may equal their slot.
  CHECK(jn_realizable({{}, 1, {q(1, 2)}, {q(1, 3), q(1, 3)}}));
  CHECK_FALSE(jn_realizable({{0, 1}, 1, {q(1, 2)}, {q(1, 3), q(1, 3)}}));
}

TEST_CASE("smallest denominator in an interval") {
  CHECK(min_denominator_fraction(q(1, 2), q(2, 3), true, true) == std::pair<Int, Int>{3, 5});
  CHECK(min_denominator_fraction(Rat(0), Rat(1), true, true) == std::pair<Int, Int>{1, 2});
  CHECK(min_denominator_fraction(q(1, 3), q(1, 2), true, true) == std::pair<Int, Int>{2, 5});
  CHECK(min_denominator_fraction(q(1, 3), q(1, 2), true, false) == std::pair<Int, Int>{1, 2});
  CHECK(min_denominator_fraction(q(-7, 3), q(-9, 4), true, true) == std::pair<Int, Int>{-16, 7});
}

TEST_CASE("admissible interval of the trefoil exterior") {
  TauIntervalResult r = tau_interval({q(1, 2), q(2, 3)}, {}, {});
  CHECK(r.T == Interval::closed(q(-6, 5), Rat(-1)));
  CHECK(r.T_str == Interval::open(q(-6, 5), Rat(-1)));
  CHECK(r.m0 == -1);
  CHECK(r.m1 == -1);
  CHECK(r.T_str.contains(q(-7, 6)));
  CHECK(r.T.contains(Rat(-1)));
  CHECK_FALSE(r.T_str.contains(Rat(-1)));
}

TEST_CASE("admissible interval of the twisted I-bundle is the single point -1") {
  TauIntervalResult r = tau_interval({q(1, 2), q(1, 2)}, {}, {});
  CHECK(r.T == Interval::point(Rat(-1)));
  CHECK(r.T_str == Interval::point(Rat(-1)));
}

TEST_CASE("a zero translation number yields the closed core interval") {
  TauIntervalResult r = tau_interval({q(1, 2)}, {}, {Rat(0)});
  CHECK(r.T == Interval::closed(Rat(-1), Rat(0)));
  CHECK(r.T_str == Interval::open(Rat(-1), Rat(0)));
  CHECK(r.s0 == 1);
}

TEST_CASE("shifting a fixed translation number by an integer shifts the interval back") {
  std::vector<Rat> g{q(1, 3), q(3, 5)};
  TauIntervalResult base = tau_interval(g, {}, {q(2, 7)});
  TauIntervalResult moved = tau_interval(g, {}, {q(2, 7) + 3});
  CHECK(moved.T == base.T.shifted(Rat(-3)));
  CHECK(moved.T_str == base.T_str.shifted(Rat(-3)));
}

TEST_CASE("extension supremum over rotation slots") {
  // Two strict elements 1/2 and 1/3: the extra slot is 1/N with N <= 5 at best (3/5, 2/5, 1/5).
  auto e = best_extension({{q(1, 2), true}, {q(1, 3), true}});
  REQUIRE(e);
  CHECK(e->value == q(1, 5));
  CHECK(e->attained);
  CHECK_THROWS(best_extension({{q(1, 2), true}}));
}

TEST_CASE("union over ranges of the fixed translation numbers") {
  std::vector<Rat> trefoil{q(1, 2), q(2, 3)};
  TauUnion none = tau_union(trefoil, {});
  CHECK(none.T == IntervalSet(Interval::closed(q(-6, 5), Rat(-1))));
  CHECK(none.T_str == IntervalSet(Interval::open(q(-6, 5), Rat(-1))));

  std::vector<Rat> cable{q(1, 2)};
  TauUnion u = tau_union(cable, {{IntervalSet(Interval::closed(q(-6, 5), Rat(-1))), false}});
  CHECK(u.T == IntervalSet(Interval::closed(Rat(0), Rat(1))));
  TauUnion all = tau_union(cable, {{IntervalSet::all(), false}});
  CHECK(all.T == IntervalSet::all());

  TauUnion point = tau_union(cable, {{IntervalSet(Interval::point(Rat(0))), false}});
  CHECK(point.T == IntervalSet(Interval::closed(Rat(-1), Rat(0))));
  CHECK(point.T_str == IntervalSet(Interval::open(Rat(-1), Rat(0))));
}
