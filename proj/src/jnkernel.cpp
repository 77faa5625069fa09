#include "graphfol/jnkernel.hpp"

#include <algorithm>
#include <numeric>

namespace graphfol {

namespace {

void check_gammas(const std::vector<Rat>& gammas) {
  for (const auto& g : gammas)
    if (g <= 0 || g >= 1) throw std::invalid_argument("gamma " + to_string(g) + " is outside (0, 1)");
}

struct Elem {
  Rat v;
  bool strict;
  int index;
};

bool fits(const Rat& need, bool strict, const Rat& slot) { return strict ? need < slot : need <= slot; }

// Sorted threshold matching against {A/N, (N-A)/N, 1/N, ...}. Elements must be
// positive, at least three of them.
std::optional<JNWitness> search_rotation_slots(std::vector<Elem> elems) {
  std::sort(elems.begin(), elems.end(), [](const Elem& x, const Elem& y) {
    return x.v != y.v ? x.v > y.v : (x.strict && !y.strict);
  });
  Rat smallest = elems.back().v;
  Int n_max = std::max<Int>(2, ceil_of(Rat(1) / smallest) + 1);
  const std::size_t k = elems.size();
  for (Int N = 2; N <= n_max; ++N) {
    for (Int A = 1; A < N; ++A) {
      if (gcd_of(A, N) != 1) continue;
      std::vector<Int> slots(k, Int(1));
      slots[0] = std::max(A, N - A);
      slots[1] = std::min(A, N - A);
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) ok = fits(elems[i].v, elems[i].strict, Rat(slots[i], N));
      if (!ok) continue;
      JNWitness w;
      w.A = A;
      w.N = N;
      w.slot.assign(k, 0);
      for (std::size_t i = 0; i < k; ++i) w.slot[elems[i].index] = slots[i];
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

ReducedInstance normalize(const JNInstance& inst) {
  check_gammas(inst.gammas);
  for (int j : inst.J)
    if (j < 0 || j >= static_cast<int>(inst.taus.size())) throw std::invalid_argument("J index out of range");
  ReducedInstance r;
  r.b = inst.b;
  r.gammas = inst.gammas;
  for (int j = 0; j < static_cast<int>(inst.taus.size()); ++j) {
    Int f = floor_of(inst.taus[j]);
    r.b -= f;
    Rat fr = inst.taus[j] - Rat(f);
    bool in_j = inst.J.count(j) > 0;
    if (fr == 0) {
      if (in_j) continue;
      ++r.s0;
    } else {
      ++r.r1;
      if (in_j) r.J0.insert(static_cast<int>(r.taus_bar.size()));
    }
    r.taus_bar.push_back(fr);
    r.source_index.push_back(j);
  }
  r.r2 = r.r1 + r.s0;
  return r;
}

JNResult jn_decide(const JNInstance& inst) {
  ReducedInstance r = normalize(inst);
  const int n = static_cast<int>(r.gammas.size());
  const int k = n + r.r2;
  JNResult out;
  if (k <= 2) {
    Rat sum = std::accumulate(r.gammas.begin(), r.gammas.end(), Rat(0));
    sum = std::accumulate(r.taus_bar.begin(), r.taus_bar.end(), sum);
    out.realizable = sum == Rat(r.b);
    out.rule = "abelian: sum of rotation numbers equals b";
    return out;
  }
  if (r.s0 > 0) {
    out.realizable = 2 - r.s0 <= r.b && r.b <= k - 2;
    out.rule = "zero translation numbers present: 2 - s0 <= b <= k - 2";
    return out;
  }
  if (r.b < 1 || r.b > k - 1) {
    out.rule = "b outside [1, k-1]";
    return out;
  }
  if (r.b >= 2 && r.b <= k - 2) {
    out.realizable = true;
    out.rule = "2 <= b <= k - 2";
    return out;
  }
  const bool dual = r.b == k - 1;
  std::vector<Elem> elems;
  for (int i = 0; i < n; ++i) elems.push_back({dual ? 1 - r.gammas[i] : r.gammas[i], true, i});
  for (int j = 0; j < static_cast<int>(r.taus_bar.size()); ++j)
    elems.push_back({dual ? 1 - r.taus_bar[j] : r.taus_bar[j], r.J0.count(j) > 0, n + j});
  out.witness = search_rotation_slots(std::move(elems));
  if (out.witness) out.witness->dual = dual;
  out.realizable = out.witness.has_value();
  out.rule = dual ? "b = k - 1: rotation slot search on complements" : "b = 1: rotation slot search";
  return out;
}

bool jn_realizable(const JNInstance& inst) { return jn_decide(inst).realizable; }

std::pair<Int, Int> min_denominator_fraction(const Rat& lo, const Rat& hi, bool lo_open, bool hi_open) {
  if (lo > hi || (lo == hi && (lo_open || hi_open))) throw std::invalid_argument("empty interval");
  Int k = lo_open ? floor_of(lo) + 1 : ceil_of(lo);
  if (Rat(k) < hi || (Rat(k) == hi && !hi_open)) return {k, 1};
  // No integer inside, so the interval sits in (f, f + 1).
  Int f = floor_of(lo);
  Rat l = lo - Rat(f), h = hi - Rat(f);
  Int a = 0, b = 1, c = 1, d = 1;
  for (;;) {
    Int p = a + c, q = b + d;
    Rat m(p, q);
    bool above = lo_open ? m > l : m >= l;
    bool below = hi_open ? m < h : m <= h;
    if (above && below) return {p + f * q, q};
    if (!above) {
      a = p;
      b = q;
    } else {
      c = p;
      d = q;
    }
  }
}

namespace {

// Largest N with the element fitting a 1/N slot; nullopt when any N works.
std::optional<Int> small_slot_bound(const ExtElem& e) {
  if (e.u == 0) return std::nullopt;
  Rat inv = Rat(1) / e.u;
  return e.strict ? ceil_of(inv) - 1 : floor_of(inv);
}

}  // namespace

std::optional<Extension> best_extension(std::vector<ExtElem> e) {
  if (e.size() < 2) throw std::invalid_argument("best_extension needs at least two elements");
  for (const auto& x : e)
    if (x.u < 0 || x.u >= 1 || (x.u == 0 && !x.strict)) throw std::invalid_argument("extension element outside [0, 1)");
  std::sort(e.begin(), e.end(), [](const ExtElem& x, const ExtElem& y) {
    return x.u != y.u ? x.u > y.u : (x.strict && !y.strict);
  });
  std::optional<Extension> best;
  auto consider = [&](const Rat& value, bool attained) {
    if (!best || value > best->value)
      best = Extension{value, attained};
    else if (value == best->value)
      best->attained = best->attained || attained;
  };

  // Extra slot on a 1/N position; the two largest elements take A/N and (N-A)/N.
  {
    std::optional<Int> n_max = e.size() >= 3 ? small_slot_bound(e[2]) : std::nullopt;
    Rat lo = e[0].u, hi = 1 - e[1].u;
    if (lo < hi || (lo == hi && !e[0].strict && !e[1].strict)) {
      Int N = min_denominator_fraction(lo, hi, e[0].strict, e[1].strict).second;
      if (!n_max || N <= *n_max) consider(Rat(1, N), true);
    }
  }

  // Extra slot on A/N; the largest element takes (N-A)/N, the rest 1/N.
  {
    std::optional<Int> n_max = small_slot_bound(e[1]);
    if (!n_max) {
      if (e[0].u == 0)
        consider(1, false);
      else
        consider(1 - e[0].u, !e[0].strict);
    } else {
      for (Int N = 2; N <= *n_max; ++N) {
        Rat t = (1 - e[0].u) * Rat(N);
        Int a = e[0].strict ? ceil_of(t) - 1 : floor_of(t);
        a = std::min(a, N - 1);
        for (; a >= 1; --a)
          if (gcd_of(a, N) == 1) {
            consider(Rat(a, N), true);
            break;
          }
      }
    }
  }
  return best;
}

TauIntervalResult tau_interval(const std::vector<Rat>& gammas, const std::set<int>& J, const std::vector<Rat>& taus_fixed) {
  check_gammas(gammas);
  for (int j : J)
    if (j < 0 || j >= static_cast<int>(taus_fixed.size())) throw std::invalid_argument("J index out of range");
  TauIntervalResult res;
  const int n = static_cast<int>(gammas.size());
  Rat total = std::accumulate(gammas.begin(), gammas.end(), Rat(0));
  Rat frac_sum = total;
  bool j0_empty = true;
  std::vector<ExtElem> left, right;
  for (const auto& g : gammas) {
    left.push_back({1 - g, true});
    right.push_back({g, true});
  }
  res.b0 = 0;
  for (int j = 0; j < static_cast<int>(taus_fixed.size()); ++j) {
    const Rat& t = taus_fixed[j];
    total += t;
    res.b0 -= floor_of(t);
    Rat fr = frac_of(t);
    bool in_j = J.count(j) > 0;
    if (fr == 0) {
      if (!in_j) ++res.s0;
      continue;
    }
    ++res.r1;
    frac_sum += fr;
    j0_empty = j0_empty && !in_j;
    left.push_back({1 - fr, in_j});
    right.push_back({fr, in_j});
  }
  const int k_eff = n + res.r1 + res.s0;
  if (k_eff <= 1) {
    res.T = res.T_str = Interval::point(-total);
    res.m0 = res.m1 = 0;
    res.rule = "abelian point";
    return res;
  }
  res.m0 = res.b0 - (k_eff - 1);
  res.m1 = res.b0 + res.s0 - 1;
  if (res.s0 > 0) {
    res.T = Interval::closed(Rat(res.m0), Rat(res.m1));
    res.T_str = Interval::open(Rat(res.m0), Rat(res.m1));
    res.rule = "integral unconstrained inputs";
    return res;
  }
  auto L = best_extension(left);
  auto R = best_extension(right);
  if (n + res.r1 == 2) {
    bool exception = n == 0 && frac_sum == 1 && j0_empty;
    bool left_expected = frac_sum > 1 || exception;
    bool right_expected = frac_sum < 1 || exception;
    if (L.has_value() != left_expected || R.has_value() != right_expected)
      throw std::logic_error("extension search disagrees with the two-element criterion");
  }
  Bound lo = L ? Bound::at(Rat(res.m0) - L->value, L->attained) : Bound::at(Rat(res.m0), true);
  Bound hi = R ? Bound::at(Rat(res.m1) + R->value, R->attained) : Bound::at(Rat(res.m1), true);
  res.T = {lo, hi};
  if (res.T.is_point()) {
    if (!(frac_sum == 1 && (n != 0 || !j0_empty))) throw std::logic_error("unexpected degenerate interval");
    res.T_str = res.T;
    res.rule = "two elements summing to one";
  } else {
    res.T_str = Interval::open(lo.value, hi.value);
    res.rule = "extension by rotation slots";
  }
  return res;
}

namespace {

// tau in k + (lo..hi) for every integer k in [kmin, kmax], or the integers
// themselves when integral is set.
struct CellGroup {
  bool integral = false;
  Int kmin, kmax;
  Rat lo, hi;
  bool lo_closed = false, hi_closed = false;
};

std::vector<CellGroup> decompose(const Interval& iv) {
  std::vector<CellGroup> out;
  const Rat& lo = iv.lo.value;
  const Rat& hi = iv.hi.value;
  Int k1 = iv.lo.closed ? ceil_of(lo) : floor_of(lo) + 1;
  Int k2 = iv.hi.closed ? floor_of(hi) : ceil_of(hi) - 1;
  if (k1 <= k2) out.push_back({true, k1, k2, 0, 0, true, true});
  Int f1 = ceil_of(lo), f2 = floor_of(hi) - 1;
  if (f1 <= f2) out.push_back({false, f1, f2, 0, 1, false, false});
  std::set<Int> partial;
  if (!is_integral(lo)) partial.insert(floor_of(lo));
  if (!is_integral(hi)) partial.insert(floor_of(hi));
  for (const Int& k : partial) {
    Rat kk(k);
    Interval cell = Interval::open(kk, kk + 1);
    Interval sub{Rat(lo) > kk ? iv.lo : cell.lo, Rat(hi) < kk + 1 ? iv.hi : cell.hi};
    if (sub.empty()) continue;
    out.push_back({false, k, k, sub.lo.value - kk, sub.hi.value - kk, sub.lo.closed, sub.hi.closed});
  }
  return out;
}

Interval truncate(const Interval& iv, const Rat& depth) {
  if (iv.lo.infinite && iv.hi.infinite) return Interval::closed(-depth, depth);
  if (iv.lo.infinite) return {Bound::at(iv.hi.value - depth, true), iv.hi};
  if (iv.hi.infinite) return {iv.lo, Bound::at(iv.lo.value + depth, true)};
  return iv;
}

// Interval of -(sum gammas) - sum of ranges.
Interval minkowski_sweep(const Rat& gamma_sum, const std::vector<const Interval*>& parts) {
  Interval r{Bound::at(-gamma_sum, true), Bound::at(-gamma_sum, true)};
  for (const Interval* p : parts) {
    if (p->hi.infinite)
      r.lo = Bound::unbounded();
    else if (!r.lo.infinite)
      r.lo = Bound::at(r.lo.value - p->hi.value, r.lo.closed && p->hi.closed);
    if (p->lo.infinite)
      r.hi = Bound::unbounded();
    else if (!r.hi.infinite)
      r.hi = Bound::at(r.hi.value - p->lo.value, r.hi.closed && p->lo.closed);
  }
  return r;
}

// T and T_str over one box of cells, all cells placed at k = 0.
TauUnion cell_union(const std::vector<Rat>& gammas, const std::vector<const CellGroup*>& cells,
                    const std::vector<bool>& strong) {
  const int n = static_cast<int>(gammas.size());
  Rat gamma_sum = std::accumulate(gammas.begin(), gammas.end(), Rat(0));
  int r1 = 0, s0 = 0;
  std::vector<ExtElem> left, right;
  for (const auto& g : gammas) {
    left.push_back({1 - g, true});
    right.push_back({g, true});
  }
  Interval s_range = Interval::point(gamma_sum);
  std::vector<const Interval*> ranges;
  std::vector<Interval> storage;
  storage.reserve(cells.size());
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const CellGroup& c = *cells[i];
    if (c.integral) {
      if (!strong[i]) ++s0;
      continue;
    }
    ++r1;
    storage.push_back({Bound::at(c.lo, c.lo_closed), Bound::at(c.hi, c.hi_closed)});
    ranges.push_back(&storage.back());
    left.push_back({1 - c.hi, strong[i] || !c.hi_closed});
    right.push_back({c.lo, strong[i] || !c.lo_closed});
  }
  TauUnion out;
  if (n + r1 + s0 <= 1) {
    Interval sweep = minkowski_sweep(gamma_sum, ranges);
    out.T.add(sweep);
    out.T_str.add(sweep);
    return out;
  }
  Rat m0(-(n + r1 + s0 - 1)), m1(s0 - 1);
  if (s0 > 0) {
    out.T.add(Interval::closed(m0, m1));
    out.T_str.add(Interval::open(m0, m1));
    return out;
  }
  auto L = best_extension(left);
  auto R = best_extension(right);
  Bound lo = L ? Bound::at(m0 - L->value, L->attained) : Bound::at(m0, true);
  Bound hi = R ? Bound::at(m1 + R->value, R->attained) : Bound::at(m1, true);
  out.T.add({lo, hi});
  if (n + r1 >= 3) {
    out.T_str.add(Interval::open(lo.value, hi.value));
  } else {
    out.T_str.add(Interval::open(lo.value, m0));
    out.T_str.add(Interval::open(m0, hi.value));
    // m0 itself is strongly realized exactly when the rotation numbers can sum to 1.
    Interval neg = minkowski_sweep(gamma_sum, ranges);
    Interval sums{Bound::at(-neg.hi.value, neg.hi.closed), Bound::at(-neg.lo.value, neg.lo.closed)};
    if (sums.contains(1)) out.T_str.add(Interval::point(m0));
  }
  return out;
}

void add_shifts(IntervalSet& into, const IntervalSet& base, const Int& bmin, const Int& bmax) {
  if (bmax - bmin > 100000) throw std::runtime_error("tau_union: shift range too large");
  for (const auto& p : base.parts()) {
    bool covers_gap = !p.bounded() || p.hi.value - p.lo.value > 1 ||
                      (p.hi.value - p.lo.value == 1 && p.lo.closed && p.hi.closed);
    if (covers_gap) {
      Interval span = p;
      if (!span.lo.infinite) span.lo.value += Rat(bmin);
      if (!span.hi.infinite) span.hi.value += Rat(bmax);
      into.add(span);
      continue;
    }
    for (Int b = bmin; b <= bmax; ++b) into.add(p.shifted(Rat(b)));
  }
}

template <class F>
void for_each_combination(const std::vector<std::size_t>& sizes, F&& f) {
  std::vector<std::size_t> idx(sizes.size(), 0);
  for (std::size_t s : sizes)
    if (s == 0) return;
  for (;;) {
    f(idx);
    std::size_t i = 0;
    for (; i < idx.size(); ++i) {
      if (++idx[i] < sizes[i]) break;
      idx[i] = 0;
    }
    if (i == idx.size()) return;
  }
}

}  // namespace

TauUnion tau_union(const std::vector<Rat>& gammas, const std::vector<RangeInput>& inputs) {
  check_gammas(gammas);
  TauUnion out;
  for (const auto& in : inputs)
    if (in.values.empty()) return out;
  const Rat gamma_sum = std::accumulate(gammas.begin(), gammas.end(), Rat(0));
  // Beyond this depth on a ray every T(tau) already lies in the abelian sweep.
  const Rat depth(static_cast<long>(gammas.size() + inputs.size()) + 3);

  std::vector<std::size_t> part_counts;
  for (const auto& in : inputs) part_counts.push_back(in.values.parts().size());
  for_each_combination(part_counts, [&](const std::vector<std::size_t>& idx) {
    std::vector<const Interval*> chosen;
    bool unbounded = false;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      chosen.push_back(&inputs[i].values.parts()[idx[i]]);
      unbounded = unbounded || !chosen.back()->bounded();
    }
    if (!unbounded) return;
    Interval sweep = minkowski_sweep(gamma_sum, chosen);
    out.T.add(sweep);
    out.T_str.add(sweep);
  });

  std::vector<std::vector<CellGroup>> groups(inputs.size());
  std::vector<bool> strong;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    strong.push_back(inputs[i].strong);
    IntervalSet clipped;
    for (const auto& p : inputs[i].values.parts()) clipped.add(truncate(p, depth));
    for (const auto& p : clipped.parts()) {
      auto g = decompose(p);
      groups[i].insert(groups[i].end(), g.begin(), g.end());
    }
  }
  std::vector<std::size_t> group_counts;
  for (const auto& g : groups) group_counts.push_back(g.size());
  for_each_combination(group_counts, [&](const std::vector<std::size_t>& idx) {
    std::vector<const CellGroup*> cells;
    Int bmin = 0, bmax = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
      cells.push_back(&groups[i][idx[i]]);
      bmin -= cells.back()->kmax;
      bmax -= cells.back()->kmin;
    }
    TauUnion base = cell_union(gammas, cells, strong);
    add_shifts(out.T, base.T, bmin, bmax);
    add_shifts(out.T_str, base.T_str, bmin, bmax);
  });
  return out;
}

}  // namespace graphfol
