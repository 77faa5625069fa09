#include "reference_oracles.hpp"

#include <algorithm>
#include <numeric>

namespace ref {

using graphfol::Base;
using graphfol::SeifertPiece;
using graphfol::Slope;

namespace {

Int floor_div(const Rat& q) {
  Int n = numerator(q), d = denominator(q);
  Int f = n / d;
  if (n % d != 0 && n < 0) --f;
  return f;
}

Int gcd(Int a, Int b) {
  a = abs(a);
  b = abs(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

struct Item {
  Rat v;
  bool strict;
};

// Every permutation of the slot multiset against the items.
bool slots_fit(const std::vector<Item>& items) {
  const int k = static_cast<int>(items.size());
  Rat smallest = 1;
  for (const auto& it : items) smallest = std::min(smallest, it.v);
  Int n_max = std::max<Int>(2, floor_div(Rat(1) / smallest) + 2);
  for (Int N = 2; N <= n_max; ++N) {
    for (Int A = 1; A < N; ++A) {
      if (gcd(A, N) != 1) continue;
      std::vector<Rat> slots(k, Rat(1) / Rat(N));
      slots[0] = Rat(A) / Rat(N);
      slots[1] = Rat(N - A) / Rat(N);
      std::vector<int> perm(k);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        bool ok = true;
        for (int i = 0; i < k && ok; ++i) {
          const Rat& s = slots[perm[i]];
          ok = items[i].strict ? items[i].v < s : items[i].v <= s;
        }
        if (ok) return true;
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
  }
  return false;
}

}  // namespace

bool jn_brute(const std::set<int>& J, const Int& b_in, const std::vector<Rat>& gammas, const std::vector<Rat>& taus) {
  Int b = b_in;
  std::vector<Item> items;
  for (const auto& g : gammas) items.push_back({g, true});
  int zeros = 0;
  for (int j = 0; j < static_cast<int>(taus.size()); ++j) {
    Int f = floor_div(taus[j]);
    b -= f;
    Rat fr = taus[j] - Rat(f);
    if (fr == 0) {
      if (!J.count(j)) ++zeros;
      continue;
    }
    items.push_back({fr, J.count(j) > 0});
  }
  const int k = static_cast<int>(items.size()) + zeros;
  if (k <= 2) {
    Rat s = 0;
    for (const auto& it : items) s += it.v;
    return s == Rat(b);
  }
  if (zeros > 0) return 2 - zeros <= b && b <= k - 2;
  if (b >= 2 && b <= k - 2) return true;
  if (b == 1) return slots_fit(items);
  if (b == k - 1) {
    for (auto& it : items) it.v = 1 - it.v;
    return slots_fit(items);
  }
  return false;
}

std::pair<Int, Int> min_denominator_scan(const Rat& lo, const Rat& hi, bool lo_open, bool hi_open) {
  for (Int q = 1;; ++q) {
    for (Int p = floor_div(lo * Rat(q)) - 1; Rat(p) / Rat(q) <= hi; ++p) {
      Rat x = Rat(p) / Rat(q);
      bool above = lo_open ? x > lo : x >= lo;
      bool below = hi_open ? x < hi : x <= hi;
      if (above && below) return {p, q};
    }
  }
}

Int determinant(std::vector<std::vector<Int>> m) {
  const int n = static_cast<int>(m.size());
  Int sign = 1, prev = 1;
  for (int k = 0; k < n; ++k) {
    if (m[k][k] == 0) {
      int r = k + 1;
      while (r < n && m[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
      m[i][k] = 0;
    }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

namespace {

// Relations of a one-boundary piece over generators h, x, y_1..y_n (, z).
std::vector<std::vector<Int>> relation_rows(const SeifertPiece& p) {
  const int n = p.n();
  const int m = 2 + n + (p.base == Base::Q ? 1 : 0);
  std::vector<std::vector<Int>> rows;
  for (int i = 0; i < n; ++i) {
    std::vector<Int> r(m, Int(0));
    r[2 + i] = p.fibres[i].a;
    r[0] = -p.fibres[i].b;
    rows.push_back(r);
  }
  std::vector<Int> prod(m, Int(0));
  prod[1] = 1;
  for (int i = 0; i < n; ++i) prod[2 + i] = 1;
  if (p.base == Base::Q) {
    prod[m - 1] = 2;
    std::vector<Int> twoh(m, Int(0));
    twoh[0] = 2;
    rows.push_back(twoh);
  }
  rows.push_back(prod);
  return rows;
}

void choose(int n, int k, std::vector<std::vector<int>>& out, std::vector<int>& cur, int start = 0) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, out, cur, i + 1);
    cur.pop_back();
  }
}

// gcd of all size-k minors.
Int minor_gcd(const std::vector<std::vector<Int>>& rows, int k) {
  const int R = static_cast<int>(rows.size()), C = static_cast<int>(rows[0].size());
  std::vector<std::vector<int>> rs, cs;
  std::vector<int> cur;
  choose(R, k, rs, cur);
  choose(C, k, cs, cur);
  Int g = 0;
  for (const auto& ri : rs)
    for (const auto& ci : cs) {
      std::vector<std::vector<Int>> sub(k, std::vector<Int>(k));
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) sub[a][b] = rows[ri[a]][ci[b]];
      g = gcd(g, determinant(sub));
    }
  return g;
}

Slope longitude(const SeifertPiece& p) {
  if (p.base == Base::Q) return Slope::vertical();
  Rat s = 0;
  for (const auto& f : p.fibres) s += Rat(f.b) / Rat(f.a);
  return Slope(numerator(s), denominator(s));
}

}  // namespace

Int piece_torsion_order(const SeifertPiece& p) {
  auto rows = relation_rows(p);
  return minor_gcd(rows, static_cast<int>(rows.size()));
}

Int longitude_order(const SeifertPiece& p) {
  auto rows = relation_rows(p);
  const int k = static_cast<int>(rows.size());
  Slope l = longitude(p);
  std::vector<Int> v(rows[0].size(), Int(0));
  v[0] = l.h_coeff();
  v[1] = l.dual_coeff();
  Int before = minor_gcd(rows, k);
  rows.push_back(v);
  return before / minor_gcd(rows, k);
}

Int two_piece_order(const graphfol::GraphManifold& w) {
  const auto& e = w.edges.at(0);
  const SeifertPiece& p1 = w.pieces[e.piece_a];
  const SeifertPiece& p2 = w.pieces[e.piece_b];
  Slope l1 = graphfol::change_basis(longitude(p1), e.matrix);
  Slope l2 = longitude(p2);
  Int delta = abs(l1.h_coeff() * l2.dual_coeff() - l1.dual_coeff() * l2.h_coeff());
  return longitude_order(p1) * longitude_order(p2) * piece_torsion_order(p1) * piece_torsion_order(p2) * delta;
}

}  // namespace ref
