#include "graphfol/smith.hpp"

#include <algorithm>

namespace graphfol {

void Presentation::add_relation(std::vector<std::pair<int, Int>> terms) {
  std::vector<Int> row(generators, Int(0));
  for (auto& [g, c] : terms) {
    if (g < 0 || g >= generators) throw std::out_of_range("relation refers to unknown generator");
    row[g] += c;
  }
  relations.push_back(std::move(row));
}

SmithForm smith_form(const Presentation& p) {
  const int n = p.generators;
  std::vector<std::vector<Int>> R = p.relations;
  for (auto& row : R) row.resize(n, Int(0));
  const int m = static_cast<int>(R.size());
  SmithForm out;
  out.V.assign(n, std::vector<Int>(n, Int(0)));
  for (int i = 0; i < n; ++i) out.V[i][i] = 1;
  out.diag.assign(n, Int(0));

  auto swap_cols = [&](int a, int b) {
    if (a == b) return;
    for (auto& row : R) std::swap(row[a], row[b]);
    for (auto& row : out.V) std::swap(row[a], row[b]);
  };
  auto col_axpy = [&](int dst, int src, const Int& q) {  // col dst -= q * col src
    for (auto& row : R) row[dst] -= q * row[src];
    for (auto& row : out.V) row[dst] -= q * row[src];
  };

  for (int t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      int pi = -1, pj = -1;
      for (int i = t; i < m; ++i)
        for (int j = t; j < n; ++j)
          if (R[i][j] != 0 && (pi < 0 || abs(R[i][j]) < abs(R[pi][pj]))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) goto done;
      std::swap(R[t], R[pi]);
      swap_cols(t, pj);
      bool clean = true;
      for (int i = t + 1; i < m; ++i) {
        if (R[i][t] == 0) continue;
        Int q = R[i][t] / R[t][t];
        for (int j = t; j < n; ++j) R[i][j] -= q * R[t][j];
        clean = clean && R[i][t] == 0;
      }
      for (int j = t + 1; j < n; ++j) {
        if (R[t][j] == 0) continue;
        col_axpy(j, t, R[t][j] / R[t][t]);
        clean = clean && R[t][j] == 0;
      }
      if (clean) break;
    }
    out.diag[t] = abs(R[t][t]);
  }
done:
  return out;
}

int SmithForm::free_rank() const {
  return static_cast<int>(std::count(diag.begin(), diag.end(), Int(0)));
}

std::vector<Int> SmithForm::torsion() const {
  // diag need not form a divisibility chain; gcd/lcm exchanges make it one
  // without changing the group.
  std::vector<Int> t;
  for (const auto& d : diag)
    if (d > 1) t.push_back(d);
  for (std::size_t i = 0; i < t.size(); ++i)
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      Int g = gcd_of(t[i], t[j]);
      Int l = t[i] / g * t[j];
      t[i] = g;
      t[j] = l;
    }
  std::erase_if(t, [](const Int& d) { return d == 1; });
  return t;
}

std::optional<Int> SmithForm::order() const {
  if (free_rank() > 0) return std::nullopt;
  return torsion_order();
}

Int SmithForm::torsion_order() const {
  Int o = 1;
  for (const auto& d : diag)
    if (d > 1) o *= d;
  return o;
}

std::optional<Int> SmithForm::element_order(const std::vector<Int>& x) const {
  const std::size_t n = diag.size();
  if (x.size() != n) throw std::invalid_argument("element has wrong length");
  Int order = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Int y = 0;
    for (std::size_t k = 0; k < n; ++k) y += x[k] * V[k][i];
    if (diag[i] == 0) {
      if (y != 0) return std::nullopt;
      continue;
    }
    order = lcm_of(order, diag[i] / gcd_of(diag[i], y));
  }
  return order;
}

std::string SmithForm::describe() const {
  std::string s;
  int f = free_rank();
  for (int i = 0; i < f; ++i) s += std::string(s.empty() ? "" : " + ") + "Z";
  for (const auto& d : torsion()) s += std::string(s.empty() ? "" : " + ") + "Z/" + d.str();
  return s.empty() ? "0" : s;
}

}  // namespace graphfol
