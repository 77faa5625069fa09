#include "graphfol/seifert.hpp"

#include <algorithm>

#include "graphfol/jnkernel.hpp"

namespace graphfol {

std::vector<Rat> SeifertPiece::gammas() const {
  std::vector<Rat> g;
  for (const auto& f : fibres) g.emplace_back(f.b, f.a);
  return g;
}

void SeifertPiece::validate() const {
  if (boundary_count < 0) throw std::invalid_argument("negative boundary count");
  for (const auto& f : fibres) {
    if (f.a < 2 || f.b <= 0 || f.b >= f.a || gcd_of(f.a, f.b) != 1)
      throw std::invalid_argument("exceptional fibre (" + f.a.str() + "," + f.b.str() +
                                  ") needs a >= 2, 0 < b < a, gcd(a, b) = 1");
  }
}

bool SeifertPiece::degenerate() const {
  if (base == Base::Q) return false;
  return (boundary_count == 1 && n() <= 1) || (boundary_count == 2 && n() == 0);
}

bool SeifertPiece::is_n2() const {
  if (boundary_count != 1) return false;
  if (base == Base::Q) return fibres.empty();
  return n() == 2 && fibres[0].a == 2 && fibres[1].a == 2;
}

std::string SeifertPiece::str() const {
  std::string s = base == Base::P ? "P(" : "Q(";
  for (int i = 0; i < n(); ++i) s += (i ? "," : "") + to_string(Rat(fibres[i].b, fibres[i].a));
  return s + ") r=" + std::to_string(boundary_count);
}

int vertical_count(const SlopeTuple& alphas) {
  return static_cast<int>(std::count_if(alphas.begin(), alphas.end(), [](const Slope& s) { return s.is_vertical(); }));
}

PieceGenerators add_piece_relations(Presentation& pres, const SeifertPiece& piece) {
  PieceGenerators g;
  g.h = pres.add_generator();
  for (int j = 0; j < piece.boundary_count; ++j) g.x.push_back(pres.add_generator());
  for (int i = 0; i < piece.n(); ++i) g.y.push_back(pres.add_generator());
  if (piece.base == Base::Q) g.z = pres.add_generator();
  for (int i = 0; i < piece.n(); ++i) pres.add_relation({{g.y[i], piece.fibres[i].a}, {g.h, -piece.fibres[i].b}});
  std::vector<std::pair<int, Int>> product;
  for (int y : g.y) product.push_back({y, 1});
  for (int x : g.x) product.push_back({x, 1});
  if (piece.base == Base::Q) {
    product.push_back({g.z, 2});
    pres.add_relation({{g.h, 2}});
  }
  pres.add_relation(product);
  return g;
}

SmithForm piece_homology(const SeifertPiece& piece) {
  Presentation pres;
  add_piece_relations(pres, piece);
  return smith_form(pres);
}

std::vector<Int> boundary_class(const PieceGenerators& g, int generators, int j, const Slope& s) {
  std::vector<Int> v(generators, Int(0));
  v[g.h] += s.h_coeff();
  v[g.x.at(j)] += s.dual_coeff();
  return v;
}

Longitude rational_longitude(const SeifertPiece& piece) {
  piece.validate();
  if (piece.boundary_count != 1) throw std::invalid_argument("rational longitude needs exactly one boundary torus");
  Slope lambda = Slope::vertical();
  if (piece.base == Base::P) {
    Rat sum = 0;
    for (const auto& g : piece.gammas()) sum += g;
    lambda = Slope(numer(sum), denom(sum));
  }
  Presentation pres;
  PieceGenerators g = add_piece_relations(pres, piece);
  auto order = smith_form(pres).element_order(boundary_class(g, pres.generators, 0, lambda));
  if (!order) throw std::logic_error("rational longitude has infinite order");
  return {lambda, *order};
}

SeifertPiece nt_piece(int t) {
  if (t < 2) throw std::invalid_argument("N_t needs t >= 2");
  return {Base::P, {{t, 1}, {t, t - 1}}, 1};
}

SeifertPiece n2_disk() { return nt_piece(2); }
SeifertPiece n2_mobius() { return {Base::Q, {}, 1}; }
BasisChange n2_disk_to_mobius() { return {0, 1, 1, -1}; }
Slope n2_h0() { return Slope(1, 1); }

Slope FilledResult::to_filled(int i, const Slope& original) const {
  auto t = original.tau();
  if (!t) return original;
  return Slope::of_tau(*t + Rat(shift.at(i)));
}

std::string kind_name(FilledResult::Kind k) {
  switch (k) {
    case FilledResult::Kind::Piece: return "PIECE";
    case FilledResult::Kind::SolidTorus: return "SOLID_TORUS";
    case FilledResult::Kind::T2xI: return "T2xI";
    case FilledResult::Kind::Closed: return "CLOSED";
    case FilledResult::Kind::LensSum: return "LENS_SUM";
  }
  return "?";
}

FilledResult dehn_fill_many(const SeifertPiece& piece, const std::vector<std::pair<int, Slope>>& fillings) {
  piece.validate();
  std::set<int> seen;
  for (const auto& [j, s] : fillings) {
    if (j < 0 || j >= piece.boundary_count) throw std::invalid_argument("filling index out of range");
    if (!seen.insert(j).second) throw std::invalid_argument("boundary filled twice");
  }
  FilledResult st;
  st.piece = piece;
  for (int j = 0; j < piece.boundary_count; ++j) {
    st.boundary_origin.push_back(j);
    st.shift.push_back(0);
  }
  int verticals = 0;
  for (const auto& [orig, s] : fillings) {
    if (s.is_vertical()) {
      ++verticals;
      continue;
    }
    int i = static_cast<int>(std::find(st.boundary_origin.begin(), st.boundary_origin.end(), orig) - st.boundary_origin.begin());
    Slope cur = st.to_filled(i, s);
    // x_i^a = h^{b_raw}; normalize to 0 <= b < a by moving h^k onto another boundary.
    Int a = cur.dual_coeff();
    Int b_raw = -cur.h_coeff();
    Int k = floor_of(Rat(b_raw, a));
    Int b = b_raw - k * a;
    if (b != 0) st.piece.fibres.push_back({a, b});
    st.boundary_origin.erase(st.boundary_origin.begin() + i);
    st.shift.erase(st.shift.begin() + i);
    --st.piece.boundary_count;
    if (st.piece.boundary_count > 0)
      st.shift[0] += k;
    else
      st.closed_b = -k;
  }
  if (verticals > 0) {
    st.kind = FilledResult::Kind::LensSum;
    for (const auto& f : st.piece.fibres) st.lens_orders.push_back(f.a);
    st.solid_torus_summands = st.piece.boundary_count - verticals;
    st.s1xs2_summands = verticals - 1 + (st.piece.base == Base::Q ? 1 : 0);
    return st;
  }
  const int r = st.piece.boundary_count, n = st.piece.n();
  if (r == 0) {
    st.kind = FilledResult::Kind::Closed;
  } else if (st.piece.base == Base::Q) {
    st.kind = FilledResult::Kind::Piece;
  } else if (r == 1 && n <= 1) {
    st.kind = FilledResult::Kind::SolidTorus;
    Rat tau_new = n == 0 ? Rat(0) : Rat(-st.piece.fibres[0].b, st.piece.fibres[0].a);
    st.meridian = Slope::of_tau(tau_new - Rat(st.shift[0]));
  } else if (r == 2 && n == 0) {
    st.kind = FilledResult::Kind::T2xI;
  } else {
    st.kind = FilledResult::Kind::Piece;
  }
  return st;
}

FilledResult dehn_fill(const SeifertPiece& piece, int boundary_index, const Slope& filling) {
  return dehn_fill_many(piece, {{boundary_index, filling}});
}

namespace {

DetectionVerdict detect_single(const SeifertPiece& piece, const std::set<int>& J, const SlopeTuple& alphas) {
  DetectionVerdict d;
  const int v = vertical_count(alphas);
  if (piece.base == Base::Q) {
    d.detected = d.j_detected = v >= 1;
    if (d.detected) d.strongly_on = J;
    d.rule = v >= 1 ? "non-orientable base, some slope vertical" : "non-orientable base, horizontal tuple";
    return d;
  }
  if (v >= 2) {
    d.detected = d.j_detected = true;
    d.strongly_on = J;
    d.rule = "two or more vertical slopes";
    return d;
  }
  if (v == 1) {
    d.rule = "exactly one vertical slope";
    return d;
  }
  std::vector<Rat> taus;
  for (const auto& s : alphas) taus.push_back(*s.tau());
  const auto gammas = piece.gammas();
  d.detected = jn_realizable({{}, 0, gammas, taus});
  d.j_detected = jn_realizable({J, 0, gammas, taus});
  for (int j : J) {
    std::vector<Rat> others;
    for (int k = 0; k < static_cast<int>(taus.size()); ++k)
      if (k != j) others.push_back(taus[k]);
    if (tau_interval(gammas, {}, others).T_str.contains(taus[j])) d.strongly_on.insert(j);
  }
  d.rule = "horizontal tuple, realizability of translation numbers";
  return d;
}

void check_tuple(const SeifertPiece& piece, const std::set<int>& J, const SlopeTuple& alphas) {
  piece.validate();
  if (static_cast<int>(alphas.size()) != piece.boundary_count)
    throw std::invalid_argument("slope tuple length differs from boundary count");
  for (int j : J) {
    if (j < 0 || j >= piece.boundary_count) throw std::invalid_argument("J index out of range");
    if (alphas[j].is_vertical())
      throw std::invalid_argument("J contains boundary " + std::to_string(j) + " with the vertical slope");
  }
}

}  // namespace

DetectionVerdict detect_tuple(const SeifertPiece& piece, const std::set<int>& J, const SlopeTuple& alphas) {
  check_tuple(piece, J, alphas);
  DetectionVerdict d = detect_single(piece, J, alphas);
  if (!piece.is_n2()) return d;
  // The other Seifert structure can only add detections.
  BasisChange g = piece.base == Base::P ? n2_disk_to_mobius() : n2_disk_to_mobius().inverse();
  SeifertPiece other = piece.base == Base::P ? n2_mobius() : n2_disk();
  SlopeTuple converted{change_basis(alphas[0], g)};
  if (J.count(0) && converted[0].is_vertical()) return d;
  DetectionVerdict e = detect_single(other, J, converted);
  d.detected = d.detected || e.detected;
  d.j_detected = d.j_detected || e.j_detected;
  d.strongly_on.insert(e.strongly_on.begin(), e.strongly_on.end());
  return d;
}

std::string status_name(NlsStatus s) {
  switch (s) {
    case NlsStatus::LSPACE: return "LSPACE";
    case NlsStatus::NOT_LSPACE: return "NOT_LSPACE";
    case NlsStatus::NOT_QHS: return "NOT_QHS";
  }
  return "?";
}

NlsStatus nls_status(const SeifertPiece& piece, const std::set<int>& J, const SlopeTuple& alphas, int t) {
  if (t < 2) throw std::invalid_argument("t must be at least 2");
  check_tuple(piece, J, alphas);
  const int v = vertical_count(alphas);
  if (v >= 2 || (v >= 1 && piece.base == Base::Q)) return NlsStatus::NOT_QHS;
  return detect_tuple(piece, J, alphas).j_detected ? NlsStatus::NOT_LSPACE : NlsStatus::LSPACE;
}

}  // namespace graphfol
