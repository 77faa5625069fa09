#include "graphfol/oracle.hpp"

#include <algorithm>

#include "graphfol/jnkernel.hpp"

namespace graphfol {

std::vector<Rat> SampleGrid::points() const {
  if (max_denominator < 1) throw std::invalid_argument("grid needs max_denominator >= 1");
  std::set<Rat> pts;
  for (int q = 1; q <= max_denominator; ++q)
    for (Int p = ceil_of(lo * q); Rat(p, q) <= hi; ++p) pts.insert(Rat(p, q));
  return {pts.begin(), pts.end()};
}

std::vector<Rat> sample_detected_set(const SeifertPiece& piece, const std::set<int>& J, const std::vector<Rat>& taus,
                                     const SampleGrid& grid, bool strong) {
  piece.validate();
  const auto gammas = piece.gammas();
  std::set<int> JJ = J;
  if (strong) JJ.insert(static_cast<int>(taus.size()));
  std::vector<Rat> out;
  for (const auto& t : grid.points()) {
    std::vector<Rat> all = taus;
    all.push_back(t);
    if (jn_realizable({JJ, 0, gammas, all})) out.push_back(t);
  }
  return out;
}

namespace {

int window_of(const SeifertPiece& p) { return 2 + p.n() + p.boundary_count; }

void add_side(std::set<Slope>& out, const SeifertPiece& piece, const BasisChange& to_a, int D) {
  const int W = window_of(piece);
  for (int q = 1; q <= D; ++q)
    for (int p = -W * q; p <= W * q; ++p)
      if (gcd_of(Int(p), Int(q)) == 1) out.insert(change_basis(Slope::of_tau(Rat(p, q)), to_a));
  out.insert(change_basis(Slope::vertical(), to_a));
  if (piece.boundary_count == 1) out.insert(change_basis(rational_longitude(piece).slope, to_a));
  if (piece.is_n2() && piece.base == Base::P) out.insert(change_basis(n2_h0(), to_a));
}

}  // namespace

std::vector<Slope> edge_candidates(const GraphManifold& w, int edge, int D) {
  const Edge& E = w.edges.at(edge);
  std::set<Slope> out;
  add_side(out, w.pieces[E.piece_a], BasisChange::identity(), D);
  add_side(out, w.pieces[E.piece_b], E.matrix.inverse(), D);
  return {out.begin(), out.end()};
}

namespace {

class Search {
 public:
  Search(const GraphManifold& w, const std::set<int>& K, int D, bool horizontal) : w_(w), K_(K) {
    const int m = static_cast<int>(w.edges.size());
    for (int e = 0; e < m; ++e) {
      auto c = edge_candidates(w, e, D);
      if (horizontal)
        std::erase_if(c, [&](const Slope& s) { return s.is_vertical() || change_basis(s, w.edges[e].matrix).is_vertical(); });
      cands_.push_back(std::move(c));
    }
    // A piece is checked once its last edge (in index order) is assigned.
    ready_.resize(m);
    std::vector<int> last(w.pieces.size(), -1);
    for (int e = 0; e < m; ++e) {
      last[w.edges[e].piece_a] = std::max(last[w.edges[e].piece_a], e);
      last[w.edges[e].piece_b] = std::max(last[w.edges[e].piece_b], e);
    }
    for (int p = 0; p < static_cast<int>(w.pieces.size()); ++p)
      if (last[p] >= 0) ready_[last[p]].push_back(p);
    current_.assign(m, Slope::vertical());
  }

  bool run(OracleResult& res) {
    if (w_.edges.empty()) {
      ++res.assignments_checked;
      if (!piece_ok(0)) return false;
      return finish(res);
    }
    return step(0, res);
  }

 private:
  bool piece_ok(int p) const {
    SlopeTuple t = piece_tuple(w_, p, current_);
    std::set<int> J = piece_strong_boundaries(w_, p, K_);
    for (int j : J)
      if (t[j].is_vertical()) return false;
    return detect_tuple(w_.pieces[p], J, t).j_detected;
  }

  bool finish(OracleResult& res) {
    GluingStatus gs = gluing_status(w_, K_, current_);
    if (!gs.unobstructed) return false;
    res.witness = current_;
    return true;
  }

  bool step(int e, OracleResult& res) {
    if (e == static_cast<int>(cands_.size())) {
      ++res.assignments_checked;
      return finish(res);
    }
    for (const auto& s : cands_[e]) {
      current_[e] = s;
      bool ok = true;
      for (int p : ready_[e])
        if (!(ok = piece_ok(p))) break;
      if (ok && step(e + 1, res)) return true;
    }
    return false;
  }

  const GraphManifold& w_;
  std::set<int> K_;
  std::vector<std::vector<Slope>> cands_;
  std::vector<std::vector<int>> ready_;
  SlopeAssignment current_;
};

}  // namespace

OracleResult exhaustive_decide(const GraphManifold& w_in, const std::set<int>& K, int D, bool horizontal) {
  if (D < 1) throw std::invalid_argument("denominator bound must be at least 1");
  std::vector<bool> conv;
  GraphManifold w = canonical_form(w_in, &conv);
  w.validate();
  for (int e : K)
    if (e < 0 || e >= static_cast<int>(w.edges.size())) throw InputError("K refers to a missing edge");
  OracleResult res;
  res.max_denominator = D;
  if (Search(w, K, D, horizontal).run(res)) {
    res.verdict = OracleVerdict::FOUND;
    for (std::size_t e = 0; e < res.witness.size(); ++e)
      if (conv[w_in.edges[e].piece_a]) res.witness[e] = change_basis(res.witness[e], n2_disk_to_mobius());
  }
  return res;
}

}  // namespace graphfol
