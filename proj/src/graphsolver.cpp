#include "graphfol/graphsolver.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>

#include "graphfol/jnkernel.hpp"

namespace graphfol {

namespace {

std::string piece_label(int p) { return "piece " + std::to_string(p + 1); }
std::string edge_label(int e) { return "edge " + std::to_string(e + 1); }
std::string torus_label(int p, int j) {
  return "torus " + std::to_string(j + 1) + " of " + piece_label(p);
}

// Fibre slopes of every Seifert structure on the piece, in its own coordinates.
std::vector<Slope> fibre_slopes(const SeifertPiece& piece) {
  std::vector<Slope> out{Slope::vertical()};
  if (piece.is_n2())
    out.push_back(piece.base == Base::P ? change_basis(Slope::vertical(), n2_disk_to_mobius().inverse())
                                        : change_basis(Slope::vertical(), n2_disk_to_mobius()));
  return out;
}

// One end of an edge as seen from a piece.
struct Port {
  int edge;
  int local;
  int other;
  int other_local;
  BasisChange to_other;  // this piece's coordinates to the neighbour's
  bool side_a;
};

std::vector<std::vector<Port>> ports_of(const GraphManifold& w) {
  std::vector<std::vector<Port>> ports(w.pieces.size());
  for (int e = 0; e < static_cast<int>(w.edges.size()); ++e) {
    const Edge& E = w.edges[e];
    ports[E.piece_a].push_back({e, E.boundary_a, E.piece_b, E.boundary_b, E.matrix, true});
    ports[E.piece_b].push_back({e, E.boundary_b, E.piece_a, E.boundary_a, E.matrix.inverse(), false});
  }
  return ports;
}

Slope to_piece_coords(const GraphManifold& w, int e, int piece, const Slope& side_a_slope) {
  const Edge& E = w.edges[e];
  if (E.piece_a == piece) return side_a_slope;
  return change_basis(side_a_slope, E.matrix);
}

std::map<int, Slope> fillings_of(const GraphManifold& w, int piece) {
  std::map<int, Slope> f;
  for (const auto& F : w.fillings)
    if (F.piece == piece) f.emplace(F.boundary, F.slope);
  return f;
}

}  // namespace

void GraphManifold::validate() const {
  if (pieces.empty()) throw InputError("manifold has no pieces");
  const int np = static_cast<int>(pieces.size());
  std::vector<std::vector<int>> used(np);
  for (int p = 0; p < np; ++p) {
    try {
      pieces[p].validate();
    } catch (const std::invalid_argument& e) {
      throw InputError(piece_label(p) + ": " + e.what());
    }
    if (pieces[p].boundary_count < 1) throw InputError(piece_label(p) + ": needs at least one boundary torus");
    used[p].assign(pieces[p].boundary_count, 0);
  }
  auto mark = [&](int p, int j, const std::string& who) {
    if (p < 0 || p >= np) throw InputError(who + ": no such piece");
    if (j < 0 || j >= pieces[p].boundary_count) throw InputError(who + ": " + piece_label(p) + " has no torus " + std::to_string(j + 1));
    if (++used[p][j] > 1) throw InputError(who + ": " + torus_label(p, j) + " is used twice");
  };
  for (int e = 0; e < static_cast<int>(edges.size()); ++e) {
    const Edge& E = edges[e];
    Int d = E.matrix.det();
    if (d != 1 && d != -1) throw InputError(edge_label(e) + ": matrix not unimodular");
    mark(E.piece_a, E.boundary_a, edge_label(e));
    mark(E.piece_b, E.boundary_b, edge_label(e));
    // Some choice of fibration must differ across the torus; N_2 has two to choose from.
    bool separable = false;
    for (const Slope& fa : fibre_slopes(pieces[E.piece_a]))
      for (const Slope& fb : fibre_slopes(pieces[E.piece_b]))
        separable = separable || !(change_basis(fa, E.matrix) == fb);
    if (!separable) throw InputError(edge_label(e) + ": matrix identifies the Seifert fibres of both sides");
  }
  for (std::size_t f = 0; f < fillings.size(); ++f) mark(fillings[f].piece, fillings[f].boundary, "filling " + std::to_string(f + 1));
  for (int p = 0; p < np; ++p)
    for (int j = 0; j < pieces[p].boundary_count; ++j)
      if (!used[p][j]) throw InputError(torus_label(p, j) + " is neither glued nor filled");

  std::vector<int> comp(np);
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (const auto& E : edges) comp[find(E.piece_a)] = find(E.piece_b);
  for (int p = 1; p < np; ++p)
    if (find(p) != find(0)) throw InputError("disconnected graph");
  if (static_cast<int>(edges.size()) != np - 1) throw InputError("graph has a cycle, so H_1 is infinite");

  for (int p = 0; p < np; ++p) {
    std::vector<std::pair<int, Slope>> fills;
    for (const auto& F : fillings)
      if (F.piece == p) fills.push_back({F.boundary, F.slope});
    if (pieces[p].degenerate()) throw InputError(piece_label(p) + " is a solid torus or T^2 x I");
    if (fills.empty() || np == 1) continue;
    for (const auto& [j, s] : fills)
      if (s.is_vertical()) throw InputError(torus_label(p, j) + ": vertical filling of a piece in a graph manifold");
    auto res = dehn_fill_many(pieces[p], fills);
    if (res.kind != FilledResult::Kind::Piece) throw InputError("fillings degenerate " + piece_label(p) + " to " + kind_name(res.kind));
  }
}

GraphManifold canonical_form(const GraphManifold& w, std::vector<bool>* converted) {
  GraphManifold out = w;
  std::vector<bool> conv(w.pieces.size(), false);
  const BasisChange to_mobius = n2_disk_to_mobius();
  const BasisChange to_disk = to_mobius.inverse();
  for (int p = 0; p < static_cast<int>(w.pieces.size()); ++p) {
    if (w.pieces[p].base != Base::Q || !w.pieces[p].is_n2()) continue;
    conv[p] = true;
    out.pieces[p] = n2_disk();
    for (auto& E : out.edges) {
      if (E.piece_a == p) E.matrix = E.matrix.after(to_mobius);
      if (E.piece_b == p) E.matrix = to_disk.after(E.matrix);
    }
    for (auto& F : out.fillings)
      if (F.piece == p) F.slope = change_basis(F.slope, to_disk);
  }
  if (converted) *converted = conv;
  return out;
}

Presentation homology_presentation(const GraphManifold& w, std::vector<PieceGenerators>* gens_out) {
  Presentation pres;
  std::vector<PieceGenerators> gens;
  for (const auto& piece : w.pieces) gens.push_back(add_piece_relations(pres, piece));
  for (const auto& E : w.edges) {
    const auto& ga = gens[E.piece_a];
    const auto& gb = gens[E.piece_b];
    const auto& m = E.matrix.m;
    pres.add_relation({{ga.h, 1}, {gb.h, -m[0][0]}, {gb.x[E.boundary_b], -m[1][0]}});
    pres.add_relation({{ga.x[E.boundary_a], 1}, {gb.h, -m[0][1]}, {gb.x[E.boundary_b], -m[1][1]}});
  }
  for (const auto& F : w.fillings) {
    const auto& g = gens[F.piece];
    pres.add_relation({{g.h, F.slope.h_coeff()}, {g.x[F.boundary], F.slope.dual_coeff()}});
  }
  if (gens_out) *gens_out = gens;
  return pres;
}

SmithForm homology(const GraphManifold& w) { return smith_form(homology_presentation(w)); }

std::optional<Int> homology_order(const GraphManifold& w) {
  w.validate();
  return homology(w).order();
}

SlopeTuple piece_tuple(const GraphManifold& w, int piece, const SlopeAssignment& a) {
  if (a.size() != w.edges.size()) throw std::invalid_argument("slope assignment length differs from edge count");
  std::vector<std::optional<Slope>> t(w.pieces[piece].boundary_count);
  for (int e = 0; e < static_cast<int>(w.edges.size()); ++e) {
    const Edge& E = w.edges[e];
    if (E.piece_a == piece) t[E.boundary_a] = a[e];
    if (E.piece_b == piece) t[E.boundary_b] = change_basis(a[e], E.matrix);
  }
  for (const auto& [j, s] : fillings_of(w, piece)) t[j] = s;
  SlopeTuple out;
  for (auto& s : t) {
    if (!s) throw std::invalid_argument(piece_label(piece) + " has an unassigned torus");
    out.push_back(*s);
  }
  return out;
}

std::set<int> piece_strong_boundaries(const GraphManifold& w, int piece, const std::set<int>& K) {
  std::set<int> J;
  for (int e : K) {
    const Edge& E = w.edges.at(e);
    if (E.piece_a == piece) J.insert(E.boundary_a);
    if (E.piece_b == piece) J.insert(E.boundary_b);
  }
  for (const auto& [j, s] : fillings_of(w, piece)) J.insert(j);
  return J;
}

std::set<int> k_closure(const GraphManifold& w, const std::set<int>& K, const SlopeAssignment& a) {
  std::set<int> out = K;
  const auto ports = ports_of(w);
  for (int p = 0; p < static_cast<int>(w.pieces.size()); ++p) {
    std::vector<std::pair<int, Slope>> fills;
    std::vector<const Port*> open;
    for (const auto& port : ports[p]) {
      if (K.count(port.edge))
        fills.push_back({port.local, to_piece_coords(w, port.edge, p, a.at(port.edge))});
      else
        open.push_back(&port);
    }
    if (open.size() != 1 || fills.empty()) continue;
    for (const auto& [j, s] : fillings_of(w, p)) fills.push_back({j, s});
    if (std::any_of(fills.begin(), fills.end(), [](const auto& f) { return f.second.is_vertical(); })) continue;
    if (dehn_fill_many(w.pieces[p], fills).kind == FilledResult::Kind::SolidTorus) out.insert(open.front()->edge);
  }
  return out;
}

namespace {

bool coherent_for(const GraphManifold& w, const std::set<int>& K, const SlopeAssignment& a, std::vector<std::string>* notes) {
  bool ok = true;
  for (int p = 0; p < static_cast<int>(w.pieces.size()); ++p) {
    SlopeTuple t = piece_tuple(w, p, a);
    std::set<int> J = piece_strong_boundaries(w, p, K);
    auto vertical_in_j = std::find_if(J.begin(), J.end(), [&](int j) { return t[j].is_vertical(); });
    if (vertical_in_j != J.end()) {
      if (notes) notes->push_back(torus_label(p, *vertical_in_j) + ": slope must be strongly detected but is the fibre");
      ok = false;
      continue;
    }
    if (!detect_tuple(w.pieces[p], J, t).j_detected) {
      if (notes) notes->push_back(piece_label(p) + ": tuple not detected");
      ok = false;
    }
  }
  return ok;
}

GluingStatus status_of(const GraphManifold& w, const std::set<int>& K, const SlopeAssignment& a) {
  GluingStatus gs;
  gs.coherent = coherent_for(w, K, a, &gs.notes);
  gs.closure = k_closure(w, K, a);
  if (k_closure(w, gs.closure, a) != gs.closure) gs.notes.push_back("closure grows under a second pass");
  if (gs.coherent) gs.unobstructed = gs.closure == K || coherent_for(w, gs.closure, a, &gs.notes);
  return gs;
}

SlopeAssignment to_canonical(const GraphManifold& original, const std::vector<bool>& conv, const SlopeAssignment& a) {
  SlopeAssignment out = a;
  for (std::size_t e = 0; e < a.size(); ++e)
    if (conv[original.edges[e].piece_a]) out[e] = change_basis(a[e], n2_disk_to_mobius().inverse());
  return out;
}

SlopeAssignment from_canonical(const GraphManifold& original, const std::vector<bool>& conv, const SlopeAssignment& a) {
  SlopeAssignment out = a;
  for (std::size_t e = 0; e < a.size(); ++e)
    if (conv[original.edges[e].piece_a]) out[e] = change_basis(a[e], n2_disk_to_mobius());
  return out;
}

}  // namespace

GluingStatus gluing_status(const GraphManifold& w_in, const std::set<int>& K, const SlopeAssignment& a) {
  std::vector<bool> conv;
  GraphManifold w = canonical_form(w_in, &conv);
  w.validate();
  for (int e : K)
    if (e < 0 || e >= static_cast<int>(w.edges.size())) throw InputError("K refers to a missing edge");
  return status_of(w, K, to_canonical(w_in, conv, a));
}

namespace {

// One Seifert structure; see propagate_detected_set.
DetectedSlopeSet propagate_single(const SeifertPiece& piece, int out, const std::vector<SlopeSet>& constraints,
                                  const std::set<int>& strong) {
  DetectedSlopeSet res;
  std::vector<RangeInput> inputs;
  int vertical_capable = 0;
  bool all_horizontal = true;
  for (int j = 0; j < piece.boundary_count; ++j) {
    if (j == out) continue;
    const SlopeSet& c = constraints.at(j);
    bool is_strong = strong.count(j) > 0;
    bool can_vertical = c.vertical && !is_strong;
    if (!can_vertical && c.tau.empty()) return res;
    vertical_capable += can_vertical ? 1 : 0;
    all_horizontal = all_horizontal && !c.tau.empty();
    inputs.push_back({c.tau, is_strong});
  }
  if (piece.base == Base::Q) {
    res.vertical = true;
    if (vertical_capable >= 1) res.detected = res.strong = IntervalSet::all();
    return res;
  }
  res.vertical = vertical_capable >= 1;
  if (vertical_capable >= 2) {
    res.detected = res.strong = IntervalSet::all();
    return res;
  }
  if (all_horizontal) {
    TauUnion u = tau_union(piece.gammas(), inputs);
    res.detected = u.T;
    res.strong = u.T_str;
  }
  return res;
}

}  // namespace

DetectedSlopeSet propagate_detected_set(const SeifertPiece& piece, int out, const std::vector<SlopeSet>& constraints,
                                        const std::set<int>& strong_required) {
  piece.validate();
  if (out < 0 || out >= piece.boundary_count) throw std::invalid_argument("output torus out of range");
  if (static_cast<int>(constraints.size()) != piece.boundary_count)
    throw std::invalid_argument("one constraint per boundary torus expected");
  DetectedSlopeSet res = propagate_single(piece, out, constraints, strong_required);
  if (!piece.is_n2()) return res;
  BasisChange g = piece.base == Base::P ? n2_disk_to_mobius() : n2_disk_to_mobius().inverse();
  SeifertPiece other = piece.base == Base::P ? n2_mobius() : n2_disk();
  std::vector<SlopeSet> moved;
  for (const auto& c : constraints) moved.push_back(c.image(g));
  DetectedSlopeSet alt = propagate_single(other, out, moved, strong_required);
  SlopeSet plain = alt.plain().image(g.inverse());
  res.vertical = res.vertical || plain.vertical;
  res.detected = res.detected.unite(plain.tau);
  res.strong = res.strong.unite(alt.strong_set().image(g.inverse()).tau);
  return res;
}

std::string mode_name(Mode m) {
  switch (m) {
    case Mode::CTF: return "ctf";
    case Mode::LO: return "lo";
    case Mode::HORIZONTAL: return "horizontal";
    case Mode::STRONG: return "strong";
  }
  return "?";
}

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::YES: return "yes";
    case Verdict::NO: return "no";
    case Verdict::UNDECIDED: return "undecided";
  }
  return "?";
}

std::string lspace_name(LSpaceStatus s) {
  switch (s) {
    case LSpaceStatus::NOT_LSPACE_PROVED: return "NOT_LSPACE_PROVED";
    case LSpaceStatus::CONJECTURAL_LSPACE: return "CONJECTURAL_LSPACE";
    case LSpaceStatus::UNDETERMINED: return "UNDETERMINED";
  }
  return "?";
}

namespace {

struct TreeRun {
  bool feasible = false;
  bool extraction_failed = false;
  SlopeAssignment witness;
  std::vector<std::string> trace;
};

// Bottom-up propagation of admissible slope sets toward a root, then a
// top-down choice of one slope per edge.
class TreeSolver {
 public:
  TreeSolver(const GraphManifold& w, const std::set<int>& K, bool horizontal, int root)
      : w_(w), K_(K), horizontal_(horizontal), root_(root), ports_(ports_of(w)) {}

  TreeRun run() {
    TreeRun out;
    order_bfs();
    up_.assign(w_.edges.size(), SlopeSet{});
    for (auto it = order_.rbegin(); it != order_.rend(); ++it) {
      int p = *it;
      if (p == root_) continue;
      const Port& par = ports_[p][parent_port_[p]];
      DetectedSlopeSet d = propagate_detected_set(w_.pieces[p], par.local, constraints(p, par.edge, {}), strong(p));
      up_[par.edge] = admissible(d, K_.count(par.edge) > 0);
      if (up_[par.edge].empty()) {
        out.trace.push_back(piece_label(p) + " detects no slope on " + edge_label(par.edge));
        return out;
      }
    }
    if (ports_[root_].empty()) {
      auto fills = fillings_of(w_, root_);
      SlopeTuple t;
      for (const auto& [j, s] : fills) t.push_back(s);
      std::set<int> J;
      for (const auto& [j, s] : fills) J.insert(j);
      if (vertical_count(t) > 0) {
        out.trace.push_back("vertical filling yields a connected sum of lens spaces");
        return out;
      }
      out.feasible = detect_tuple(w_.pieces[root_], J, t).j_detected;
      if (!out.feasible) out.trace.push_back(piece_label(root_) + ": filled tuple not detected");
      return out;
    }
    {
      const Port& first = ports_[root_].front();
      DetectedSlopeSet d = propagate_detected_set(w_.pieces[root_], first.local, constraints(root_, first.edge, {}), strong(root_));
      SlopeSet meet = admissible(d, K_.count(first.edge) > 0).intersect(child_set(first));
      if (meet.empty()) {
        out.trace.push_back("root " + piece_label(root_) + " and its neighbour share no slope on " + edge_label(first.edge));
        return out;
      }
    }
    out.feasible = true;
    out.witness.assign(w_.edges.size(), Slope::vertical());
    std::vector<bool> chosen(w_.edges.size(), false);
    for (int p : order_) {
      std::map<int, Slope> fixed;
      for (const auto& port : ports_[p])
        if (chosen[port.edge]) fixed.emplace(port.local, to_piece_coords(w_, port.edge, p, out.witness[port.edge]));
      for (const auto& port : ports_[p]) {
        if (chosen[port.edge]) continue;
        DetectedSlopeSet d = propagate_detected_set(w_.pieces[p], port.local, constraints(p, port.edge, fixed), strong(p));
        SlopeSet cand = admissible(d, K_.count(port.edge) > 0).intersect(child_set(port));
        auto s = cand.pick();
        if (!s) {
          out.extraction_failed = true;
          out.trace.push_back("no slope left on " + edge_label(port.edge) + " while fixing " + piece_label(p));
          return out;
        }
        fixed.emplace(port.local, *s);
        out.witness[port.edge] = port.side_a ? *s : change_basis(*s, port.to_other);
        chosen[port.edge] = true;
      }
    }
    return out;
  }

 private:
  void order_bfs() {
    parent_port_.assign(w_.pieces.size(), -1);
    std::vector<bool> seen(w_.pieces.size(), false);
    std::deque<int> queue{root_};
    seen[root_] = true;
    while (!queue.empty()) {
      int p = queue.front();
      queue.pop_front();
      order_.push_back(p);
      for (const auto& port : ports_[p]) {
        if (seen[port.other]) continue;
        seen[port.other] = true;
        const auto& back = ports_[port.other];
        for (int k = 0; k < static_cast<int>(back.size()); ++k)
          if (back[k].edge == port.edge) parent_port_[port.other] = k;
        queue.push_back(port.other);
      }
    }
  }

  bool is_child(int p, const Port& port) const {
    return parent_port_[port.other] >= 0 && ports_[port.other][parent_port_[port.other]].edge == port.edge && port.other != root_ &&
           !(parent_port_[p] >= 0 && ports_[p][parent_port_[p]].edge == port.edge);
  }

  // Child side set moved into p's coordinates.
  SlopeSet child_set(const Port& port) const {
    SlopeSet s = up_[port.edge].image(port.to_other.inverse());
    if (horizontal_) s.vertical = false;
    return s;
  }

  SlopeSet admissible(const DetectedSlopeSet& d, bool strong_edge) const {
    if (strong_edge) return d.strong_set();
    return {d.vertical && !horizontal_, d.detected};
  }

  std::vector<SlopeSet> constraints(int p, int out_edge, const std::map<int, Slope>& fixed) const {
    std::vector<SlopeSet> c(w_.pieces[p].boundary_count, SlopeSet::everything());
    for (const auto& [j, s] : fillings_of(w_, p)) c[j] = SlopeSet::only(s);
    for (const auto& port : ports_[p]) {
      if (port.edge == out_edge) continue;
      auto f = fixed.find(port.local);
      if (f != fixed.end())
        c[port.local] = SlopeSet::only(f->second);
      else if (is_child(p, port))
        c[port.local] = child_set(port);
      else
        throw std::logic_error("parent slope not fixed during extraction");
    }
    return c;
  }

  std::set<int> strong(int p) const { return piece_strong_boundaries(w_, p, K_); }

  const GraphManifold& w_;
  std::set<int> K_;
  bool horizontal_;
  int root_;
  std::vector<std::vector<Port>> ports_;
  std::vector<int> parent_port_;
  std::vector<int> order_;
  std::vector<SlopeSet> up_;
};

bool all_horizontal(const GraphManifold& w, const SlopeAssignment& a) {
  for (std::size_t e = 0; e < a.size(); ++e)
    if (a[e].is_vertical() || change_basis(a[e], w.edges[e].matrix).is_vertical()) return false;
  for (const auto& F : w.fillings)
    if (F.slope.is_vertical()) return false;
  return true;
}

// Edges that the closure could add: the single open edge of a piece whose
// other tori are all in K (at least one of them).
std::vector<int> closure_candidates(const GraphManifold& w, const std::set<int>& K) {
  std::set<int> cand;
  const auto ports = ports_of(w);
  for (int p = 0; p < static_cast<int>(w.pieces.size()); ++p) {
    int in_k = 0;
    std::vector<int> open;
    for (const auto& port : ports[p]) {
      if (K.count(port.edge))
        ++in_k;
      else
        open.push_back(port.edge);
    }
    if (in_k >= 1 && open.size() == 1) cand.insert(open.front());
  }
  return {cand.begin(), cand.end()};
}

void require_qhs(const GraphManifold& w) {
  SmithForm h = homology(w);
  if (h.free_rank() > 0)
    throw InputError("not a rational homology sphere (H_1 = " + h.describe() +
                     "); such a manifold has left-orderable fundamental group, admits a co-oriented taut foliation and is not an L-space");
}

}  // namespace

Decision decide(const GraphManifold& w_in, const std::set<int>& K_in, Mode mode, int root) {
  std::vector<bool> conv;
  GraphManifold w = canonical_form(w_in, &conv);
  w.validate();
  require_qhs(w);
  if (root < 0 || root >= static_cast<int>(w.pieces.size())) throw std::invalid_argument("root out of range");
  Decision dec;
  if (mode == Mode::STRONG) {
    for (int e = 0; e < static_cast<int>(w.edges.size()); ++e) dec.K.insert(e);
  } else {
    dec.K = K_in;
  }
  for (int e : dec.K)
    if (e < 0 || e >= static_cast<int>(w.edges.size())) throw InputError("K refers to a missing edge");
  const bool horizontal = mode == Mode::HORIZONTAL;
  std::vector<int> cand = closure_candidates(w, dec.K);
  std::vector<std::set<int>> choices;
  for (unsigned mask = 0; mask < (1u << cand.size()); ++mask) {
    std::set<int> Kp = dec.K;
    for (std::size_t i = 0; i < cand.size(); ++i)
      if (mask & (1u << i)) Kp.insert(cand[i]);
    choices.push_back(Kp);
  }
  std::stable_sort(choices.begin(), choices.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  bool unverified = false;
  for (const auto& Kp : choices) {
    TreeRun run = TreeSolver(w, Kp, horizontal, root).run();
    dec.trace.insert(dec.trace.end(), run.trace.begin(), run.trace.end());
    if (!run.feasible) continue;
    if (run.extraction_failed) {
      unverified = true;
      continue;
    }
    GluingStatus gs = status_of(w, dec.K, run.witness);
    if (gs.coherent && gs.unobstructed && (!horizontal || all_horizontal(w, run.witness))) {
      dec.verdict = Verdict::YES;
      dec.witness = from_canonical(w_in, conv, run.witness);
      dec.K_used = Kp;
      return dec;
    }
    unverified = true;
    dec.trace.push_back("candidate witness fails verification");
    dec.trace.insert(dec.trace.end(), gs.notes.begin(), gs.notes.end());
  }
  dec.verdict = unverified ? Verdict::UNDECIDED : Verdict::NO;
  return dec;
}

ClassificationReport classify(const GraphManifold& w_in) {
  GraphManifold w = canonical_form(w_in);
  w.validate();
  require_qhs(w);
  ClassificationReport rep;
  SmithForm h = homology(w);
  rep.is_qhs = true;
  rep.h1_order = *h.order();
  rep.h1 = h.describe();
  const int last = static_cast<int>(w.pieces.size()) - 1;
  rep.ctf = decide(w_in, {}, Mode::CTF, 0);
  // Rooted at the other end of the tree, so the two runs cross-check.
  rep.lo = decide(w_in, {}, Mode::LO, last);
  rep.horizontal = decide(w_in, {}, Mode::HORIZONTAL, 0);
  rep.strong = decide(w_in, {}, Mode::STRONG, 0);
  auto decided = [](const Decision& d) { return d.verdict != Verdict::UNDECIDED; };
  if (decided(rep.ctf) && decided(rep.lo) && rep.ctf.verdict != rep.lo.verdict)
    throw std::logic_error("co-oriented taut foliation and left-orderability verdicts disagree");
  if (rep.strong.verdict == Verdict::YES && rep.horizontal.verdict == Verdict::NO)
    throw std::logic_error("strongly rational foliation found without a horizontal one");
  if (rep.horizontal.verdict == Verdict::YES && rep.ctf.verdict == Verdict::NO)
    throw std::logic_error("horizontal foliation found without a taut one");
  if (rep.lo.verdict == Verdict::YES)
    rep.lspace = LSpaceStatus::NOT_LSPACE_PROVED;
  else if (rep.lo.verdict == Verdict::NO)
    rep.lspace = LSpaceStatus::CONJECTURAL_LSPACE;
  return rep;
}

}  // namespace graphfol
