#include <doctest.h>

#include "graphfol/graphsolver.hpp"

using namespace graphfol;

namespace {
Rat q(int p, int d) { return ratio(p, d); }
SeifertPiece trefoil() { return {Base::P, {{2, 1}, {3, 2}}, 1}; }
}  // namespace

TEST_CASE("piece validation") {
  CHECK_NOTHROW(trefoil().validate());
  CHECK_THROWS(SeifertPiece{Base::P, {{2, 2}}, 1}.validate());
  CHECK_THROWS(SeifertPiece{Base::P, {{4, 2}}, 1}.validate());
  CHECK_THROWS(SeifertPiece{Base::P, {{1, 0}}, 1}.validate());
  CHECK(SeifertPiece{Base::P, {{2, 1}}, 1}.degenerate());
  CHECK(SeifertPiece{Base::P, {}, 2}.degenerate());
  CHECK_FALSE(SeifertPiece{Base::P, {{2, 1}}, 2}.degenerate());
  CHECK_FALSE(n2_mobius().degenerate());
  CHECK(n2_disk().is_n2());
  CHECK(n2_mobius().is_n2());
  CHECK_FALSE(nt_piece(3).is_n2());
}

TEST_CASE("rational longitudes") {
  Longitude t = rational_longitude(trefoil());
  CHECK(*t.slope.tau() == q(-7, 6));
  CHECK(t.order == 1);
  Longitude n3 = rational_longitude(nt_piece(3));
  CHECK(*n3.slope.tau() == Rat(-1));
  CHECK(n3.order == 3);
  Longitude m = rational_longitude(n2_mobius());
  CHECK(m.slope.is_vertical());
  CHECK(m.order == 2);
  CHECK_THROWS(rational_longitude(SeifertPiece{Base::P, {{2, 1}}, 2}));
}

TEST_CASE("the two structures on the twisted I-bundle share the longitude h0") {
  CHECK(nt_piece(2).gammas() == std::vector<Rat>{q(1, 2), q(1, 2)});
  CHECK(nt_piece(3).gammas() == std::vector<Rat>{q(1, 3), q(2, 3)});
  CHECK(rational_longitude(n2_disk()).slope == n2_h0());
  CHECK(change_basis(n2_h0(), n2_disk_to_mobius()) == Slope::vertical());
  CHECK(change_basis(Slope::vertical(), n2_disk_to_mobius()) == Slope(0, 1));
  CHECK(piece_homology(n2_disk()).describe() == piece_homology(n2_mobius()).describe());
}

TEST_CASE("homology of single pieces") {
  CHECK(piece_homology(trefoil()).describe() == "Z");
  CHECK(piece_homology(n2_disk()).describe() == "Z + Z/2");
  CHECK(piece_homology(nt_piece(3)).describe() == "Z + Z/3");
}

TEST_CASE("filling the trefoil exterior") {
  FilledResult meridian = dehn_fill(trefoil(), 0, Slope(1, 1));
  CHECK(meridian.kind == FilledResult::Kind::Closed);
  GraphManifold s3{{trefoil()}, {}, {{0, 0, Slope(1, 1)}}};
  CHECK(homology_order(s3) == Int(1));

  FilledResult fibre = dehn_fill(trefoil(), 0, Slope::vertical());
  CHECK(fibre.kind == FilledResult::Kind::LensSum);
  CHECK(fibre.lens_orders == std::vector<Int>{2, 3});
  CHECK(fibre.s1xs2_summands == 0);

  FilledResult interior = dehn_fill(trefoil(), 0, Slope(11, 10));
  CHECK(interior.kind == FilledResult::Kind::Closed);
  CHECK(interior.piece.n() == 3);
}

TEST_CASE("filling the product of an annulus gives a solid torus") {
  SeifertPiece annulus{Base::P, {}, 2};
  FilledResult r = dehn_fill(annulus, 0, Slope::of_tau(Rat(2)));
  CHECK(r.kind == FilledResult::Kind::SolidTorus);
  REQUIRE(r.meridian);
  CHECK(*r.meridian->tau() == Rat(-2));
  FilledResult s = dehn_fill(annulus, 1, Slope::of_tau(q(1, 3)));
  CHECK(s.kind == FilledResult::Kind::SolidTorus);
  CHECK(s.boundary_origin == std::vector<int>{0});
}

TEST_CASE("filling a cable space along a boundary") {
  SeifertPiece cable{Base::P, {{2, 1}}, 2};
  FilledResult r = dehn_fill(cable, 1, Slope::of_tau(Rat(0)));
  CHECK(r.kind == FilledResult::Kind::SolidTorus);
  FilledResult p = dehn_fill(cable, 1, Slope::of_tau(q(-1, 3)));
  CHECK(p.kind == FilledResult::Kind::Piece);
  CHECK(p.piece.gammas() == std::vector<Rat>{q(1, 2), q(2, 3)});
  CHECK_THROWS(dehn_fill(cable, 2, Slope(1, 1)));
  CHECK_THROWS(dehn_fill_many(cable, {{0, Slope(1, 1)}, {0, Slope(1, 2)}}));
}

TEST_CASE("detection of slope tuples") {
  DetectionVerdict mer = detect_tuple(trefoil(), {}, {Slope(1, 1)});
  CHECK(mer.detected);
  CHECK(mer.strongly_on.empty());
  DetectionVerdict mer_j = detect_tuple(trefoil(), {0}, {Slope(1, 1)});
  CHECK(mer_j.detected);
  CHECK_FALSE(mer_j.j_detected);
  CHECK(mer_j.strongly_on.empty());
  DetectionVerdict lon = detect_tuple(trefoil(), {0}, {Slope(7, 6)});
  CHECK(lon.j_detected);
  CHECK(lon.strongly_on == std::set<int>{0});

  CHECK_FALSE(detect_tuple(SeifertPiece{Base::Q, {{3, 1}}, 1}, {}, {Slope(1, 1)}).detected);
  CHECK(detect_tuple(SeifertPiece{Base::Q, {{3, 1}}, 1}, {}, {Slope::vertical()}).detected);
  SeifertPiece cable{Base::P, {{2, 1}}, 2};
  CHECK_FALSE(detect_tuple(cable, {}, {Slope::vertical(), Slope(1, 1)}).detected);
  CHECK(detect_tuple(cable, {}, {Slope::vertical(), Slope::vertical()}).detected);
  CHECK_THROWS(detect_tuple(cable, {0}, {Slope::vertical(), Slope(1, 1)}));
  CHECK_THROWS(detect_tuple(cable, {}, {Slope(1, 1)}));
}

TEST_CASE("the twisted I-bundle detects exactly h0 in either structure") {
  CHECK(detect_tuple(n2_disk(), {}, {n2_h0()}).detected);
  CHECK_FALSE(detect_tuple(n2_disk(), {}, {Slope(1, 2)}).detected);
  CHECK_FALSE(detect_tuple(n2_disk(), {}, {Slope::vertical()}).detected);
  CHECK(detect_tuple(n2_mobius(), {}, {Slope::vertical()}).detected);
  CHECK_FALSE(detect_tuple(n2_mobius(), {}, {Slope(1, 2)}).detected);
  // h0 is strongly detected in the disk structure although it is the fibre of the other.
  CHECK(detect_tuple(n2_disk(), {0}, {n2_h0()}).j_detected);
}

TEST_CASE("status of the glued N_t family") {
  CHECK(nls_status(SeifertPiece{Base::Q, {{3, 1}}, 1}, {}, {Slope(1, 3)}, 2) == NlsStatus::LSPACE);
  SeifertPiece cable{Base::P, {{2, 1}}, 2};
  CHECK(nls_status(cable, {}, {Slope::vertical(), Slope(1, 1)}, 2) == NlsStatus::LSPACE);
  CHECK(nls_status(cable, {}, {Slope::vertical(), Slope::vertical()}, 2) == NlsStatus::NOT_QHS);
  CHECK(nls_status(trefoil(), {}, {Slope(7, 6)}, 5) == NlsStatus::NOT_LSPACE);
  CHECK(nls_status(trefoil(), {}, {Slope(3, 2)}, 5) == NlsStatus::LSPACE);
  CHECK_THROWS(nls_status(trefoil(), {}, {Slope(7, 6)}, 1));
}

TEST_CASE("detection is invariant under relabelling the boundary tori") {
  SeifertPiece p{Base::P, {{3, 1}}, 3};
  SlopeTuple t{Slope::of_tau(q(-1, 2)), Slope::of_tau(q(-1, 3)), Slope::of_tau(q(1, 5))};
  DetectionVerdict a = detect_tuple(p, {1}, t);
  DetectionVerdict b = detect_tuple(p, {0}, {t[1], t[2], t[0]});
  CHECK(a.detected == b.detected);
  CHECK(a.j_detected == b.j_detected);
  CHECK(a.strongly_on.size() == b.strongly_on.size());
}
