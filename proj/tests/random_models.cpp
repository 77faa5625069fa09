#include "random_models.hpp"

namespace gen {

Rat Gen::fraction(int max_den) {
  int q = uniform(2, max_den);
  return Rat(uniform(1, q - 1)) / Rat(q);
}

Rat Gen::rational(int max_den, int range) {
  int q = uniform(1, max_den);
  return Rat(uniform(-range * q, range * q)) / Rat(q);
}

Slope Gen::slope(int max_den, int range) { return Slope::of_tau(rational(max_den, range)); }

graphfol::ExceptionalFibre Gen::fibre(int max_den) {
  Rat g = fraction(max_den);
  return {denominator(g), numerator(g)};
}

SeifertPiece Gen::piece(int max_den, int boundary, int max_fibres) {
  SeifertPiece p;
  p.base = uniform(0, 4) == 0 ? graphfol::Base::Q : graphfol::Base::P;
  p.boundary_count = boundary;
  int min_fibres = p.base == graphfol::Base::Q ? 0 : std::max(0, 3 - boundary);
  int n = uniform(min_fibres, std::max(min_fibres, max_fibres));
  for (int i = 0; i < n; ++i) p.fibres.push_back(fibre(max_den));
  return p;
}

BasisChange Gen::unimodular(int range) {
  for (;;) {
    BasisChange m = BasisChange::identity();
    for (int step = 0; step < 3; ++step) {
      Int k = uniform(-range, range);
      m = step % 2 ? m.after(BasisChange(1, k, 0, 1)) : m.after(BasisChange(1, 0, k, 1));
    }
    if (coin()) m = m.after(BasisChange(1, 0, 0, -1));
    if (m.m[1][0] != 0) return m;
  }
}

GraphManifold Gen::two_piece(int max_den) {
  GraphManifold w;
  w.pieces = {piece(max_den, 1), piece(max_den, 1)};
  w.edges.push_back({0, 0, 1, 0, unimodular()});
  return w;
}

GraphManifold Gen::three_piece_path(int max_den) {
  GraphManifold w;
  w.pieces = {piece(max_den, 1), piece(max_den, 2, 2), piece(max_den, 1)};
  w.edges.push_back({0, 0, 1, 0, unimodular()});
  w.edges.push_back({1, 1, 2, 0, unimodular()});
  return w;
}

}  // namespace gen
