#pragma once

// Seeded generators for property and acceptance tests.

#include <cstdint>
#include <random>

#include "graphfol/graphsolver.hpp"

namespace gen {

using graphfol::BasisChange;
using graphfol::GraphManifold;
using graphfol::Int;
using graphfol::Rat;
using graphfol::SeifertPiece;
using graphfol::Slope;

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return uniform(0, 1) == 1; }

  Rat fraction(int max_den);                // in (0, 1)
  Rat rational(int max_den, int range);     // |value| <= range
  Slope slope(int max_den, int range);      // horizontal
  graphfol::ExceptionalFibre fibre(int max_den);
  // Seifert piece usable as a JSJ piece.
  SeifertPiece piece(int max_den, int boundary, int max_fibres = 3);
  BasisChange unimodular(int range = 3);    // lower-left entry nonzero
  GraphManifold two_piece(int max_den);
  GraphManifold three_piece_path(int max_den);

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
