#pragma once

#include <set>
#include <vector>

#include "graphfol/graphsolver.hpp"

namespace graphfol {

// Every p/q in [lo, hi] with 1 <= q <= max_denominator.
struct SampleGrid {
  int max_denominator = 1;
  Rat lo = -2, hi = 0;

  std::vector<Rat> points() const;
};

// Grid points tau' for which taus ++ (tau') is realizable with b = 0, using
// point queries to the realizability decider only. With strong set, the new
// index joins J.
std::vector<Rat> sample_detected_set(const SeifertPiece& piece, const std::set<int>& J, const std::vector<Rat>& taus,
                                     const SampleGrid& grid, bool strong = false);

enum class OracleVerdict { FOUND, EXHAUSTED };

struct OracleResult {
  OracleVerdict verdict = OracleVerdict::EXHAUSTED;
  SlopeAssignment witness;  // side-a coordinates of the input manifold
  int max_denominator = 0;
  long long assignments_checked = 0;
};

// Candidate slopes for one edge, side-a coordinates: tau = p/q with
// q <= max_denominator and |tau| <= window in either side's coordinates, both
// fibre slopes, rational longitudes and h0 of N_2 sides.
std::vector<Slope> edge_candidates(const GraphManifold& w, int edge, int max_denominator);

// Backtracking over edge_candidates; a result is FOUND only after
// gluing_status reports the assignment unobstructed.
OracleResult exhaustive_decide(const GraphManifold& w, const std::set<int>& K, int max_denominator, bool horizontal = false);

}  // namespace graphfol
