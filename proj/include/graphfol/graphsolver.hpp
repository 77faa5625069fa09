#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graphfol/intervals.hpp"
#include "graphfol/seifert.hpp"
#include "graphfol/smith.hpp"

namespace graphfol {

// JSJ torus joining boundary_a of piece_a to boundary_b of piece_b. matrix
// carries (h, h*) coordinates on the a side to those on the b side.
struct Edge {
  int piece_a = 0, boundary_a = 0, piece_b = 0, boundary_b = 0;
  BasisChange matrix = BasisChange::identity();
};

// Dehn filling of a boundary torus not used by any edge.
struct Filling {
  int piece = 0, boundary = 0;
  Slope slope = Slope::vertical();
};

struct GraphManifold {
  std::vector<SeifertPiece> pieces;
  std::vector<Edge> edges;
  std::vector<Filling> fillings;

  // Structural checks; throws InputError. Does not compute homology.
  void validate() const;
};

// One slope per edge, in the coordinates of the edge's a side.
using SlopeAssignment = std::vector<Slope>;

// Admissible slopes on one torus of a piece: vertical (never strong), the
// tau values detected, and those detected strongly.
struct DetectedSlopeSet {
  bool vertical = false;
  IntervalSet detected;
  IntervalSet strong;

  SlopeSet plain() const { return {vertical, detected}; }
  SlopeSet strong_set() const { return {false, strong}; }
};

// Mobius-form copies of N_2 rewritten in the disk structure.
GraphManifold canonical_form(const GraphManifold& w, std::vector<bool>* converted = nullptr);

Presentation homology_presentation(const GraphManifold& w, std::vector<PieceGenerators>* gens = nullptr);
SmithForm homology(const GraphManifold& w);
std::optional<Int> homology_order(const GraphManifold& w);  // nullopt when infinite

// Tuple seen by piece i (edge slopes moved into its coordinates, fillings
// included) and the boundaries that must be strongly detected for K.
SlopeTuple piece_tuple(const GraphManifold& w, int piece, const SlopeAssignment& a);
std::set<int> piece_strong_boundaries(const GraphManifold& w, int piece, const std::set<int>& K);

std::set<int> k_closure(const GraphManifold& w, const std::set<int>& K, const SlopeAssignment& a);

struct GluingStatus {
  bool coherent = false;
  bool unobstructed = false;
  std::set<int> closure;
  std::vector<std::string> notes;
};

GluingStatus gluing_status(const GraphManifold& w, const std::set<int>& K, const SlopeAssignment& a);

// Slopes on boundary out for which the piece detects some tuple drawn from
// constraints (entry out is ignored). Boundaries in strong_required lie in J;
// out itself is reported both ways.
DetectedSlopeSet propagate_detected_set(const SeifertPiece& piece, int out, const std::vector<SlopeSet>& constraints,
                                        const std::set<int>& strong_required);

enum class Mode { CTF, LO, HORIZONTAL, STRONG };
enum class Verdict { YES, NO, UNDECIDED };
std::string mode_name(Mode m);
std::string verdict_name(Verdict v);

struct Decision {
  Verdict verdict = Verdict::NO;
  SlopeAssignment witness;
  std::set<int> K;       // requested K (all edges in STRONG mode)
  std::set<int> K_used;  // K' whose coherence produced the witness
  std::vector<std::string> trace;
};

// Throws InputError when w is not a rational homology sphere tree.
Decision decide(const GraphManifold& w, const std::set<int>& K, Mode mode, int root = 0);

enum class LSpaceStatus { NOT_LSPACE_PROVED, CONJECTURAL_LSPACE, UNDETERMINED };
std::string lspace_name(LSpaceStatus s);

struct ClassificationReport {
  bool is_qhs = false;
  Int h1_order = 0;
  std::string h1;
  Decision ctf, lo, horizontal, strong;
  LSpaceStatus lspace = LSpaceStatus::UNDETERMINED;
};

ClassificationReport classify(const GraphManifold& w);

}  // namespace graphfol
