#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "graphfol/exactnum.hpp"
#include "graphfol/smith.hpp"

namespace graphfol {

// P: base orbifold a punctured sphere. Q: a punctured projective plane.
enum class Base { P, Q };

struct ExceptionalFibre {
  Int a, b;  // y^a = h^b with 0 < b < a, gcd(a, b) = 1
};

// pi_1 = <y_i, x_j, h | h central (inverted by z on base Q), y_i^{a_i} = h^{b_i},
//         prod y_i prod x_j (z^2) = 1>. Boundary torus j has basis (h, x_j).
struct SeifertPiece {
  Base base = Base::P;
  std::vector<ExceptionalFibre> fibres;
  int boundary_count = 1;

  int n() const { return static_cast<int>(fibres.size()); }
  std::vector<Rat> gammas() const;
  void validate() const;  // fibre normalization and boundary_count >= 1
  // Solid torus or T^2 x I, which cannot be a JSJ piece.
  bool degenerate() const;
  bool is_n2() const;
  std::string str() const;
};

using SlopeTuple = std::vector<Slope>;

int vertical_count(const SlopeTuple& alphas);

// Generator indices of a piece inside a larger homology presentation.
struct PieceGenerators {
  int h = -1;
  std::vector<int> x, y;
  int z = -1;
};

PieceGenerators add_piece_relations(Presentation& pres, const SeifertPiece& piece);
SmithForm piece_homology(const SeifertPiece& piece);
// Coefficient vector of p*h + q*x_j.
std::vector<Int> boundary_class(const PieceGenerators& g, int generators, int j, const Slope& s);

struct Longitude {
  Slope slope;
  Int order;
};

Longitude rational_longitude(const SeifertPiece& piece);
SeifertPiece nt_piece(int t);

// The two Seifert structures on the twisted I-bundle over the Klein bottle.
SeifertPiece n2_disk();     // base P with fibres (2,1), (2,1)
SeifertPiece n2_mobius();   // base Q without exceptional fibres
// Boundary coordinates of n2_disk() to those of n2_mobius(); swaps h0 and h1.
BasisChange n2_disk_to_mobius();
Slope n2_h0();  // [h + h*] in n2_disk() coordinates

struct FilledResult {
  enum class Kind { Piece, SolidTorus, T2xI, Closed, LensSum };
  Kind kind = Kind::Piece;
  SeifertPiece piece;                // Seifert data after filling (not for LensSum)
  std::vector<int> boundary_origin;  // remaining boundary i was boundary_origin[i]
  std::vector<Int> shift;            // tau_new = tau_old + shift[i] on remaining boundary i
  Int closed_b = 0;                  // Closed: the exceptional fibres multiply to sh(closed_b)
  std::optional<Slope> meridian;     // SolidTorus: original coordinates of the remaining boundary
  std::vector<Int> lens_orders;      // LensSum
  int solid_torus_summands = 0;      // LensSum
  int s1xs2_summands = 0;            // LensSum

  // Slope on remaining boundary i, from original to filled coordinates.
  Slope to_filled(int i, const Slope& original) const;
};

std::string kind_name(FilledResult::Kind k);

FilledResult dehn_fill(const SeifertPiece& piece, int boundary_index, const Slope& filling);
// Fills several boundaries; slopes are in the original coordinates.
FilledResult dehn_fill_many(const SeifertPiece& piece, const std::vector<std::pair<int, Slope>>& fillings);

struct DetectionVerdict {
  bool detected = false;       // (empty; alpha) detected
  std::set<int> strongly_on;   // j in J with ({j}; alpha) detected
  bool j_detected = false;     // (J; alpha) detected
  std::string rule;
};

DetectionVerdict detect_tuple(const SeifertPiece& piece, const std::set<int>& J, const SlopeTuple& alphas);

enum class NlsStatus { LSPACE, NOT_LSPACE, NOT_QHS };
std::string status_name(NlsStatus s);
NlsStatus nls_status(const SeifertPiece& piece, const std::set<int>& J, const SlopeTuple& alphas, int t);

}  // namespace graphfol
