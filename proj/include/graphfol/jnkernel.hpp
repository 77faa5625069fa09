#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "graphfol/exactnum.hpp"
#include "graphfol/intervals.hpp"

namespace graphfol {

// Asks for f_1..f_n, g_1..g_r in the universal cover of Homeo+(S^1) with
// product sh(b), each f_i conjugate to sh(gammas[i]), each g_j of translation
// number taus[j], and g_j conjugate to sh(taus[j]) whenever j is in J.
struct JNInstance {
  std::set<int> J;  // 0-based indices into taus
  Int b = 0;
  std::vector<Rat> gammas;  // each in (0, 1)
  std::vector<Rat> taus;
};

// Equivalent instance with every tau moved into [0, 1). Integral taus with
// index in J are dropped; integral taus outside J survive as zeros.
struct ReducedInstance {
  Int b = 0;
  std::vector<Rat> gammas;
  std::vector<Rat> taus_bar;
  std::vector<int> source_index;  // taus_bar[k] came from taus[source_index[k]]
  std::set<int> J0;               // indices into taus_bar, all non-integral
  int r1 = 0, s0 = 0, r2 = 0;     // non-integral count, zero count, r1 + s0
};

// Rotation numbers A/N, (N-A)/N and 1/N repeated; slot[e] is the numerator
// used by element e (gammas first, then taus_bar). dual marks the b = k-1
// branch where slots hold 1 - value.
struct JNWitness {
  Int A, N;
  std::vector<Int> slot;
  bool dual = false;
};

struct JNResult {
  bool realizable = false;
  std::string rule;
  std::optional<JNWitness> witness;
};

ReducedInstance normalize(const JNInstance& inst);
JNResult jn_decide(const JNInstance& inst);
bool jn_realizable(const JNInstance& inst);

// Smallest-denominator fraction inside the interval between lo and hi.
std::pair<Int, Int> min_denominator_fraction(const Rat& lo, const Rat& hi, bool lo_open, bool hi_open);

// Element of a rotation-slot matching problem: must sit on a slot of value
// at least u (strictly more if strict).
struct ExtElem {
  Rat u;
  bool strict = true;
};

struct Extension {
  Rat value;
  bool attained = false;
};

// Supremum of C/N over coprime A/N such that the elements and one extra slot
// C fill {A/N, (N-A)/N, 1/N, ..., 1/N}. Needs at least two elements.
std::optional<Extension> best_extension(std::vector<ExtElem> elems);

// Values of the last translation number tau' for which the instance with
// taus_fixed ++ (tau') and b = 0 is realizable (T), and realizable with the
// last index added to J (T_str).
struct TauIntervalResult {
  Interval T, T_str;
  Int b0, m0, m1;
  int r1 = 0, s0 = 0;
  std::string rule;
};

TauIntervalResult tau_interval(const std::vector<Rat>& gammas, const std::set<int>& J, const std::vector<Rat>& taus_fixed);

// Union of T and T_str while each fixed tau ranges over a set. Strong inputs
// are in J.
struct RangeInput {
  IntervalSet values;
  bool strong = false;
};

struct TauUnion {
  IntervalSet T, T_str;
};

TauUnion tau_union(const std::vector<Rat>& gammas, const std::vector<RangeInput>& inputs);

}  // namespace graphfol
