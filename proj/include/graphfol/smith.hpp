#pragma once

#include <optional>
#include <string>
#include <vector>

#include "graphfol/exactnum.hpp"

namespace graphfol {

// Abelian group <g_0..g_{n-1} | rows>; each row lists coefficients per generator.
struct Presentation {
  int generators = 0;
  std::vector<std::vector<Int>> relations;

  int add_generator() { return generators++; }
  void add_relation(std::vector<std::pair<int, Int>> terms);
};

// Diagonal form D = U R V with unimodular U, V. Generator vectors x (row
// vectors over the generators) map to coordinates x V, where coordinate i
// is cyclic of order diag[i] (0 meaning infinite cyclic).
struct SmithForm {
  std::vector<Int> diag;  // length == generators
  std::vector<std::vector<Int>> V;

  int free_rank() const;
  std::vector<Int> torsion() const;  // invariant factors greater than 1
  std::optional<Int> order() const;  // nullopt when infinite
  Int torsion_order() const;
  // nullopt when the element has infinite order.
  std::optional<Int> element_order(const std::vector<Int>& element) const;
  std::string describe() const;  // e.g. "Z + Z/2"
};

SmithForm smith_form(const Presentation& p);

}  // namespace graphfol
