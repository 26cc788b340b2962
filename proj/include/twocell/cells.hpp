#pragma once

#include <string>
#include <vector>

#include "twocell/multitable.hpp"

namespace twocell {

enum class CellKind { Left, Right, TwoSided };

std::string cell_kind_name(CellKind k);

/// rel[f][g] == true  iff  f <= g in the chosen preorder, i.e. g appears in
/// an iterated composite on the corresponding side(s) of f.  Reflexive and
/// transitively closed.
std::vector<std::vector<bool>> preorder(const MultiTable& t, CellKind kind);

/// Cells (equivalence classes of the preorder) with the induced partial
/// order and its Hasse reduction.  Cells are listed by first appearance of
/// a member generator; members keep generator order.
struct CellStructure {
  CellKind kind = CellKind::Left;
  std::vector<std::vector<GenId>> cells;
  std::vector<int> cell_of;                 // gen -> cell index
  std::vector<std::vector<bool>> leq;       // leq[a][b]: cell a <= cell b
  std::vector<std::pair<int, int>> hasse;   // covers (a,b) with a < b

  std::string cell_name(int c, const MultiTable& t) const;
  int cell_containing(const MultiTable& t, const std::string& gen_name) const;
};

CellStructure cell_structure(const MultiTable& t, CellKind kind);

struct IdempotentWitness {
  bool idempotent = false;
  GenId f = -1, g = -1, h = -1;  // h is a summand of f o g
};

/// Throws NotACell when `cell` is out of range of `two`.
IdempotentWitness is_idempotent_cell(const MultiTable& t, const CellStructure& two, int cell);

struct RegularityResult {
  bool strongly_regular = false;
  std::string counterexample;
};

RegularityResult is_strongly_regular(const MultiTable& t, const CellStructure& two, int cell);

}  // namespace twocell
