#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twocell/scalar.hpp"

namespace twocell {

using GenId = int;

/// Formal non-negative-integer combination of generators, sorted by id.
using GenComb = std::vector<std::pair<GenId, long long>>;

struct GenInfo {
  std::string name;
  int src = 0;
  int tgt = 0;
};

struct Violation {
  std::string check;
  std::string witness;
};

/// Composition table of the indecomposable 1-morphism symbols of a finitary
/// 2-category at the split-Grothendieck level: objects, typed generators,
/// identity symbols, stored structure constants, optional basis involution.
/// Immutable after construction.
struct MultiTable {
  std::vector<std::string> objects;
  std::vector<GenInfo> gens;
  std::vector<GenId> identities;  // one generator per object
  std::map<std::pair<GenId, GenId>, GenComb> table;
  std::optional<std::vector<GenId>> star;

  int object_index(const std::string& name) const;
  GenId gen_index(const std::string& name) const;  // throws UnknownGen
  bool is_identity(GenId g) const;
  bool composable(GenId f, GenId g) const { return gens[g].tgt == gens[f].src; }

  /// Stored product F o G (apply G, then F); throws NotComposable/UnknownGen.
  const GenComb& compose(GenId f, GenId g) const;

  /// Expands a combination on either side: sum_k c_k (g_k o h) etc.
  GenComb compose_comb(const GenComb& left, const GenComb& right) const;
};

std::vector<Violation> validate(const MultiTable& t);

GenComb add_combs(const GenComb& a, const GenComb& b, long long scale = 1);

struct CellStructure;  // cells.hpp

/// Checks that star preserves two-sided cells, gen by gen.
std::vector<Violation> star_cell_compat(const MultiTable& t, const CellStructure& two);

}  // namespace twocell
