#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twocell/cells.hpp"
#include "twocell/multitable.hpp"
#include "twocell/scalar.hpp"

namespace twocell {

/// The positively based algebra on a two-sided cell: products from the
/// MultiTable with every summand outside the cell deleted (those summands
/// lie strictly above in the two-sided order, so this is reduction modulo
/// larger cells).
struct CellAlgebra {
  const MultiTable* table = nullptr;
  std::vector<GenId> basis;       // generators of the cell, table order
  std::vector<int> local;         // gen -> basis position, or -1
  // mult[i][j]: sparse combination over basis positions
  std::vector<std::vector<std::vector<std::pair<int, long long>>>> mult;

  int dim() const { return int(basis.size()); }
  std::string basis_name(int i) const { return table->gens[basis[i]].name; }
  int local_of_name(const std::string& name) const;  // throws UnknownGen
};

CellAlgebra make_cell_algebra(const MultiTable& t, const CellStructure& two, int cell);

/// Element of the cell algebra with exact coefficients; membership in the
/// positive cone means every coefficient is strictly positive.
struct ConeElement {
  const CellAlgebra* alg = nullptr;
  ScalVec coeffs;

  bool in_positive_cone() const;
};

ScalVec cone_mul(const ConeElement& u, const ConeElement& v);

/// Witness for the sign-constrained polynomial identity
///   x^n + a_{n-1} x^{n-1} + ... + a_{k+1} x^{k+1}
///     = a_k x^k + ... + a_l x^l
/// with n > k >= l >= 1, all a_j >= 0 and a_l > 0.
struct GoodnessWitness {
  ConeElement x;
  int n = 0, k = 0, l = 0;
  std::map<int, Scalar> a;  // exponents in [l, n-1]; missing means 0
};

struct GoodnessResult {
  bool ok = false;
  ScalVec residual;  // lhs - rhs over the cell basis (empty when ok)
};

/// Exact check of the identity; throws NotInCone / MalformedWitness.
GoodnessResult verify_goodness(const GoodnessWitness& w);

struct SearchOptions {
  int power_iterations = 400;
  double reconstruct_tol = 1e-9;
  long max_denominator = 64;
};

/// Best-effort search: the all-ones element first, then exact candidates
/// reconstructed from a numeric Perron eigenvector in Q or Q(sqrt d),
/// d in {2,3,5}.  For each candidate the minimal relation of x is computed
/// exactly and tested for the goodness sign pattern.  Any returned witness
/// has passed verify_goodness.
std::optional<GoodnessWitness> search_goodness(const CellAlgebra& alg,
                                               const SearchOptions& opts = {});

}  // namespace twocell
