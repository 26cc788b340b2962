#pragma once

#include <optional>
#include <vector>

#include "twocell/matrix.hpp"

namespace twocell {

/// Incremental exact row-echelon basis of a subspace of K^n.
/// Rows are kept reduced with pivot entry 1 and zeros above the pivot.
class RowSpace {
 public:
  explicit RowSpace(int n) : n_(n) {}

  int dim() const { return int(rows_.size()); }
  int ambient() const { return n_; }
  const std::vector<ScalVec>& rows() const { return rows_; }
  const std::vector<int>& pivots() const { return pivots_; }

  /// Reduces v against the current basis (in place of a copy).
  ScalVec reduce(ScalVec v) const {
    for (size_t r = 0; r < rows_.size(); ++r) {
      Scalar c = v[pivots_[r]];
      if (c.is_zero()) continue;
      for (int j = 0; j < n_; ++j)
        if (!rows_[r][j].is_zero()) v[j] -= c * rows_[r][j];
    }
    return v;
  }

  /// Adds v to the space; returns true when the dimension grew.
  bool insert(ScalVec v) {
    v = reduce(std::move(v));
    int piv = -1;
    for (int j = 0; j < n_; ++j)
      if (!v[j].is_zero()) {
        piv = j;
        break;
      }
    if (piv < 0) return false;
    Scalar inv = Scalar(1) / v[piv];
    for (int j = piv; j < n_; ++j) v[j] = v[j] * inv;
    // clear the new pivot column in existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
      Scalar c = rows_[r][piv];
      if (c.is_zero()) continue;
      for (int j = 0; j < n_; ++j)
        if (!v[j].is_zero()) rows_[r][j] -= c * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    // keep rows sorted by pivot for deterministic output
    for (size_t r = rows_.size(); r-- > 1;) {
      if (pivots_[r] < pivots_[r - 1]) {
        std::swap(pivots_[r], pivots_[r - 1]);
        std::swap(rows_[r], rows_[r - 1]);
      } else {
        break;
      }
    }
    return true;
  }

  bool contains(const ScalVec& v) const {
    ScalVec r = reduce(v);
    for (const Scalar& x : r)
      if (!x.is_zero()) return false;
    return true;
  }

  /// Coordinates of v in terms of the stored rows, if v lies in the space.
  std::optional<ScalVec> coordinates(const ScalVec& v) const {
    ScalVec coeff(rows_.size(), Scalar(0));
    ScalVec w = v;
    for (size_t r = 0; r < rows_.size(); ++r) {
      Scalar c = w[pivots_[r]];
      coeff[r] = c;
      if (c.is_zero()) continue;
      for (int j = 0; j < n_; ++j)
        if (!rows_[r][j].is_zero()) w[j] -= c * rows_[r][j];
    }
    for (const Scalar& x : w)
      if (!x.is_zero()) return std::nullopt;
    return coeff;
  }

 private:
  int n_;
  std::vector<ScalVec> rows_;
  std::vector<int> pivots_;
};

/// Basis of the column kernel {x : M x = 0}.
std::vector<ScalVec> kernel_basis(const ScalMat& m);

int rank(const ScalMat& m);

/// Solves M x = rhs; empty optional when inconsistent.
std::optional<ScalVec> solve(const ScalMat& m, const ScalVec& rhs);

ScalVec mat_vec(const ScalMat& m, const ScalVec& v);

}  // namespace twocell
