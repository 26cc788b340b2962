#include "twocell/linalg.hpp"

namespace twocell {

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<int> echelon(ScalMat& a) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < a.cols() && r < a.rows(); ++c) {
    int pr = -1;
    for (int i = r; i < a.rows(); ++i)
      if (!a(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < a.cols(); ++j) std::swap(a(r, j), a(pr, j));
    Scalar inv = Scalar(1) / a(r, c);
    for (int j = c; j < a.cols(); ++j) a(r, j) = a(r, j) * inv;
    for (int i = 0; i < a.rows(); ++i) {
      if (i == r) continue;
      Scalar f = a(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::vector<ScalVec> kernel_basis(const ScalMat& m) {
  ScalMat a = m;
  std::vector<int> pivots = echelon(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<ScalVec> out;
  for (int c = 0; c < m.cols(); ++c) {
    if (is_pivot[c]) continue;
    ScalVec v(m.cols(), Scalar(0));
    v[c] = Scalar(1);
    for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a(int(r), c);
    out.push_back(std::move(v));
  }
  return out;
}

int rank(const ScalMat& m) {
  ScalMat a = m;
  return int(echelon(a).size());
}

std::optional<ScalVec> solve(const ScalMat& m, const ScalVec& rhs) {
  ScalMat a(m.rows(), m.cols() + 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
    a(i, m.cols()) = rhs[i];
  }
  std::vector<int> pivots = echelon(a);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  ScalVec x(m.cols(), Scalar(0));
  for (size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a(int(r), m.cols());
  return x;
}

ScalVec mat_vec(const ScalMat& m, const ScalVec& v) {
  ScalVec out(m.rows(), Scalar(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) out[i] += m(i, j) * v[j];
  return out;
}

}  // namespace twocell
