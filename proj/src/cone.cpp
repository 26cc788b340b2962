#include "twocell/cone.hpp"

#include <algorithm>
#include <cmath>

#include "twocell/linalg.hpp"

namespace twocell {

int CellAlgebra::local_of_name(const std::string& name) const {
  int g = table->gen_index(name);
  if (local[g] < 0)
    throw Error("UnknownGen", "generator '" + name + "' is not in the cell");
  return local[g];
}

CellAlgebra make_cell_algebra(const MultiTable& t, const CellStructure& two, int cell) {
  if (cell < 0 || cell >= int(two.cells.size()))
    throw Error("NotACell", "cell index out of range");
  CellAlgebra a;
  a.table = &t;
  a.basis = two.cells[cell];
  a.local.assign(t.gens.size(), -1);
  for (size_t i = 0; i < a.basis.size(); ++i) a.local[a.basis[i]] = int(i);
  const int d = a.dim();
  a.mult.assign(d, std::vector<std::vector<std::pair<int, long long>>>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      if (!t.composable(a.basis[i], a.basis[j])) continue;
      for (auto [h, c] : t.compose(a.basis[i], a.basis[j]))
        if (a.local[h] >= 0) a.mult[i][j].push_back({a.local[h], c});
    }
  return a;
}

bool ConeElement::in_positive_cone() const {
  for (const Scalar& c : coeffs)
    if (c.sign() != Sign::Positive) return false;
  return true;
}

ScalVec cone_mul(const ConeElement& u, const ConeElement& v) {
  if (u.alg != v.alg) throw Error("MixedFields", "cone elements over different cell algebras");
  const CellAlgebra& a = *u.alg;
  ScalVec out(a.dim(), Scalar(0));
  for (int i = 0; i < a.dim(); ++i) {
    if (u.coeffs[i].is_zero()) continue;
    for (int j = 0; j < a.dim(); ++j) {
      if (v.coeffs[j].is_zero()) continue;
      Scalar c = u.coeffs[i] * v.coeffs[j];
      for (auto [h, m] : a.mult[i][j]) out[h] += c * Scalar(m);
    }
  }
  return out;
}

namespace {

void check_witness_shape(const GoodnessWitness& w) {
  if (!(w.n > w.k && w.k >= w.l && w.l >= 1))
    throw Error("MalformedWitness", "need n > k >= l >= 1, got n=" + std::to_string(w.n) +
                                        " k=" + std::to_string(w.k) + " l=" + std::to_string(w.l));
  for (auto& [j, c] : w.a) {
    if (j < w.l || j > w.n - 1)
      throw Error("MalformedWitness", "coefficient exponent " + std::to_string(j) +
                                          " outside [l, n-1]");
    if (c.sign() == Sign::Negative)
      throw Error("MalformedWitness", "negative coefficient a_" + std::to_string(j));
  }
  auto it = w.a.find(w.l);
  if (it == w.a.end() || it->second.sign() != Sign::Positive)
    throw Error("MalformedWitness", "a_l must be strictly positive");
}

}  // namespace

GoodnessResult verify_goodness(const GoodnessWitness& w) {
  check_witness_shape(w);
  if (!w.x.in_positive_cone())
    throw Error("NotInCone", "x has a coefficient that is not strictly positive");
  const CellAlgebra& alg = *w.x.alg;
  auto coeff = [&](int j) -> Scalar {
    auto it = w.a.find(j);
    return it == w.a.end() ? Scalar(0) : it->second;
  };
  // powers x^1..x^n
  std::vector<ScalVec> pw(w.n + 1);
  pw[1] = w.x.coeffs;
  for (int j = 2; j <= w.n; ++j)
    pw[j] = cone_mul({&alg, pw[j - 1]}, w.x);

  ScalVec diff(alg.dim(), Scalar(0));
  for (int i = 0; i < alg.dim(); ++i) diff[i] = pw[w.n][i];
  for (int j = w.k + 1; j <= w.n - 1; ++j) {
    Scalar c = coeff(j);
    if (c.is_zero()) continue;
    for (int i = 0; i < alg.dim(); ++i) diff[i] += c * pw[j][i];
  }
  for (int j = w.l; j <= w.k; ++j) {
    Scalar c = coeff(j);
    if (c.is_zero()) continue;
    for (int i = 0; i < alg.dim(); ++i) diff[i] -= c * pw[j][i];
  }
  bool ok = std::all_of(diff.begin(), diff.end(), [](const Scalar& s) { return s.is_zero(); });
  GoodnessResult res;
  res.ok = ok;
  if (!ok) res.residual = diff;
  return res;
}

namespace {

// Minimal monic relation of the vector x under multiplication by x:
// smallest d with x^{d+1} in span(x^1..x^d); returns mu with
// x^{d+1} = sum_i mu[i] x^{i+1}, i.e. T^{d+1} - sum mu[i] T^{i+1}
// annihilates x.
std::optional<ScalVec> minimal_relation(const ConeElement& x) {
  const CellAlgebra& alg = *x.alg;
  const int n = alg.dim();
  std::vector<ScalVec> powers{x.coeffs};
  for (int d = 1; d <= n; ++d) {
    ScalVec next = cone_mul({&alg, powers.back()}, x);
    // coordinates in terms of original powers: solve small system
    ScalMat m(n, d);
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < n; ++i) m(i, j) = powers[j][i];
    if (auto sol = solve(m, next)) return sol;
    powers.push_back(std::move(next));
  }
  return std::nullopt;  // x nilpotent-ish beyond dim: no relation found
}

struct PatternSplit {
  int n, k, l;
  std::map<int, Scalar> a;
};

// Coefficients of f(T) = T^{d+1} - sum_i mu[i] T^{i+1}; checks the
// eqgood-shaped sign split: positives strictly above all negatives.
std::optional<PatternSplit> sign_split(const ScalVec& mu) {
  const int n = int(mu.size()) + 1;
  std::map<int, Scalar> coeff;  // degree -> value, degree < n
  for (size_t i = 0; i < mu.size(); ++i)
    if (!mu[i].is_zero()) coeff[int(i) + 1] = mu[i];  // f has -mu (moved to rhs as +mu)
  if (coeff.empty()) return std::nullopt;             // x^n = 0: no a_l > 0
  int neg_max = -1, pos_min = n, low = n;
  for (auto& [deg, c] : coeff) {
    if (c.sign() == Sign::Positive) neg_max = std::max(neg_max, deg);  // rhs coefficient
    else pos_min = std::min(pos_min, deg);
    low = std::min(low, deg);
  }
  if (neg_max < 0) return std::nullopt;     // nothing on the rhs
  if (pos_min < neg_max) return std::nullopt;  // interleaved signs
  if (coeff.begin()->second.sign() != Sign::Positive) return std::nullopt;  // a_l <= 0
  PatternSplit s;
  s.n = n;
  s.k = neg_max;
  s.l = low;
  for (auto& [deg, c] : coeff) s.a[deg] = deg <= s.k ? c : -c;
  return s;
}

// numeric right-multiplication by the all-ones element
std::vector<double> right_mult_step(const CellAlgebra& alg, const std::vector<double>& v) {
  std::vector<double> out(alg.dim(), 0.0);
  for (int g = 0; g < alg.dim(); ++g) {
    if (v[g] == 0.0) continue;
    for (int f = 0; f < alg.dim(); ++f)
      for (auto [h, c] : alg.mult[g][f]) out[h] += v[g] * double(c);
  }
  return out;
}

std::optional<Rat> reconstruct_rational(double r, long max_den, double tol) {
  // continued fractions with bounded denominator
  double x = r;
  long long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int iter = 0; iter < 64; ++iter) {
    double fl = std::floor(x);
    long long ai = (long long)fl;
    long long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    if (std::abs(r - double(p1) / double(q1)) < tol) {
      if (std::abs(double(p1)) / double(q1) > 1e6) return std::nullopt;
      return Rat(p1, q1);
    }
    double rem = x - fl;
    if (rem < 1e-12) break;
    x = 1.0 / rem;
  }
  return std::nullopt;
}

struct Reconstructed {
  Rat a, b;  // value a + b sqrt(d); b == 0 for rationals
  int d = 0;
};

std::optional<Reconstructed> reconstruct(double r, const SearchOptions& o, int want_d) {
  if (want_d == 0) {
    if (auto q = reconstruct_rational(r, o.max_denominator, o.reconstruct_tol))
      return Reconstructed{*q, 0, 0};
    return std::nullopt;
  }
  double sq = std::sqrt(double(want_d));
  for (long bden = 1; bden <= 8; ++bden)
    for (long bnum = -16 * bden; bnum <= 16 * bden; ++bnum) {
      double rest = r - (double(bnum) / double(bden)) * sq;
      auto q = reconstruct_rational(rest, o.max_denominator, o.reconstruct_tol);
      if (!q) continue;
      if (std::abs(q->get_d()) > 16.0) continue;
      double approxv = q->get_d() + (double(bnum) / double(bden)) * sq;
      if (std::abs(approxv - r) < o.reconstruct_tol)
        return Reconstructed{*q, Rat(bnum, bden), want_d};
    }
  return std::nullopt;
}

std::optional<GoodnessWitness> try_candidate(const CellAlgebra& alg, ScalVec coeffs) {
  ConeElement x{&alg, std::move(coeffs)};
  for (const Scalar& c : x.coeffs)
    if (c.sign() != Sign::Positive) return std::nullopt;
  auto mu = minimal_relation(x);
  if (!mu) return std::nullopt;
  auto split = sign_split(*mu);
  if (!split) return std::nullopt;
  GoodnessWitness w;
  w.x = x;
  w.n = split->n;
  w.k = split->k;
  w.l = split->l;
  w.a = split->a;
  try {
    if (verify_goodness(w).ok) return w;
  } catch (const Error&) {
  }
  return std::nullopt;
}

}  // namespace

std::optional<GoodnessWitness> search_goodness(const CellAlgebra& alg, const SearchOptions& opts) {
  if (alg.dim() == 0) return std::nullopt;

  // (1) all-ones
  if (auto w = try_candidate(alg, ScalVec(alg.dim(), Scalar(1)))) return w;

  // (2) Perron weights of right-multiplication by the all-ones element
  std::vector<double> v(alg.dim(), 1.0);
  for (int it = 0; it < opts.power_iterations; ++it) {
    v = right_mult_step(alg, v);
    double mx = 0;
    for (double x : v) mx = std::max(mx, std::abs(x));
    if (mx == 0) return std::nullopt;  // nilpotent action of the all-ones element
    for (double& x : v) x /= mx;
  }
  double base = v[0];
  if (base <= 0) return std::nullopt;

  for (int d : {0, 2, 3, 5}) {
    bool ok = true;
    ScalVec cand(alg.dim());
    FieldPtr field = d == 0 ? FieldSpec::rationals() : FieldSpec::quadratic(0, d);
    for (int i = 0; i < alg.dim() && ok; ++i) {
      auto rec = reconstruct(v[i] / base, opts, d);
      if (!rec) {
        ok = false;
        break;
      }
      cand[i] = d == 0 ? Scalar(rec->a) : Scalar(rec->a, rec->b, field);
    }
    if (!ok) continue;
    if (auto w = try_candidate(alg, cand)) return w;
  }
  return std::nullopt;
}

}  // namespace twocell
