#include "magnitude.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"

namespace spdiv {

namespace {

constexpr double kPivotTol = 1e-12;

void validate_gaps(const GapVector& g) {
  if (!(g.q > 0.0) || !std::isfinite(g.q)) throw bad_argument("kernel parameter q must be positive and finite");
  for (std::size_t r = 0; r < g.gaps.size(); ++r)
    if (!(g.gaps[r] > 0.0) || !std::isfinite(g.gaps[r]))
      throw bad_argument("gap " + std::to_string(r + 1) + " must be positive and finite");
}

}  // namespace

SimilarityMatrix similarity_matrix(const std::vector<double>& t, double q) {
  if (!(q > 0.0) || !std::isfinite(q)) throw bad_argument("kernel parameter q must be positive and finite");
  const std::size_t n = t.size();
  if (n == 0) throw bad_argument("empty coordinate sequence");
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(t[i] < t[i + 1]))
      throw bad_argument("line coordinates must be strictly increasing (positions " +
                         std::to_string(i + 1) + "," + std::to_string(i + 2) + ")");
  SimilarityMatrix z;
  z.n = n;
  z.entries.assign(n * n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double e = std::exp(-q * (t[j] - t[i]));
      z(i, j) = e;
      z(j, i) = e;
    }
  }
  return z;
}

std::pair<double, std::vector<double>> sp_exact(const SimilarityMatrix& z) {
  // LU with partial pivoting, solving against the all-ones right-hand side.
  const std::size_t n = z.n;
  std::vector<double> a = z.entries;
  std::vector<double> w(n, 1.0);

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(a[col * n + col]);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double v = std::abs(a[r * n + col]);
      if (v > best) { best = v; piv = r; }
    }
    if (best < kPivotTol)
      throw singular_matrix("similarity matrix is numerically singular (pivot " +
                            std::to_string(best) + " at column " + std::to_string(col + 1) + ")");
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
      std::swap(w[piv], w[col]);
    }
    const double inv = 1.0 / a[col * n + col];
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] * inv;
      if (f == 0.0) continue;
      for (std::size_t c = col + 1; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      w[r] -= f * w[col];
    }
  }
  for (std::size_t ri = n; ri-- > 0;) {
    double s = w[ri];
    for (std::size_t c = ri + 1; c < n; ++c) s -= a[ri * n + c] * w[c];
    w[ri] = s / a[ri * n + ri];
  }

  double sum = 0.0;
  for (double v : w) sum += v;
  return {sum, std::move(w)};
}

double sp_gap_formula(const GapVector& g) {
  validate_gaps(g);
  double s = 1.0;
  for (double gap : g.gaps) s += std::tanh(0.5 * g.q * gap);
  return s;
}

std::vector<double> chain_weights_closed_form(const GapVector& g) {
  validate_gaps(g);
  const std::size_t k = g.gaps.size() + 1;
  if (k == 1) return {1.0};
  std::vector<double> h(k - 1);  // h_r = 1 / (1 + a_r)
  for (std::size_t r = 0; r + 1 < k; ++r) h[r] = 1.0 / (1.0 + std::exp(-g.q * g.gaps[r]));
  std::vector<double> w(k);
  w.front() = h.front();
  w.back() = h.back();
  for (std::size_t i = 1; i + 1 < k; ++i) w[i] = h[i - 1] + h[i] - 1.0;
  return w;
}

double edge_weight(double ti, double tj, double q) {
  if (!(ti < tj)) throw bad_argument("edge_weight requires ti < tj");
  if (!(q > 0.0) || !std::isfinite(q)) throw bad_argument("kernel parameter q must be positive and finite");
  return std::tanh(0.5 * q * (tj - ti));
}

}  // namespace spdiv
