#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace spdiv {

// Dense symmetric similarity matrix Z_ij = exp(-q * |t_i - t_j|), unit
// diagonal, row-major storage.
struct SimilarityMatrix {
  std::size_t n = 0;
  std::vector<double> entries;  // n*n, row-major

  double operator()(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
  double& operator()(std::size_t i, std::size_t j) { return entries[i * n + j]; }
};

// Consecutive gaps g_1..g_{k-1} of an ordered chain plus the kernel
// parameter q. Empty gaps means a single point.
struct GapVector {
  std::vector<double> gaps;  // all strictly positive and finite
  double q = 1.0;            // q > 0
};

SimilarityMatrix similarity_matrix(const std::vector<double>& t, double q);

// Solves Z w = 1 by dense LU with partial pivoting and returns
// (sum of weights, weights). This is the matrix oracle; it never uses the
// gap formula. Pivots below 1e-12 in magnitude raise SingularMatrix.
std::pair<double, std::vector<double>> sp_exact(const SimilarityMatrix& z);

// SP = 1 + sum_r tanh(q * g_r / 2). Empty gap list gives 1.
double sp_gap_formula(const GapVector& g);

// Closed-form solution of Z w = 1 on a chain: with a_r = exp(-q g_r),
// w_1 = 1/(1+a_1), w_k = 1/(1+a_{k-1}), interior
// w_i = 1/(1+a_{i-1}) + 1/(1+a_i) - 1. For a single point returns (1).
std::vector<double> chain_weights_closed_form(const GapVector& g);

// Edge weight tanh(q * (tj - ti) / 2) for ti < tj; strictly in (0, 1].
double edge_weight(double ti, double tj, double q);

}  // namespace spdiv
