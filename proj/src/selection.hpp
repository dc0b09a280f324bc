#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace spdiv {

enum class Objective { SP, MPD };

// Strictly increasing line coordinates plus the kernel parameter; the DP
// input. q is only consulted by the SP objective.
struct LineInstance {
  std::vector<double> t;
  double q = 1.0;
};

inline constexpr std::size_t kNoPred = std::numeric_limits<std::size_t>::max();

// Bellman table F(m, j) (SP, max-plus) or B(m, j) (MPD, max-min) for
// m = 1..k with predecessor links. Unreachable states hold -inf; the MPD
// base row holds +inf.
struct DpTable {
  Objective mode = Objective::SP;
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<double> value;      // (k+1) * n, row 0 unused
  std::vector<std::size_t> pred;  // kNoPred where no predecessor exists

  double val(std::size_t m, std::size_t j) const { return value[m * n + j]; }
  std::size_t predecessor(std::size_t m, std::size_t j) const { return pred[m * n + j]; }
};

struct SelectionResult {
  std::vector<std::size_t> indices;       // strictly increasing, 0-based
  double value = 0.0;                     // +inf for MPD with k = 1
  Objective objective = Objective::SP;
  double q = 1.0;
  std::vector<double> gap_contributions;  // phi values (SP) or raw gaps (MPD)
};

// Fills the full DP table in O(k n^2) time and O(k n) memory. Argmax ties
// keep the smallest predecessor index (strict comparison, no epsilon).
DpTable run_dp(const LineInstance& inst, std::size_t k, Objective mode);

// Exact SP maximizer over all k-subsets; value is 1 + max_j F(k, j).
SelectionResult select_sp(const LineInstance& inst, std::size_t k);

// Exact bottleneck (max-min consecutive gap) maximizer.
SelectionResult select_mpd(const LineInstance& inst, std::size_t k);

// Exhaustive oracle over all C(n, k) subsets; SP subsets are scored through
// the dense matrix solve, never the gap formula. Returns the
// lexicographically smallest optimizer. n above max_n is rejected.
SelectionResult brute_force_select(const LineInstance& inst, std::size_t k, Objective objective,
                                   std::size_t max_n = 16);

// 1 + sum of tanh(q * gap / 2) over consecutive selected gaps.
double sp_of_subset(const LineInstance& inst, const std::vector<std::size_t>& indices);

}  // namespace spdiv
