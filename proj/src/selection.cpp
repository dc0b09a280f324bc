#include "selection.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "errors.hpp"
#include "magnitude.hpp"

namespace spdiv {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

void validate_instance(const LineInstance& inst) {
  if (inst.t.empty()) throw bad_argument("empty line instance");
  if (!(inst.q > 0.0) || !std::isfinite(inst.q))
    throw bad_argument("kernel parameter q must be positive and finite");
  for (std::size_t i = 0; i < inst.t.size(); ++i) {
    if (!std::isfinite(inst.t[i]))
      throw non_finite("line coordinate " + std::to_string(i + 1) + " is not finite");
    if (i > 0 && !(inst.t[i - 1] < inst.t[i]))
      throw bad_argument("line coordinates must be strictly increasing (positions " +
                         std::to_string(i) + "," + std::to_string(i + 1) + ")");
  }
}

void validate_cardinality(std::size_t k, std::size_t n) {
  if (k < 1 || k > n)
    throw bad_cardinality("cardinality k=" + std::to_string(k) + " must lie in [1, " +
                          std::to_string(n) + "]");
}

SelectionResult finish(const LineInstance& inst, const DpTable& table) {
  const std::size_t n = table.n;
  const std::size_t k = table.k;

  // Smallest terminal index among those attaining the row maximum.
  std::size_t best_j = 0;
  double best = table.val(k, 0);
  for (std::size_t j = 1; j < n; ++j)
    if (table.val(k, j) > best) { best = table.val(k, j); best_j = j; }

  SelectionResult res;
  res.objective = table.mode;
  res.q = inst.q;
  res.indices.resize(k);
  std::size_t j = best_j;
  for (std::size_t m = k; m >= 1; --m) {
    res.indices[m - 1] = j;
    j = table.predecessor(m, j);
  }

  res.gap_contributions.reserve(k > 0 ? k - 1 : 0);
  for (std::size_t r = 0; r + 1 < k; ++r) {
    const double gap = inst.t[res.indices[r + 1]] - inst.t[res.indices[r]];
    res.gap_contributions.push_back(table.mode == Objective::SP ? std::tanh(0.5 * inst.q * gap)
                                                                : gap);
  }
  res.value = table.mode == Objective::SP ? 1.0 + best : best;
  return res;
}

double mpd_of_subset(const LineInstance& inst, const std::vector<std::size_t>& idx) {
  double best = kPosInf;
  for (std::size_t r = 0; r + 1 < idx.size(); ++r)
    best = std::min(best, inst.t[idx[r + 1]] - inst.t[idx[r]]);
  return best;
}

}  // namespace

DpTable run_dp(const LineInstance& inst, std::size_t k, Objective mode) {
  validate_instance(inst);
  const std::size_t n = inst.t.size();
  validate_cardinality(k, n);

  DpTable table;
  table.mode = mode;
  table.n = n;
  table.k = k;
  table.value.assign((k + 1) * n, kNegInf);
  table.pred.assign((k + 1) * n, kNoPred);

  const double base = mode == Objective::SP ? 0.0 : kPosInf;
  for (std::size_t j = 0; j < n; ++j) table.value[1 * n + j] = base;

  // Loop interchange keeps one transition-weight evaluation per (i, j) pair;
  // candidates for each cell (m, j) still arrive in ascending i, so strict
  // improvement retains the smallest predecessor on ties.
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      const double gap = inst.t[j] - inst.t[i];
      const double step = mode == Objective::SP ? std::tanh(0.5 * inst.q * gap) : gap;
      for (std::size_t m = 2; m <= k; ++m) {
        const double prev = table.value[(m - 1) * n + i];
        if (prev == kNegInf) continue;
        const double cand =
            mode == Objective::SP ? prev + step : std::min(prev, step);
        if (cand > table.value[m * n + j]) {
          table.value[m * n + j] = cand;
          table.pred[m * n + j] = i;
        }
      }
    }
  }
  return table;
}

SelectionResult select_sp(const LineInstance& inst, std::size_t k) {
  return finish(inst, run_dp(inst, k, Objective::SP));
}

SelectionResult select_mpd(const LineInstance& inst, std::size_t k) {
  return finish(inst, run_dp(inst, k, Objective::MPD));
}

SelectionResult brute_force_select(const LineInstance& inst, std::size_t k, Objective objective,
                                   std::size_t max_n) {
  validate_instance(inst);
  const std::size_t n = inst.t.size();
  validate_cardinality(k, n);
  if (n > max_n)
    throw too_large_for_brute_force("n=" + std::to_string(n) +
                                    " exceeds the brute-force cap " + std::to_string(max_n));

  std::vector<std::size_t> idx(k);
  for (std::size_t r = 0; r < k; ++r) idx[r] = r;

  SelectionResult best;
  best.objective = objective;
  best.q = inst.q;
  best.value = kNegInf;

  std::vector<double> sub(k);
  while (true) {
    double val;
    if (objective == Objective::SP) {
      for (std::size_t r = 0; r < k; ++r) sub[r] = inst.t[idx[r]];
      val = sp_exact(similarity_matrix(sub, inst.q)).first;
    } else {
      val = mpd_of_subset(inst, idx);
    }
    // Strict improvement keeps the lexicographically smallest optimizer.
    if (val > best.value) {
      best.value = val;
      best.indices = idx;
    }

    // Next combination in lexicographic order.
    std::size_t r = k;
    while (r-- > 0) {
      if (idx[r] + (k - r) < n) {
        ++idx[r];
        for (std::size_t s = r + 1; s < k; ++s) idx[s] = idx[s - 1] + 1;
        break;
      }
      if (r == 0) { r = kNoPred; break; }
    }
    if (r == kNoPred) break;
  }

  best.gap_contributions.clear();
  for (std::size_t r = 0; r + 1 < k; ++r) {
    const double gap = inst.t[best.indices[r + 1]] - inst.t[best.indices[r]];
    best.gap_contributions.push_back(objective == Objective::SP ? std::tanh(0.5 * inst.q * gap)
                                                                : gap);
  }
  return best;
}

double sp_of_subset(const LineInstance& inst, const std::vector<std::size_t>& indices) {
  validate_instance(inst);
  if (indices.empty()) throw bad_argument("subset must be non-empty");
  for (std::size_t r = 0; r < indices.size(); ++r) {
    if (indices[r] >= inst.t.size())
      throw bad_argument("subset index " + std::to_string(indices[r]) + " out of range");
    if (r > 0 && !(indices[r - 1] < indices[r]))
      throw bad_argument("subset indices must be strictly increasing");
  }
  double s = 1.0;
  for (std::size_t r = 0; r + 1 < indices.size(); ++r)
    s += std::tanh(0.5 * inst.q * (inst.t[indices[r + 1]] - inst.t[indices[r]]));
  return s;
}

}  // namespace spdiv
