#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace spdiv {

// A d-dimensional point under the l1 metric. All coordinates must be finite;
// every point in a set shares the same dimension.
using Point = std::vector<double>;

// Pairwise verification tolerance for line reductions (absolute).
inline constexpr double kReductionTol = 1e-9;

// Permutation + sign vector + induced line coordinates witnessing that a
// point set reduces to a line metric. t is strictly increasing and
// t_i = sum_l sigma_l * coord_l of the i-th point in reduced order.
struct StaircaseReduction {
  std::vector<std::size_t> order;  // order[i] = original index of i-th chain point
  std::vector<int> sigma;          // entries in {-1,+1}, sigma[0] == +1
  std::vector<double> t;           // strictly increasing line coordinates
};

// Witness of a failed pairwise check: |d1(p_i, p_j) - (t_j - t_i)| > tol
// for chain positions i < j.
struct ReductionViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  double distance = 0.0;
  double line_gap = 0.0;
};

double l1_distance(const Point& a, const Point& b);

// Finds a permutation and canonical sign vector (first entry +1) under which
// all coordinate projections are monotone nondecreasing, i.e. the set is a
// signed coordinatewise monotone l1 staircase. Sign vectors are tried in
// lexicographic order (+1 before -1) and the first witness wins. Throws
// NotAStaircase (with a violating coordinate and point pair in the message)
// or DuplicatePoint.
StaircaseReduction detect_staircase(const std::vector<Point>& points);

// Full O(n^2) pairwise check that red.t reproduces every l1 distance of the
// reordered points, within kReductionTol. Independent of how red was built.
bool verify_reduction(const std::vector<Point>& points, const StaircaseReduction& red,
                      ReductionViolation* violation = nullptr);

// True iff d1(q_i, q_j) equals the sum of consecutive gaps for all pairs in
// the given order, within kReductionTol. No permutation search.
bool additivity_check(const std::vector<Point>& points);

// Planar shortcut for a monotone biobjective front (u strictly increasing,
// v strictly decreasing): t_i = u_i - v_i. Throws NotMonotoneFront.
std::vector<double> pareto_line_coords(const std::vector<Point>& points);

}  // namespace spdiv
