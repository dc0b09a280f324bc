#include "chain_geometry.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>

#include "errors.hpp"

namespace spdiv {

namespace {

void validate_point_set(const std::vector<Point>& points) {
  if (points.empty()) throw bad_argument("point set is empty");
  const std::size_t d = points.front().size();
  if (d == 0) throw bad_argument("points must have dimension >= 1");
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (points[i].size() != d)
      throw dimension_mismatch("point " + std::to_string(i + 1) + " has dimension " +
                               std::to_string(points[i].size()) + ", expected " +
                               std::to_string(d));
    for (double c : points[i])
      if (!std::isfinite(c))
        throw non_finite("point " + std::to_string(i + 1) + " has a non-finite coordinate");
  }
}

void reject_duplicates(const std::vector<Point>& points) {
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j])
        throw duplicate_point("points " + std::to_string(i + 1) + " and " +
                              std::to_string(j + 1) + " coincide");
}

std::vector<int> signs_from_mask(std::uint64_t mask, std::size_t d) {
  // Canonical form: first sign fixed to +1. Ascending mask order is
  // lexicographic over sign vectors with +1 before -1.
  std::vector<int> sigma(d, +1);
  for (std::size_t c = 1; c < d; ++c)
    if (mask >> (d - 1 - c) & 1u) sigma[c] = -1;
  return sigma;
}

}  // namespace

double l1_distance(const Point& a, const Point& b) {
  if (a.size() != b.size())
    throw dimension_mismatch("l1_distance: dimensions " + std::to_string(a.size()) +
                             " vs " + std::to_string(b.size()));
  double s = 0.0;
  for (std::size_t l = 0; l < a.size(); ++l) s += std::abs(a[l] - b[l]);
  return s;
}

StaircaseReduction detect_staircase(const std::vector<Point>& points) {
  validate_point_set(points);
  reject_duplicates(points);
  const std::size_t n = points.size();
  const std::size_t d = points.front().size();
  if (d > 32) throw bad_argument("dimension too large for sign-vector search");

  bool have_witness = false;
  std::size_t bad_coord = 0, bad_i = 0, bad_j = 0;

  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (d - 1)); ++mask) {
    const std::vector<int> sigma = signs_from_mask(mask, d);

    std::vector<double> t(n);
    for (std::size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (std::size_t l = 0; l < d; ++l) s += sigma[l] * points[i][l];
      t[i] = s;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return t[a] < t[b]; });

    // Check coordinatewise monotonicity of the sorted sequence.
    bool monotone = true;
    for (std::size_t l = 0; l < d && monotone; ++l) {
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (sigma[l] * points[order[i + 1]][l] < sigma[l] * points[order[i]][l]) {
          monotone = false;
          if (!have_witness) {
            have_witness = true;
            bad_coord = l;
            bad_i = order[i];
            bad_j = order[i + 1];
          }
          break;
        }
      }
    }
    if (!monotone) continue;

    // Monotone with distinct points implies strictly increasing t; a tie
    // would force two identical points, rejected above.
    bool strict = true;
    for (std::size_t i = 0; i + 1 < n; ++i)
      if (!(t[order[i]] < t[order[i + 1]])) { strict = false; break; }
    if (!strict) continue;

    StaircaseReduction red;
    red.order = std::move(order);
    red.sigma = sigma;
    red.t.resize(n);
    for (std::size_t i = 0; i < n; ++i) red.t[i] = t[red.order[i]];
    return red;
  }

  std::string msg = "no l1-staircase ordering exists";
  if (have_witness)
    msg += ": coordinate " + std::to_string(bad_coord + 1) + " backtracks between points " +
           std::to_string(bad_i + 1) + " and " + std::to_string(bad_j + 1);
  throw not_a_staircase(msg);
}

bool verify_reduction(const std::vector<Point>& points, const StaircaseReduction& red,
                      ReductionViolation* violation) {
  const std::size_t n = points.size();
  if (red.order.size() != n || red.t.size() != n) return false;
  std::vector<bool> seen(n, false);
  for (std::size_t idx : red.order) {
    if (idx >= n || seen[idx]) return false;
    seen[idx] = true;
  }
  for (std::size_t i = 0; i + 1 < n; ++i)
    if (!(red.t[i] < red.t[i + 1])) return false;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double dist = l1_distance(points[red.order[i]], points[red.order[j]]);
      const double gap = red.t[j] - red.t[i];
      if (std::abs(dist - gap) > kReductionTol) {
        if (violation) *violation = {i, j, dist, gap};
        return false;
      }
    }
  }
  return true;
}

bool additivity_check(const std::vector<Point>& points) {
  validate_point_set(points);
  const std::size_t n = points.size();
  std::vector<double> prefix(n, 0.0);
  for (std::size_t i = 1; i < n; ++i)
    prefix[i] = prefix[i - 1] + l1_distance(points[i - 1], points[i]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(l1_distance(points[i], points[j]) - (prefix[j] - prefix[i])) > kReductionTol)
        return false;
  return true;
}

std::vector<double> pareto_line_coords(const std::vector<Point>& points) {
  validate_point_set(points);
  if (points.front().size() != 2)
    throw dimension_mismatch("pareto_line_coords requires 2-dimensional points");
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    if (!(points[i][0] < points[i + 1][0]))
      throw not_monotone_front("first coordinate not strictly increasing at rows " +
                               std::to_string(i + 1) + "," + std::to_string(i + 2));
    if (!(points[i][1] > points[i + 1][1]))
      throw not_monotone_front("second coordinate not strictly decreasing at rows " +
                               std::to_string(i + 1) + "," + std::to_string(i + 2));
  }
  std::vector<double> t(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) t[i] = points[i][0] - points[i][1];
  return t;
}

}  // namespace spdiv
