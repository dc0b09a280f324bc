#include "spdiv.h"

#include <cmath>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "chain_geometry.hpp"
#include "errors.hpp"
#include "fixtures.hpp"
#include "magnitude.hpp"
#include "selection.hpp"

struct spdiv_points {
  std::vector<spdiv::Point> points;
};

struct spdiv_reduction {
  spdiv::StaircaseReduction red;
  std::size_t dim = 0;
};

struct spdiv_selection {
  spdiv::SelectionResult result;
};

namespace {

thread_local std::string g_last_error;

spdiv_status status_from(spdiv::ErrorKind kind) {
  using spdiv::ErrorKind;
  switch (kind) {
    case ErrorKind::BadArgument: return SPDIV_ERR_BAD_ARGUMENT;
    case ErrorKind::DimensionMismatch: return SPDIV_ERR_DIMENSION_MISMATCH;
    case ErrorKind::NonFinite: return SPDIV_ERR_NON_FINITE;
    case ErrorKind::DuplicatePoint: return SPDIV_ERR_DUPLICATE_POINT;
    case ErrorKind::NotAStaircase: return SPDIV_ERR_NOT_A_STAIRCASE;
    case ErrorKind::NotMonotoneFront: return SPDIV_ERR_NOT_MONOTONE_FRONT;
    case ErrorKind::BadCardinality: return SPDIV_ERR_BAD_CARDINALITY;
    case ErrorKind::SingularMatrix: return SPDIV_ERR_SINGULAR_MATRIX;
    case ErrorKind::TooLargeForBruteForce: return SPDIV_ERR_TOO_LARGE_FOR_BRUTE_FORCE;
    case ErrorKind::UnknownFixture: return SPDIV_ERR_UNKNOWN_FIXTURE;
  }
  return SPDIV_ERR_INTERNAL;
}

template <typename Fn>
spdiv_status guarded(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return SPDIV_OK;
  } catch (const spdiv::Error& e) {
    g_last_error = e.what();
    return status_from(e.kind());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SPDIV_ERR_INTERNAL;
  }
}

spdiv::Objective to_objective(spdiv_objective objective) {
  if (objective != SPDIV_OBJECTIVE_SP && objective != SPDIV_OBJECTIVE_MPD)
    throw spdiv::bad_argument("unknown objective code " + std::to_string(int(objective)));
  return objective == SPDIV_OBJECTIVE_SP ? spdiv::Objective::SP : spdiv::Objective::MPD;
}

spdiv::GapVector gap_vector(const double* gaps, size_t ngaps, double q) {
  if (gaps == nullptr && ngaps > 0) throw spdiv::bad_argument("gaps pointer is null");
  spdiv::GapVector g;
  g.gaps.assign(gaps, gaps + ngaps);
  g.q = q;
  return g;
}

spdiv::LineInstance line_instance(const double* t, size_t n, double q) {
  if (t == nullptr || n == 0) throw spdiv::bad_argument("empty coordinate array");
  spdiv::LineInstance inst;
  inst.t.assign(t, t + n);
  inst.q = q;
  return inst;
}

}  // namespace

extern "C" {

const char* spdiv_version(void) { return "0.1.0"; }

const char* spdiv_status_name(spdiv_status status) {
  switch (status) {
    case SPDIV_OK: return "ok";
    case SPDIV_ERR_BAD_ARGUMENT: return "bad_argument";
    case SPDIV_ERR_DIMENSION_MISMATCH: return "dimension_mismatch";
    case SPDIV_ERR_NON_FINITE: return "non_finite";
    case SPDIV_ERR_DUPLICATE_POINT: return "duplicate_point";
    case SPDIV_ERR_NOT_A_STAIRCASE: return "not_a_staircase";
    case SPDIV_ERR_NOT_MONOTONE_FRONT: return "not_monotone_front";
    case SPDIV_ERR_BAD_CARDINALITY: return "bad_cardinality";
    case SPDIV_ERR_SINGULAR_MATRIX: return "singular_matrix";
    case SPDIV_ERR_TOO_LARGE_FOR_BRUTE_FORCE: return "too_large_for_brute_force";
    case SPDIV_ERR_UNKNOWN_FIXTURE: return "unknown_fixture";
    case SPDIV_ERR_INTERNAL: return "internal_error";
  }
  return "unknown_status";
}

const char* spdiv_last_error(void) { return g_last_error.c_str(); }

spdiv_status spdiv_points_create(const double* coords, size_t n, size_t d, spdiv_points** out) {
  return guarded([&] {
    if (out == nullptr) throw spdiv::bad_argument("out pointer is null");
    if (coords == nullptr || n == 0 || d == 0)
      throw spdiv::bad_argument("need a non-empty coordinate array with n >= 1, d >= 1");
    auto handle = std::make_unique<spdiv_points>();
    handle->points.resize(n);
    for (size_t i = 0; i < n; ++i) {
      handle->points[i].assign(coords + i * d, coords + (i + 1) * d);
      for (double c : handle->points[i])
        if (!std::isfinite(c))
          throw spdiv::non_finite("point " + std::to_string(i + 1) +
                                  " has a non-finite coordinate");
    }
    *out = handle.release();
  });
}

void spdiv_points_destroy(spdiv_points* points) { delete points; }

size_t spdiv_points_count(const spdiv_points* points) {
  return points ? points->points.size() : 0;
}

size_t spdiv_points_dim(const spdiv_points* points) {
  return points && !points->points.empty() ? points->points.front().size() : 0;
}

spdiv_status spdiv_detect_staircase(const spdiv_points* points, spdiv_reduction** out) {
  return guarded([&] {
    if (points == nullptr || out == nullptr) throw spdiv::bad_argument("null handle");
    auto handle = std::make_unique<spdiv_reduction>();
    handle->red = spdiv::detect_staircase(points->points);
    handle->dim = points->points.front().size();
    *out = handle.release();
  });
}

void spdiv_reduction_destroy(spdiv_reduction* red) { delete red; }

size_t spdiv_reduction_size(const spdiv_reduction* red) {
  return red ? red->red.order.size() : 0;
}

size_t spdiv_reduction_dim(const spdiv_reduction* red) { return red ? red->dim : 0; }

const size_t* spdiv_reduction_order(const spdiv_reduction* red) {
  return red ? red->red.order.data() : nullptr;
}

const int* spdiv_reduction_sigma(const spdiv_reduction* red) {
  return red ? red->red.sigma.data() : nullptr;
}

const double* spdiv_reduction_line_coords(const spdiv_reduction* red) {
  return red ? red->red.t.data() : nullptr;
}

int spdiv_reduction_verify(const spdiv_points* points, const spdiv_reduction* red) {
  if (points == nullptr || red == nullptr) return 0;
  try {
    return spdiv::verify_reduction(points->points, red->red) ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

int spdiv_additivity_check(const spdiv_points* points) {
  if (points == nullptr) return -1;
  bool result = false;
  const spdiv_status st = guarded([&] { result = spdiv::additivity_check(points->points); });
  if (st != SPDIV_OK) return -int(st);
  return result ? 1 : 0;
}

spdiv_status spdiv_select(const double* t, size_t n, spdiv_objective objective, size_t k,
                          double q, spdiv_selection** out) {
  return guarded([&] {
    if (out == nullptr) throw spdiv::bad_argument("out pointer is null");
    const auto inst = line_instance(t, n, q);
    auto handle = std::make_unique<spdiv_selection>();
    handle->result = to_objective(objective) == spdiv::Objective::SP
                         ? spdiv::select_sp(inst, k)
                         : spdiv::select_mpd(inst, k);
    *out = handle.release();
  });
}

spdiv_status spdiv_select_brute_force(const double* t, size_t n, spdiv_objective objective,
                                      size_t k, double q, size_t max_n, spdiv_selection** out) {
  return guarded([&] {
    if (out == nullptr) throw spdiv::bad_argument("out pointer is null");
    auto handle = std::make_unique<spdiv_selection>();
    handle->result =
        spdiv::brute_force_select(line_instance(t, n, q), k, to_objective(objective), max_n);
    *out = handle.release();
  });
}

void spdiv_selection_destroy(spdiv_selection* sel) { delete sel; }

size_t spdiv_selection_size(const spdiv_selection* sel) {
  return sel ? sel->result.indices.size() : 0;
}

const size_t* spdiv_selection_indices(const spdiv_selection* sel) {
  return sel ? sel->result.indices.data() : nullptr;
}

double spdiv_selection_value(const spdiv_selection* sel) {
  return sel ? sel->result.value : 0.0;
}

const double* spdiv_selection_gap_contributions(const spdiv_selection* sel) {
  return sel ? sel->result.gap_contributions.data() : nullptr;
}

spdiv_status spdiv_sp_gap_formula(const double* gaps, size_t ngaps, double q, double* out) {
  return guarded([&] {
    if (out == nullptr) throw spdiv::bad_argument("out pointer is null");
    *out = spdiv::sp_gap_formula(gap_vector(gaps, ngaps, q));
  });
}

spdiv_status spdiv_sp_exact(const double* t, size_t n, double q, double* value,
                            double* weights) {
  return guarded([&] {
    if (value == nullptr) throw spdiv::bad_argument("value pointer is null");
    const auto inst = line_instance(t, n, q);
    auto [sp, w] = spdiv::sp_exact(spdiv::similarity_matrix(inst.t, inst.q));
    *value = sp;
    if (weights != nullptr) std::memcpy(weights, w.data(), n * sizeof(double));
  });
}

spdiv_status spdiv_chain_weights_closed_form(const double* gaps, size_t ngaps, double q,
                                             double* weights) {
  return guarded([&] {
    if (weights == nullptr) throw spdiv::bad_argument("weights pointer is null");
    const auto w = spdiv::chain_weights_closed_form(gap_vector(gaps, ngaps, q));
    std::memcpy(weights, w.data(), w.size() * sizeof(double));
  });
}

spdiv_status spdiv_sp_of_subset(const double* t, size_t n, double q, const size_t* indices,
                                size_t k, double* out) {
  return guarded([&] {
    if (out == nullptr) throw spdiv::bad_argument("out pointer is null");
    if (indices == nullptr || k == 0) throw spdiv::bad_argument("empty subset");
    *out = spdiv::sp_of_subset(line_instance(t, n, q),
                               std::vector<size_t>(indices, indices + k));
  });
}

spdiv_status spdiv_edge_weight(double ti, double tj, double q, double* out) {
  return guarded([&] {
    if (out == nullptr) throw spdiv::bad_argument("out pointer is null");
    *out = spdiv::edge_weight(ti, tj, q);
  });
}

const char* spdiv_fixture_csv(const char* name) {
  const char* result = nullptr;
  guarded([&] {
    if (name == nullptr) throw spdiv::bad_argument("fixture name is null");
    // Embedded fixtures are NUL-terminated string literals.
    result = spdiv::fixture_csv(name).data();
  });
  return result;
}

}  // extern "C"
