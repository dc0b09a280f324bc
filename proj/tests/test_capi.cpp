#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstring>
#include <string>
#include <vector>

#include "spdiv.h"

TEST_CASE("points lifecycle and getters") {
  const double coords[] = {0, 5, 2, 3, 2.5, 2.5, 4, 0.5, 5, 0};
  spdiv_points* points = nullptr;
  REQUIRE(spdiv_points_create(coords, 5, 2, &points) == SPDIV_OK);
  CHECK(spdiv_points_count(points) == 5);
  CHECK(spdiv_points_dim(points) == 2);
  spdiv_points_destroy(points);
}

TEST_CASE("points creation rejects bad input") {
  spdiv_points* points = nullptr;
  CHECK(spdiv_points_create(nullptr, 3, 2, &points) == SPDIV_ERR_BAD_ARGUMENT);
  const double nan_coords[] = {0.0, std::nan("")};
  CHECK(spdiv_points_create(nan_coords, 1, 2, &points) == SPDIV_ERR_NON_FINITE);
  CHECK(std::string(spdiv_last_error()).find("non-finite") != std::string::npos);
}

TEST_CASE("detect + verify + select through the C API") {
  const double coords[] = {0, 5, 2, 3, 2.5, 2.5, 4, 0.5, 5, 0};
  spdiv_points* points = nullptr;
  REQUIRE(spdiv_points_create(coords, 5, 2, &points) == SPDIV_OK);

  spdiv_reduction* red = nullptr;
  REQUIRE(spdiv_detect_staircase(points, &red) == SPDIV_OK);
  CHECK(spdiv_reduction_size(red) == 5);
  CHECK(spdiv_reduction_dim(red) == 2);
  const int* sigma = spdiv_reduction_sigma(red);
  CHECK(sigma[0] == 1);
  CHECK(sigma[1] == -1);
  const double* t = spdiv_reduction_line_coords(red);
  const double expected_t[] = {-5, -1, 0, 3.5, 5};
  for (int i = 0; i < 5; ++i) CHECK(t[i] == expected_t[i]);
  CHECK(spdiv_reduction_verify(points, red) == 1);
  CHECK(spdiv_additivity_check(points) == 1);  // given order is already monotone

  spdiv_selection* sel = nullptr;
  REQUIRE(spdiv_select(t, 5, SPDIV_OBJECTIVE_SP, 3, 1.0, &sel) == SPDIV_OK);
  CHECK(spdiv_selection_size(sel) == 3);
  const size_t* idx = spdiv_selection_indices(sel);
  CHECK(idx[0] == 0);
  CHECK(idx[1] == 2);
  CHECK(idx[2] == 4);
  CHECK(spdiv_selection_value(sel) == doctest::Approx(1.0 + 2.0 * std::tanh(2.5)));
  const double* contrib = spdiv_selection_gap_contributions(sel);
  CHECK(contrib[0] == doctest::Approx(std::tanh(2.5)));
  CHECK(contrib[1] == doctest::Approx(std::tanh(2.5)));
  spdiv_selection_destroy(sel);

  spdiv_selection* oracle = nullptr;
  REQUIRE(spdiv_select_brute_force(t, 5, SPDIV_OBJECTIVE_SP, 3, 1.0, 16, &oracle) == SPDIV_OK);
  CHECK(std::abs(spdiv_selection_value(oracle) - (1.0 + 2.0 * std::tanh(2.5))) <= 1e-9);
  spdiv_selection_destroy(oracle);

  spdiv_selection* mpd = nullptr;
  REQUIRE(spdiv_select(t, 5, SPDIV_OBJECTIVE_MPD, 1, 1.0, &mpd) == SPDIV_OK);
  CHECK(std::isinf(spdiv_selection_value(mpd)));
  spdiv_selection_destroy(mpd);

  spdiv_reduction_destroy(red);
  spdiv_points_destroy(points);
}

TEST_CASE("non-staircase input reports a certificate") {
  const double coords[] = {0, 0, 1, 1, 2, 0};
  spdiv_points* points = nullptr;
  REQUIRE(spdiv_points_create(coords, 3, 2, &points) == SPDIV_OK);
  spdiv_reduction* red = nullptr;
  CHECK(spdiv_detect_staircase(points, &red) == SPDIV_ERR_NOT_A_STAIRCASE);
  CHECK(std::string(spdiv_last_error()).find("coordinate 2") != std::string::npos);
  CHECK(spdiv_additivity_check(points) == 0);
  spdiv_points_destroy(points);
}

TEST_CASE("additivity check passes on the 3D chain") {
  const double coords[] = {0, 0, 0, 1, 1, 2, 2, 3, 3, 4, 5, 6};
  spdiv_points* points = nullptr;
  REQUIRE(spdiv_points_create(coords, 4, 3, &points) == SPDIV_OK);
  CHECK(spdiv_additivity_check(points) == 1);
  spdiv_points_destroy(points);
}

TEST_CASE("selection errors") {
  const double t[] = {0.0, 1.0, 2.0};
  spdiv_selection* sel = nullptr;
  CHECK(spdiv_select(t, 3, SPDIV_OBJECTIVE_SP, 0, 1.0, &sel) == SPDIV_ERR_BAD_CARDINALITY);
  CHECK(spdiv_select(t, 3, SPDIV_OBJECTIVE_SP, 4, 1.0, &sel) == SPDIV_ERR_BAD_CARDINALITY);
  CHECK(spdiv_select(t, 3, SPDIV_OBJECTIVE_SP, 2, -1.0, &sel) == SPDIV_ERR_BAD_ARGUMENT);
  const double bad_t[] = {0.0, 0.0};
  CHECK(spdiv_select(bad_t, 2, SPDIV_OBJECTIVE_SP, 1, 1.0, &sel) == SPDIV_ERR_BAD_ARGUMENT);
  CHECK(spdiv_select_brute_force(t, 3, SPDIV_OBJECTIVE_SP, 2, 1.0, 2, &sel) ==
        SPDIV_ERR_TOO_LARGE_FOR_BRUTE_FORCE);
}

TEST_CASE("magnitude primitives") {
  const double gaps[] = {5.0, 5.0};
  double value = 0.0;
  REQUIRE(spdiv_sp_gap_formula(gaps, 2, 1.0, &value) == SPDIV_OK);
  CHECK(value == doctest::Approx(2.973228).epsilon(1e-6));
  REQUIRE(spdiv_sp_gap_formula(nullptr, 0, 1.0, &value) == SPDIV_OK);
  CHECK(value == 1.0);

  const double t[] = {-5.0, 0.0, 5.0};
  double weights[3];
  REQUIRE(spdiv_sp_exact(t, 3, 1.0, &value, weights) == SPDIV_OK);
  CHECK(value == doctest::Approx(1.0 + 2.0 * std::tanh(2.5)).epsilon(1e-12));

  double closed[3];
  REQUIRE(spdiv_chain_weights_closed_form(gaps, 2, 1.0, closed) == SPDIV_OK);
  for (int i = 0; i < 3; ++i) CHECK(std::abs(closed[i] - weights[i]) <= 1e-10);

  const size_t subset[] = {0, 2};
  REQUIRE(spdiv_sp_of_subset(t, 3, 1.0, subset, 2, &value) == SPDIV_OK);
  CHECK(value == doctest::Approx(1.0 + std::tanh(5.0)).epsilon(1e-12));

  REQUIRE(spdiv_edge_weight(0.0, 5.0, 1.0, &value) == SPDIV_OK);
  CHECK(value == doctest::Approx(std::tanh(2.5)).epsilon(1e-15));
  CHECK(spdiv_edge_weight(5.0, 0.0, 1.0, &value) == SPDIV_ERR_BAD_ARGUMENT);
}

TEST_CASE("fixtures") {
  const char* csv = spdiv_fixture_csv("pareto5");
  REQUIRE(csv != nullptr);
  CHECK(std::string(csv).substr(0, 4) == "0,5\n");
  CHECK(spdiv_fixture_csv("parabola20") != nullptr);
  CHECK(spdiv_fixture_csv("staircase3d") != nullptr);
  CHECK(spdiv_fixture_csv("nope") == nullptr);
  CHECK(std::string(spdiv_last_error()).find("unknown fixture") != std::string::npos);
  CHECK(spdiv_fixture_csv(nullptr) == nullptr);
}

TEST_CASE("status names and version") {
  CHECK(std::string(spdiv_status_name(SPDIV_OK)) == "ok");
  CHECK(std::string(spdiv_status_name(SPDIV_ERR_NOT_A_STAIRCASE)) == "not_a_staircase");
  CHECK(std::string(spdiv_version()) == "0.1.0");
}
