#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "errors.hpp"
#include "magnitude.hpp"
#include "selection.hpp"

using namespace spdiv;

namespace {

const LineInstance kLine{{0.0, 0.25, 0.5, 2.0 / 3.0, 1.0}, 1.0};
const LineInstance kPareto{{-5.0, -1.0, 0.0, 3.5, 5.0}, 1.0};

LineInstance random_instance(std::mt19937& rng, std::size_t n) {
  std::uniform_real_distribution<double> gap(0.01, 3.0);
  std::uniform_real_distribution<double> log_q(std::log(0.05), std::log(10.0));
  LineInstance inst;
  inst.q = std::exp(log_q(rng));
  double t = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    inst.t.push_back(t);
    t += gap(rng);
  }
  return inst;
}

}  // namespace

TEST_CASE("select_sp worked line example") {
  const auto res = select_sp(kLine, 3);
  CHECK(res.indices == std::vector<std::size_t>{0, 2, 4});
  CHECK(std::abs(res.value - (1.0 + 2.0 * std::tanh(0.25))) <= 1e-12);
  CHECK(res.gap_contributions.size() == 2);
}

TEST_CASE("select_sp worked Pareto line") {
  const auto res = select_sp(kPareto, 3);
  CHECK(res.indices == std::vector<std::size_t>{0, 2, 4});
  CHECK(res.value == doctest::Approx(2.973228).epsilon(1e-6));
}

TEST_CASE("select_sp k=1") {
  const auto res = select_sp(kPareto, 1);
  CHECK(res.indices.size() == 1);
  CHECK(res.value == 1.0);
  CHECK(res.gap_contributions.empty());
}

TEST_CASE("select_sp bad cardinality") {
  CHECK_THROWS_AS(select_sp(kLine, 0), Error);
  CHECK_THROWS_AS(select_sp(kLine, 6), Error);
}

TEST_CASE("select_mpd worked examples") {
  const auto res = select_mpd(kLine, 3);
  CHECK(res.indices == std::vector<std::size_t>{0, 2, 4});
  CHECK(res.value == 0.5);

  const auto pair = select_mpd(kPareto, 2);
  CHECK(pair.indices == std::vector<std::size_t>{0, 4});
  CHECK(pair.value == 10.0);

  const auto all = select_mpd(kLine, 5);
  CHECK(all.indices == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(all.value == doctest::Approx(1.0 / 6.0));

  const auto single = select_mpd(kLine, 1);
  CHECK(std::isinf(single.value));
  CHECK(single.value > 0);
}

TEST_CASE("dp table shape and sentinels") {
  const auto table = run_dp(kLine, 3, Objective::SP);
  for (std::size_t j = 0; j < table.n; ++j) CHECK(table.val(1, j) == 0.0);
  // Unreachable: fewer than m candidates up to j.
  CHECK(table.val(2, 0) == -std::numeric_limits<double>::infinity());
  CHECK(table.val(3, 1) == -std::numeric_limits<double>::infinity());

  const auto mpd = run_dp(kLine, 2, Objective::MPD);
  for (std::size_t j = 0; j < mpd.n; ++j)
    CHECK(mpd.val(1, j) == std::numeric_limits<double>::infinity());
}

TEST_CASE("backtracking soundness") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> size(2, 12);
    const auto inst = random_instance(rng, size(rng));
    std::uniform_int_distribution<std::size_t> card(2, inst.t.size());
    const std::size_t k = card(rng);
    const auto table = run_dp(inst, k, Objective::SP);
    const auto res = select_sp(inst, k);
    REQUIRE(res.indices.size() == k);
    for (std::size_t r = 0; r + 1 < k; ++r) REQUIRE(res.indices[r] < res.indices[r + 1]);
    // Partial sums reproduce F(m, i_m) at every prefix.
    double partial = 0.0;
    for (std::size_t m = 1; m <= k; ++m) {
      if (m > 1)
        partial += std::tanh(0.5 * inst.q * (inst.t[res.indices[m - 1]] -
                                             inst.t[res.indices[m - 2]]));
      CHECK(std::abs(partial - table.val(m, res.indices[m - 1])) <= 1e-12);
    }
  }
}

TEST_CASE("brute_force_select matches the DP on the worked instance") {
  const auto dp = select_sp(kPareto, 3);
  const auto oracle = brute_force_select(kPareto, 3, Objective::SP);
  CHECK(std::abs(dp.value - oracle.value) <= 1e-9);
  CHECK(oracle.indices == dp.indices);

  const auto dp_mpd = select_mpd(kPareto, 3);
  const auto oracle_mpd = brute_force_select(kPareto, 3, Objective::MPD);
  CHECK(dp_mpd.value == oracle_mpd.value);
}

TEST_CASE("brute_force_select single subset when n == k") {
  const auto oracle = brute_force_select(kLine, 5, Objective::SP);
  const auto dp = select_sp(kLine, 5);
  CHECK(oracle.indices == std::vector<std::size_t>{0, 1, 2, 3, 4});
  CHECK(std::abs(oracle.value - dp.value) <= 1e-9);
}

TEST_CASE("brute_force_select enforces the size cap") {
  LineInstance big;
  big.q = 1.0;
  for (int i = 0; i < 17; ++i) big.t.push_back(double(i));
  CHECK_THROWS_AS(brute_force_select(big, 3, Objective::SP), Error);
  try {
    brute_force_select(big, 3, Objective::SP);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::TooLargeForBruteForce);
  }
  CHECK_NOTHROW(brute_force_select(big, 3, Objective::MPD, 17));
}

TEST_CASE("sp_of_subset") {
  GapVector full{{}, kPareto.q};
  for (std::size_t i = 0; i + 1 < kPareto.t.size(); ++i)
    full.gaps.push_back(kPareto.t[i + 1] - kPareto.t[i]);
  CHECK(sp_of_subset(kPareto, {0, 1, 2, 3, 4}) == doctest::Approx(sp_gap_formula(full)));
  CHECK(sp_of_subset(kPareto, {0, 2, 4}) == doctest::Approx(2.973228).epsilon(1e-6));
  CHECK(sp_of_subset(kPareto, {3}) == 1.0);
  CHECK_THROWS_AS(sp_of_subset(kPareto, {2, 1}), Error);
  CHECK_THROWS_AS(sp_of_subset(kPareto, {0, 9}), Error);
}

TEST_CASE("DP equals exhaustive SP oracle on random instances") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 9);
    const auto inst = random_instance(rng, size(rng));
    for (std::size_t k = 1; k <= inst.t.size(); ++k) {
      const auto dp = select_sp(inst, k);
      const auto oracle = brute_force_select(inst, k, Objective::SP);
      CHECK(std::abs(dp.value - oracle.value) <= 1e-9);
    }
  }
}

TEST_CASE("DP equals exhaustive MPD oracle exactly") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 25; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 9);
    const auto inst = random_instance(rng, size(rng));
    for (std::size_t k = 1; k <= inst.t.size(); ++k) {
      const auto dp = select_mpd(inst, k);
      const auto oracle = brute_force_select(inst, k, Objective::MPD);
      CHECK(dp.value == oracle.value);
      // Reported value equals the minimum consecutive selected gap exactly.
      if (k >= 2) {
        double min_gap = std::numeric_limits<double>::infinity();
        for (std::size_t r = 0; r + 1 < k; ++r)
          min_gap = std::min(min_gap, inst.t[dp.indices[r + 1]] - inst.t[dp.indices[r]]);
        CHECK(dp.value == min_gap);
      }
    }
  }
}

TEST_CASE("no random subset beats the DP optimum") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 10; ++trial) {
    std::uniform_int_distribution<std::size_t> size(3, 14);
    const auto inst = random_instance(rng, size(rng));
    const std::size_t n = inst.t.size();
    std::uniform_int_distribution<std::size_t> card(1, n);
    const std::size_t k = card(rng);
    const double best = select_sp(inst, k).value;
    std::vector<std::size_t> all(n);
    for (std::size_t i = 0; i < n; ++i) all[i] = i;
    for (int s = 0; s < 100; ++s) {
      std::shuffle(all.begin(), all.end(), rng);
      std::vector<std::size_t> subset(all.begin(), all.begin() + k);
      std::sort(subset.begin(), subset.end());
      CHECK(sp_of_subset(inst, subset) <= best + 1e-12);
    }
  }
}

TEST_CASE("some optimizer contains both extremes") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    std::uniform_int_distribution<std::size_t> size(2, 10);
    const auto inst = random_instance(rng, size(rng));
    const std::size_t n = inst.t.size();
    std::uniform_int_distribution<std::size_t> card(2, n);
    const std::size_t k = card(rng);
    const double best = select_sp(inst, k).value;

    // Best value over chains constrained to start at 0 and end at n-1,
    // enumerating interior index combinations directly.
    double constrained = -std::numeric_limits<double>::infinity();
    std::vector<std::size_t> interior(k - 2);
    std::function<void(std::size_t, std::size_t)> recurse = [&](std::size_t pos,
                                                                std::size_t start) {
      if (pos == interior.size()) {
        std::vector<std::size_t> chain{0};
        chain.insert(chain.end(), interior.begin(), interior.end());
        chain.push_back(n - 1);
        constrained = std::max(constrained, sp_of_subset(inst, chain));
        return;
      }
      for (std::size_t i = start; i + 1 <= n - 1; ++i) {
        interior[pos] = i;
        recurse(pos + 1, i + 1);
      }
    };
    recurse(0, 1);
    CHECK(best == doctest::Approx(constrained).epsilon(1e-12));
  }
}

TEST_CASE("reported value is consistent with sp_of_subset") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    std::uniform_int_distribution<std::size_t> size(1, 15);
    const auto inst = random_instance(rng, size(rng));
    std::uniform_int_distribution<std::size_t> card(1, inst.t.size());
    const std::size_t k = card(rng);
    const auto res = select_sp(inst, k);
    CHECK(std::abs(sp_of_subset(inst, res.indices) - res.value) <= 1e-12);
    // value = 1 + sum of contributions
    double s = 1.0;
    for (double c : res.gap_contributions) s += c;
    CHECK(std::abs(s - res.value) <= 1e-12);
  }
}
