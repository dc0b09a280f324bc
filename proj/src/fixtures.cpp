#include "fixtures.hpp"

#include <string>

#include "errors.hpp"

namespace spdiv {

namespace {

// 5-point monotone biobjective front.
constexpr std::string_view kPareto5 =
    "0,5\n"
    "2,3\n"
    "2.5,2.5\n"
    "4,0.5\n"
    "5,0\n";

// 20 points on f2 = 1 - f1^2, 4-decimal coordinates, already sorted by f1.
constexpr std::string_view kParabola20 =
    "0.0446,0.9980\n"
    "0.1602,0.9743\n"
    "0.2061,0.9575\n"
    "0.2500,0.9375\n"
    "0.2836,0.9196\n"
    "0.3278,0.8926\n"
    "0.3816,0.8544\n"
    "0.4289,0.8161\n"
    "0.4568,0.7913\n"
    "0.5207,0.7289\n"
    "0.5714,0.6735\n"
    "0.5781,0.6658\n"
    "0.6032,0.6362\n"
    "0.6535,0.5730\n"
    "0.6750,0.5444\n"
    "0.8133,0.3385\n"
    "0.8236,0.3217\n"
    "0.8602,0.2601\n"
    "0.9528,0.0921\n"
    "0.9966,0.0069\n";

// Ascending 3D chain with consecutive l1 gaps 4, 4, 7.
constexpr std::string_view kStaircase3d =
    "0,0,0\n"
    "1,1,2\n"
    "2,3,3\n"
    "4,5,6\n";

}  // namespace

std::string_view fixture_csv(std::string_view name) {
  if (name == "pareto5") return kPareto5;
  if (name == "parabola20") return kParabola20;
  if (name == "staircase3d") return kStaircase3d;
  throw unknown_fixture("unknown fixture '" + std::string(name) +
                        "'; expected pareto5, parabola20, or staircase3d");
}

}  // namespace spdiv
