#pragma once

#include <string_view>

namespace spdiv {

// Embedded CSV fixtures, byte-stable across runs. Known names:
// "pareto5", "parabola20", "staircase3d". Throws UnknownFixture otherwise.
std::string_view fixture_csv(std::string_view name);

}  // namespace spdiv
