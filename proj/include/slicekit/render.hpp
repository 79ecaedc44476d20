#pragma once

#include <string>

#include "slicekit/instance.hpp"

namespace slicekit {

inline constexpr std::size_t kRenderCubeCap = 100'000;

/// SVG 1.1 figure of a planar instance: the unit square with the rank-depth
/// cubes shaded, the lines m.y = u/n through integer-interval endpoints, and
/// a projection band labelled with I_k and J_t. Throws NotPlanar unless
/// l = 2, TooLarge past kRenderCubeCap cubes.
std::string render_grid(const ProblemInstance& inst, std::size_t depth);

}  // namespace slicekit
