#pragma once

#include <string>

#include "crg/hyperplanes.hpp"

namespace crg {

// 100 px per unit, lattice dots r = 5, hyperplane dots r = 2, view box
// [-R - 1/2, R + 1/2]^2 with the imaginary axis pointing up.
std::string render_svg(const Rank1Window& w);

}  // namespace crg
