#pragma once

#include <string>

#include "gamma3/catalog.hpp"
#include "gamma3/orbits.hpp"

namespace gamma3 {

struct RenderOptions {
    double size_px = 480.0;
    int extent = 3;       // lattice cells in each direction
    int level_range = 1;  // dilation levels |l| <= level_range
};

/// Lattice points, the unit cell, and mirror / glide-axis markers.
std::string svg_lattice(const GroupData& gd, const RenderOptions& opt = {});

/// The D x Z orbit of a frequency: points 3^l L omega for |l| <= level_range.
std::string svg_orbits(const GroupData& gd, Vec2 omega, const RenderOptions& opt = {});

/// The cross-section X (sector times annulus) and its dilated/rotated
/// copies 3^l L X.
std::string svg_cross_section(const GroupData& gd, const RenderOptions& opt = {});

}  // namespace gamma3
