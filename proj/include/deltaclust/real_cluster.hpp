#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "deltaclust/spectrum.hpp"
#include "deltaclust/types.hpp"

namespace deltaclust {

// One flag per sorted position: 1 where the gap to the previous sorted value
// exceeds delta. The first flag is always 1.
using GapVector = std::vector<std::uint8_t>;

// Running sums of the gap flags. Throws on an empty vector or g[0] != 1.
std::vector<std::uint32_t> prefix_sum(std::span<const std::uint8_t> gaps);

// Sort-and-split clustering of purely real points; labels are over the points.
// Throws std::invalid_argument if any imaginary part is nonzero.
Clustering cluster_points_real(std::span<const PlanePoint> points, double delta);

Clustering cluster_real(const Spectrum& s, double delta);

}  // namespace deltaclust
