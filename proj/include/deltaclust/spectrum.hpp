#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "deltaclust/types.hpp"

namespace deltaclust {

// The points handed to a clustering algorithm, plus what is needed to map
// cluster labels back onto every raw input position.
struct Spectrum {
  std::vector<PlanePoint> points;
  // Raw input position of each point.
  std::vector<std::size_t> origin_index;
  // Raw position of the dropped negative-imaginary partner of each point, if any.
  std::vector<std::optional<std::size_t>> conjugate_of;
  // Raw positions of the bitwise-equal inputs collapsed onto each point
  // (the point's own origin first).
  std::vector<std::vector<std::size_t>> multiplicity_group;
  // For every raw position, the index of the point that carries its label.
  std::vector<std::size_t> raw_to_point;

  std::size_t size() const noexcept { return points.size(); }
  std::size_t raw_size() const noexcept { return raw_to_point.size(); }

  // One point per raw input, no links. Throws on non-finite coordinates.
  static Spectrum from_points(std::span<const PlanePoint> raw);
};

// Keeps every point with im >= 0 and every unmatched im < 0 point; a negative
// point whose conjugate appears in the input (exact equality, greedy in input
// order) is dropped and linked to that partner.
Spectrum reduce_conjugate_pairs(std::span<const PlanePoint> raw);

// Collapses bitwise-equal points onto one representative via a lexicographic sort.
Spectrum deduplicate(const Spectrum& s);

// Displaces each coordinate by an independent uniform draw in [-magnitude, magnitude].
Spectrum perturb(const Spectrum& s, double magnitude, std::uint64_t seed);

// Maps labels over s.points to labels over raw positions, renumbered 1..k by
// first appearance in raw order. Throws std::invalid_argument on size mismatch.
Clustering broadcast_labels(const Clustering& c, const Spectrum& s);

// Uniform draw in [0, 1) from the top 53 bits of a 64-bit word.
double unit_interval(std::uint64_t bits) noexcept;

// CLI default perturbation: max |coordinate| times sqrt(binary64 epsilon) = 2^-26.
double default_perturbation(std::span<const PlanePoint> raw) noexcept;

}  // namespace deltaclust
