#pragma once

#include <cstddef>
#include <span>
#include <string>

#include "deltaclust/spectrum.hpp"
#include "deltaclust/types.hpp"

namespace deltaclust {

enum class Criterion {
  none,
  // Two points in different clusters are within delta of each other.
  separation_between,
  // A point of a non-singleton cluster has no other member within delta.
  separation_within,
};

struct AdmissibilityVerdict {
  bool admissible = true;
  Criterion failed = Criterion::none;
  std::size_t first = 0;   // offending point
  std::size_t second = 0;  // its partner for separation_between
  double distance = 0.0;   // |first - second| for separation_between

  std::string describe() const;
};

// Checks both delta-admissibility criteria in O(n^2). The labels of c are
// over the given points; throws std::invalid_argument on a size mismatch.
AdmissibilityVerdict is_admissible(std::span<const PlanePoint> points, double delta,
                                   const Clustering& c);
// Spectrum overloads work on s.points, i.e. after any reduction, not on the
// raw input positions.
AdmissibilityVerdict is_admissible(const Spectrum& s, double delta, const Clustering& c);

// Connected components of the delta-closeness graph by breadth-first search
// over its explicit edge list. Test oracle; shares nothing with the DSUs.
Clustering oracle_components(std::span<const PlanePoint> points, double delta);
Clustering oracle_components(const Spectrum& s, double delta);

// True iff every connected component lies inside a single cluster of c.
bool components_refine_admissible(std::span<const PlanePoint> points, double delta,
                                  const Clustering& c);
bool components_refine_admissible(const Spectrum& s, double delta, const Clustering& c);

}  // namespace deltaclust
