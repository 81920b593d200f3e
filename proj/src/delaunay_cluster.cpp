#include "deltaclust/delaunay_cluster.hpp"

#include <stdexcept>

#include "deltaclust/dsu.hpp"

namespace deltaclust {

DelaunayClusterResult cluster_delaunay_detailed(const Spectrum& s, double delta,
                                                const DelaunayClusterOptions& options) {
  require_positive_delta(delta);
  if (s.size() == 0) throw std::invalid_argument("cannot cluster an empty spectrum");

  Spectrum work = options.perturb ? perturb(s, *options.perturb, options.seed) : s;
  if (options.dedup) work = deduplicate(work);

  BuildOptions build_options;
  build_options.seed = options.seed;
  build_options.mode = options.mode;
  build_options.duplicates =
      options.merge_duplicates ? DuplicatePolicy::merge : DuplicatePolicy::reject;
  build_options.deadline = options.deadline;
  const Triangulation t = Triangulation::build(work.points, build_options);

  const double delta_sq = delta * delta;
  const auto edges = t.finite_edges();
  DelaunayClusterResult result;
  result.triangulation_edges = edges.size();
  result.predicate_stats = t.predicate_stats();

  const Clustering over_points = with_dsu(options.dsu, work.size(), [&](auto& dsu) {
    for (const auto& e : edges) {
      if (e.squared_length <= delta_sq) {
        dsu.unite(e.a, e.b);
        ++result.kept_edges;
      }
    }
    // Inputs merged into another point's vertex sit at distance zero from it.
    for (std::size_t i = 0; i < work.size(); ++i) {
      const std::uint32_t owner = t.input_of(t.vertex_of(i));
      if (owner != i) dsu.unite(i, owner);
    }
    return dsu.partition();
  });
  result.clustering = broadcast_labels(over_points, work);
  return result;
}

Clustering cluster_delaunay(const Spectrum& s, double delta,
                            const DelaunayClusterOptions& options) {
  return cluster_delaunay_detailed(s, delta, options).clustering;
}

std::size_t pruned_edge_count(const Spectrum& s, double delta, std::uint64_t seed) {
  DelaunayClusterOptions options;
  options.seed = seed;
  return cluster_delaunay_detailed(s, delta, options).kept_edges;
}

}  // namespace deltaclust
