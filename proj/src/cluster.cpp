#include "deltaclust/cluster.hpp"

#include <stdexcept>

#include "deltaclust/delaunay_cluster.hpp"
#include "deltaclust/naive_cluster.hpp"
#include "deltaclust/real_cluster.hpp"

namespace deltaclust {

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::naive: return "naive";
    case Algorithm::real: return "real";
    case Algorithm::delaunay: return "delaunay";
  }
  return "?";
}

Algorithm parse_algorithm(const std::string& s) {
  if (s == "naive") return Algorithm::naive;
  if (s == "real") return Algorithm::real;
  if (s == "delaunay") return Algorithm::delaunay;
  throw std::invalid_argument("unknown algorithm '" + s + "'");
}

Clustering cluster(const Spectrum& s, double delta, const ClusterOptions& options) {
  if (options.algorithm == Algorithm::delaunay) {
    DelaunayClusterOptions d;
    d.seed = options.seed;
    d.dsu = options.dsu;
    d.mode = options.mode;
    d.dedup = options.dedup;
    d.perturb = options.perturb;
    d.merge_duplicates = options.merge_duplicates;
    d.deadline = options.deadline;
    return cluster_delaunay(s, delta, d);
  }

  Spectrum work = options.perturb ? perturb(s, *options.perturb, options.seed) : s;
  if (options.dedup) work = deduplicate(work);
  if (options.algorithm == Algorithm::real) return cluster_real(work, delta);

  NaiveOptions naive;
  naive.dsu = options.dsu;
  naive.deadline = options.deadline;
  return broadcast_labels(cluster_points_naive(work.points, delta, naive).clustering, work);
}

}  // namespace deltaclust
