#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "deltaclust/cluster.hpp"
#include "deltaclust/delaunay.hpp"
#include "deltaclust/genbench.hpp"
#include "deltaclust/predicates.hpp"
#include "deltaclust/spectrum.hpp"
#include "deltaclust/validate.hpp"
#include "deltaclust/version.hpp"

namespace py = pybind11;
namespace dc = deltaclust;

namespace {

using Points = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<dc::PlanePoint> to_points(const Points& a) {
  if (a.ndim() != 2 || a.shape(1) != 2) {
    throw std::invalid_argument("points must be an (n, 2) array of (re, im)");
  }
  auto r = a.unchecked<2>();
  std::vector<dc::PlanePoint> out(static_cast<std::size_t>(a.shape(0)));
  for (py::ssize_t i = 0; i < a.shape(0); ++i) out[i] = dc::make_point(r(i, 0), r(i, 1));
  return out;
}

py::array_t<double> from_points(const std::vector<dc::PlanePoint>& pts) {
  py::array_t<double> out({static_cast<py::ssize_t>(pts.size()), py::ssize_t{2}});
  auto w = out.mutable_unchecked<2>();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    w(i, 0) = pts[i].re;
    w(i, 1) = pts[i].im;
  }
  return out;
}

py::array_t<std::uint32_t> labels_array(const dc::Clustering& c) {
  return py::array_t<std::uint32_t>(static_cast<py::ssize_t>(c.labels.size()), c.labels.data());
}

dc::Clustering to_clustering(const std::vector<std::uint32_t>& labels) {
  return dc::canonicalize(labels);
}

py::array_t<std::uint32_t> cluster(const Points& points, double delta, const std::string& algorithm,
                                   const std::string& dsu, const std::string& mode, bool dedup,
                                   std::optional<double> perturb, bool merge_duplicates,
                                   bool conjugate_pairs, std::uint64_t seed) {
  const auto raw = to_points(points);
  const auto s = conjugate_pairs ? dc::reduce_conjugate_pairs(raw) : dc::Spectrum::from_points(raw);
  dc::ClusterOptions o;
  o.algorithm = dc::parse_algorithm(algorithm);
  o.dsu = dc::parse_dsu_kind(dsu);
  o.mode = dc::parse_arithmetic_mode(mode);
  o.dedup = dedup;
  o.perturb = perturb;
  o.merge_duplicates = merge_duplicates;
  o.seed = seed;
  return labels_array(dc::cluster(s, delta, o));
}

int sign(dc::PredicateSign s) { return static_cast<int>(s); }

}  // namespace

PYBIND11_MODULE(_deltaclust, m) {
  m.doc() = "Minimal delta-separated clustering of points in the plane";
  m.attr("__version__") = std::string(dc::kVersion);

  py::register_exception<dc::Cancelled>(m, "Cancelled");

  m.def("cluster", &cluster, py::arg("points"), py::arg("delta") = 0.1,
        py::arg("algorithm") = "delaunay", py::arg("dsu") = "forest", py::arg("mode") = "filtered",
        py::arg("dedup") = true, py::arg("perturb") = py::none(),
        py::arg("merge_duplicates") = false, py::arg("conjugate_pairs") = false,
        py::arg("seed") = 0,
        "Cluster labels (1..k, by first appearance) for an (n, 2) array of points.");

  m.def(
      "oracle_components",
      [](const Points& points, double delta) {
        return labels_array(dc::oracle_components(to_points(points), delta));
      },
      py::arg("points"), py::arg("delta"),
      "Connected components of the delta-closeness graph by brute force.");

  m.def(
      "is_admissible",
      [](const Points& points, double delta, const std::vector<std::uint32_t>& labels) {
        const auto v = dc::is_admissible(to_points(points), delta, to_clustering(labels));
        return py::make_tuple(v.admissible, v.describe());
      },
      py::arg("points"), py::arg("delta"), py::arg("labels"));

  m.def(
      "components_refine",
      [](const Points& points, double delta, const std::vector<std::uint32_t>& labels) {
        return dc::components_refine_admissible(to_points(points), delta, to_clustering(labels));
      },
      py::arg("points"), py::arg("delta"), py::arg("labels"));

  m.def(
      "delaunay_edges",
      [](const Points& points, std::uint64_t seed, const std::string& mode) {
        const auto pts = to_points(points);
        dc::BuildOptions o;
        o.seed = seed;
        o.mode = dc::parse_arithmetic_mode(mode);
        const auto edges = dc::Triangulation::build(pts, o).finite_edges();
        py::array_t<std::uint32_t> out({static_cast<py::ssize_t>(edges.size()), py::ssize_t{2}});
        auto w = out.mutable_unchecked<2>();
        for (std::size_t i = 0; i < edges.size(); ++i) {
          w(i, 0) = edges[i].a;
          w(i, 1) = edges[i].b;
        }
        return out;
      },
      py::arg("points"), py::arg("seed") = 0, py::arg("mode") = "filtered",
      "Finite Delaunay edges as an (m, 2) array of point indices.");

  m.def(
      "gen_circles",
      [](std::size_t n, std::size_t circles, double spacing, std::size_t origin_multiplicity,
         std::uint64_t seed) {
        return from_points(dc::gen_circles(n, circles, spacing, origin_multiplicity, seed).points);
      },
      py::arg("n"), py::arg("circles") = 5, py::arg("spacing") = 0.2,
      py::arg("origin_multiplicity") = 1, py::arg("seed") = 0);

  m.def(
      "gen_squares",
      [](std::size_t n, double side, double center_spacing, std::size_t squares,
         std::uint64_t seed) {
        return from_points(dc::gen_squares(n, side, center_spacing, squares, seed).points);
      },
      py::arg("n"), py::arg("side") = 0.04, py::arg("center_spacing") = 0.15,
      py::arg("squares") = 7, py::arg("seed") = 0);

  m.def(
      "orient2d",
      [](std::pair<double, double> a, std::pair<double, double> b, std::pair<double, double> c,
         const std::string& mode) {
        dc::Predicates p(dc::parse_arithmetic_mode(mode));
        return sign(p.orient2d({a.first, a.second}, {b.first, b.second}, {c.first, c.second}));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("mode") = "filtered");

  m.def(
      "incircle",
      [](std::pair<double, double> a, std::pair<double, double> b, std::pair<double, double> c,
         std::pair<double, double> d, const std::string& mode) {
        dc::Predicates p(dc::parse_arithmetic_mode(mode));
        return sign(p.incircle({a.first, a.second}, {b.first, b.second}, {c.first, c.second},
                               {d.first, d.second}));
      },
      py::arg("a"), py::arg("b"), py::arg("c"), py::arg("d"), py::arg("mode") = "filtered");

  m.def("scaling_exponent", &dc::scaling_exponent, py::arg("n1"), py::arg("t1"), py::arg("n2"),
        py::arg("t2"));
  m.def("harmonic_mean", &dc::harmonic_mean, py::arg("n1"), py::arg("n2"));
}
