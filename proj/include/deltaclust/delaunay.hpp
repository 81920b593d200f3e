#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "deltaclust/predicates.hpp"
#include "deltaclust/spectrum.hpp"
#include "deltaclust/types.hpp"

namespace deltaclust {

// What build() does with a point equal to an already inserted one.
enum class DuplicatePolicy {
  reject,  // throw std::invalid_argument
  // Resolve the insert onto the existing vertex. Like any insertion it first
  // collects the faces whose closed circumdisk holds the point, which for a
  // coincident point is the whole star of the vertex: cost Theta(degree).
  merge,
};

struct BuildOptions {
  std::uint64_t seed = 0;
  ArithmeticMode mode = ArithmeticMode::filtered;
  DuplicatePolicy duplicates = DuplicatePolicy::reject;
  // Verify the empty-circumdisk property over all edges after every insertion.
  bool check_each_insertion = false;
  std::optional<Deadline> deadline;
};

// Undirected finite edge between two input points (a < b).
struct DelaunayEdge {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  double squared_length = 0.0;
};

// Incremental 2-D Delaunay triangulation.
//
// Points are inserted in a biased randomized order: a seeded shuffle split
// into rounds of doubling size, each round sorted along a Hilbert curve.
// Locating a point walks from a face of the last inserted vertex. A point
// inside a face or on an edge splits it; edges are then flipped until the
// empty-circumdisk property holds again. An incircle result of zero keeps the
// existing edge, so cocircular sets get one valid completion.
//
// Convex-hull edges border faces that use a single symbolic infinite vertex.
// All faces, finite or not, list their vertices counterclockwise; for an
// infinite face (u, v, inf) the region outside the hull lies to the left of
// u -> v. A point outside the hull is inserted by splitting such a face, and
// the same flip loop restores convexity of the hull.
//
// While every point seen so far is collinear the structure stays in
// dimension 0 or 1 (a path through the points in sorted order); the first
// off-line point triangulates the path as a fan and flips it to Delaunay.
class Triangulation {
 public:
  static constexpr std::uint32_t kInfinite = 0xffffffffu;

  static Triangulation build(std::span<const PlanePoint> points, const BuildOptions& options = {});

  int dimension() const noexcept { return dimension_; }
  std::size_t num_input_points() const noexcept { return vertex_of_input_.size(); }
  std::size_t num_vertices() const noexcept { return points_.size(); }
  std::size_t num_finite_faces() const;

  // Vertex carrying input point i (shared by coincident merged inputs).
  std::uint32_t vertex_of(std::size_t input) const { return vertex_of_input_.at(input); }
  // First input point that created vertex v.
  std::uint32_t input_of(std::uint32_t vertex) const { return vertex_input_.at(vertex); }
  const PlanePoint& point(std::uint32_t vertex) const { return points_.at(vertex); }

  // Each undirected finite edge once, endpoints as input indices.
  std::vector<DelaunayEdge> finite_edges() const;
  // Finite faces as counterclockwise triples of input indices.
  std::vector<std::array<std::uint32_t, 3>> finite_faces() const;
  // Number of finite edges at the vertex carrying input point i.
  std::size_t vertex_degree(std::size_t input) const;

  // Adjacency symmetry, counterclockwise finite faces, vertex-face links.
  bool check_structure() const;
  // No finite vertex strictly inside any finite face's circumcircle, by
  // testing every face against every vertex with exact predicates.
  bool is_delaunay_exhaustive() const;
  // Every edge locally Delaunay (equivalent to the global property).
  bool is_locally_delaunay() const;

  const PredicateStats& predicate_stats() const noexcept { return predicates_.stats(); }
  const std::vector<std::uint32_t>& insertion_order() const noexcept { return order_; }

  // One "i j" line per finite edge, input indices.
  void write_edge_list(std::ostream& out) const;

 private:
  struct Face {
    std::array<std::uint32_t, 3> v;
    std::array<std::uint32_t, 3> n;
  };

  enum class Where { face, edge, vertex, outside };
  struct Location {
    Where where;
    std::uint32_t face;
    int index;  // edge index for Where::edge, vertex slot for Where::vertex
  };

  explicit Triangulation(ArithmeticMode mode) : predicates_(mode) {}

  bool is_infinite(std::uint32_t f) const noexcept;
  static int slot_of(const Face& f, std::uint32_t vertex) noexcept;
  static int neighbor_slot(const Face& f, std::uint32_t face) noexcept;
  std::uint32_t add_face(std::array<std::uint32_t, 3> v);
  void attach(std::uint32_t vertex, std::uint32_t face) noexcept;
  void link_all_faces();

  std::uint32_t add_vertex(const PlanePoint& p, std::uint32_t input);
  void start_from_collinear(std::vector<std::uint32_t> inputs, std::uint32_t apex,
                            DuplicatePolicy duplicates);
  void finish_collinear(std::vector<std::uint32_t> inputs, DuplicatePolicy duplicates);
  std::vector<std::uint32_t> sorted_unique_line(std::vector<std::uint32_t> inputs,
                                                DuplicatePolicy duplicates);

  void insert(std::uint32_t input, DuplicatePolicy duplicates);
  Location locate(const PlanePoint& p, std::uint32_t start);
  bool strictly_between(const PlanePoint& a, const PlanePoint& b, const PlanePoint& p) const;
  void split_face(std::uint32_t f, std::uint32_t vertex);
  void split_edge(std::uint32_t f, int edge, std::uint32_t vertex);
  void legalize(std::uint32_t vertex);
  bool in_conflict(std::uint32_t face, const PlanePoint& p);
  void flip(std::uint32_t f, int slot);
  void merge_duplicate(std::uint32_t input, std::uint32_t vertex, const PlanePoint& p);

  std::vector<std::uint32_t> star(std::uint32_t vertex) const;

  Predicates predicates_;
  int dimension_ = -1;
  std::span<const PlanePoint> input_;
  std::vector<PlanePoint> points_;
  std::vector<std::uint32_t> vertex_input_;
  std::vector<std::uint32_t> vertex_face_;
  std::uint32_t infinite_face_ = 0;
  std::vector<std::uint32_t> vertex_of_input_;
  std::vector<Face> faces_;
  // Dimension <= 1: vertices in sorted order along the line.
  std::vector<std::uint32_t> path_;
  std::vector<std::uint32_t> order_;
  std::vector<std::pair<std::uint32_t, int>> flip_stack_;
  std::uint32_t last_vertex_ = 0;
};

// Biased randomized insertion order: seeded shuffle, rounds of doubling
// size, Hilbert-curve order inside each round.
std::vector<std::uint32_t> biased_random_order(std::span<const PlanePoint> points,
                                               std::uint64_t seed);

Triangulation build(const Spectrum& s, std::uint64_t seed,
                    ArithmeticMode mode = ArithmeticMode::filtered);
std::vector<DelaunayEdge> finite_edges(const Triangulation& t);
std::size_t vertex_degree(const Triangulation& t, std::size_t input);

}  // namespace deltaclust
