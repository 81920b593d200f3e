#include "deltaclust/delaunay.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>

namespace deltaclust {

namespace {

constexpr int next(int i) noexcept { return i == 2 ? 0 : i + 1; }
constexpr int prev(int i) noexcept { return i == 0 ? 2 : i - 1; }

bool lex_less(const PlanePoint& a, const PlanePoint& b) noexcept {
  return a.re < b.re || (a.re == b.re && a.im < b.im);
}

std::uint64_t hilbert_index(std::uint32_t x, std::uint32_t y) noexcept {
  constexpr std::uint32_t side = 1u << 16;
  std::uint64_t d = 0;
  for (std::uint32_t s = side / 2; s > 0; s /= 2) {
    const std::uint32_t rx = (x & s) ? 1 : 0;
    const std::uint32_t ry = (y & s) ? 1 : 0;
    d += static_cast<std::uint64_t>(s) * s * ((3 * rx) ^ ry);
    if (ry == 0) {
      if (rx == 1) {
        x = side - 1 - x;
        y = side - 1 - y;
      }
      std::swap(x, y);
    }
  }
  return d;
}

}  // namespace

std::vector<std::uint32_t> biased_random_order(std::span<const PlanePoint> points,
                                               std::uint64_t seed) {
  const std::size_t n = points.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng() % i]);
  if (n == 0) return order;

  double min_x = points[0].re, max_x = points[0].re;
  double min_y = points[0].im, max_y = points[0].im;
  for (const auto& p : points) {
    min_x = std::min(min_x, p.re);
    max_x = std::max(max_x, p.re);
    min_y = std::min(min_y, p.im);
    max_y = std::max(max_y, p.im);
  }
  auto cell = [](double v, double lo, double hi) -> std::uint32_t {
    if (!(hi > lo)) return 0;
    const double t = (v - lo) / (hi - lo);
    return static_cast<std::uint32_t>(std::clamp(t, 0.0, 1.0) * 65535.0);
  };
  std::vector<std::uint64_t> key(n);
  for (std::size_t i = 0; i < n; ++i) {
    key[i] = hilbert_index(cell(points[i].re, min_x, max_x), cell(points[i].im, min_y, max_y));
  }

  // Rounds [n/2, n), [n/4, n/2), ... down to a small first round.
  std::size_t end = n;
  while (end > 0) {
    const std::size_t begin = end > 64 ? end / 2 : 0;
    std::stable_sort(order.begin() + static_cast<std::ptrdiff_t>(begin),
                     order.begin() + static_cast<std::ptrdiff_t>(end),
                     [&](std::uint32_t a, std::uint32_t b) { return key[a] < key[b]; });
    end = begin;
  }
  return order;
}

bool Triangulation::is_infinite(std::uint32_t f) const noexcept {
  const auto& v = faces_[f].v;
  return v[0] == kInfinite || v[1] == kInfinite || v[2] == kInfinite;
}

int Triangulation::slot_of(const Face& f, std::uint32_t vertex) noexcept {
  for (int i = 0; i < 3; ++i) {
    if (f.v[i] == vertex) return i;
  }
  return -1;
}

int Triangulation::neighbor_slot(const Face& f, std::uint32_t face) noexcept {
  for (int i = 0; i < 3; ++i) {
    if (f.n[i] == face) return i;
  }
  return -1;
}

std::uint32_t Triangulation::add_face(std::array<std::uint32_t, 3> v) {
  faces_.push_back({v, {kInfinite, kInfinite, kInfinite}});
  return static_cast<std::uint32_t>(faces_.size() - 1);
}

void Triangulation::attach(std::uint32_t vertex, std::uint32_t face) noexcept {
  if (vertex == kInfinite) {
    infinite_face_ = face;
  } else {
    vertex_face_[vertex] = face;
  }
}

std::uint32_t Triangulation::add_vertex(const PlanePoint& p, std::uint32_t input) {
  points_.push_back(p);
  vertex_input_.push_back(input);
  vertex_face_.push_back(kInfinite);
  const auto v = static_cast<std::uint32_t>(points_.size() - 1);
  vertex_of_input_[input] = v;
  return v;
}

void Triangulation::link_all_faces() {
  std::unordered_map<std::uint64_t, std::pair<std::uint32_t, int>> directed;
  directed.reserve(faces_.size() * 3);
  auto key = [](std::uint32_t a, std::uint32_t b) {
    return (static_cast<std::uint64_t>(a) << 32) | b;
  };
  for (std::uint32_t f = 0; f < faces_.size(); ++f) {
    for (int e = 0; e < 3; ++e) {
      directed[key(faces_[f].v[next(e)], faces_[f].v[prev(e)])] = {f, e};
    }
  }
  for (std::uint32_t f = 0; f < faces_.size(); ++f) {
    for (int e = 0; e < 3; ++e) {
      const auto it = directed.find(key(faces_[f].v[prev(e)], faces_[f].v[next(e)]));
      if (it == directed.end()) throw std::logic_error("triangulation: unmatched edge");
      faces_[f].n[e] = it->second.first;
    }
    for (int e = 0; e < 3; ++e) attach(faces_[f].v[e], f);
  }
}

std::vector<std::uint32_t> Triangulation::sorted_unique_line(std::vector<std::uint32_t> inputs,
                                                             DuplicatePolicy duplicates) {
  std::sort(inputs.begin(), inputs.end(), [&](std::uint32_t a, std::uint32_t b) {
    const auto& pa = input_[a];
    const auto& pb = input_[b];
    if (lex_less(pa, pb)) return true;
    if (lex_less(pb, pa)) return false;
    return a < b;
  });
  std::vector<std::uint32_t> chain;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    if (i > 0 && input_[inputs[i]] == input_[inputs[i - 1]]) {
      if (duplicates == DuplicatePolicy::reject) {
        throw std::invalid_argument("duplicate points: inputs " + std::to_string(inputs[i - 1]) +
                                    " and " + std::to_string(inputs[i]) + " coincide");
      }
      vertex_of_input_[inputs[i]] = chain.back();
      continue;
    }
    chain.push_back(add_vertex(input_[inputs[i]], inputs[i]));
  }
  return chain;
}

void Triangulation::finish_collinear(std::vector<std::uint32_t> inputs,
                                     DuplicatePolicy duplicates) {
  path_ = sorted_unique_line(std::move(inputs), duplicates);
  dimension_ = path_.size() == 1 ? 0 : 1;
}

void Triangulation::start_from_collinear(std::vector<std::uint32_t> inputs, std::uint32_t apex,
                                         DuplicatePolicy duplicates) {
  const auto chain = sorted_unique_line(std::move(inputs), duplicates);
  const std::uint32_t q = add_vertex(input_[apex], apex);
  const bool left = predicates_.orient2d(points_[chain[0]], points_[chain[1]], points_[q]) ==
                    PredicateSign::positive;
  const std::size_t k = chain.size();
  for (std::size_t i = 0; i + 1 < k; ++i) {
    const auto a = chain[i], b = chain[i + 1];
    if (left) {
      add_face({a, b, q});
      add_face({b, a, kInfinite});
    } else {
      add_face({b, a, q});
      add_face({a, b, kInfinite});
    }
  }
  if (left) {
    add_face({q, chain[k - 1], kInfinite});
    add_face({chain[0], q, kInfinite});
  } else {
    add_face({q, chain[0], kInfinite});
    add_face({chain[k - 1], q, kInfinite});
  }
  link_all_faces();
  dimension_ = 2;

  // Lawson flips from the fan to a Delaunay triangulation.
  std::vector<std::pair<std::uint32_t, int>> stack;
  for (std::uint32_t f = 0; f < faces_.size(); ++f) {
    if (is_infinite(f)) continue;
    for (int e = 0; e < 3; ++e) stack.emplace_back(f, e);
  }
  while (!stack.empty()) {
    const auto [f, e] = stack.back();
    stack.pop_back();
    if (is_infinite(f)) continue;
    const std::uint32_t g = faces_[f].n[e];
    if (is_infinite(g)) continue;
    const Face& G = faces_[g];
    const int j = neighbor_slot(G, f);
    const Face& F = faces_[f];
    if (predicates_.incircle_unchecked(points_[F.v[0]], points_[F.v[1]], points_[F.v[2]],
                                       points_[G.v[j]]) != PredicateSign::positive) {
      continue;
    }
    flip(f, e);
    for (const auto face : {f, g}) {
      for (int t = 0; t < 3; ++t) stack.emplace_back(face, t);
    }
  }
  flip_stack_.clear();
  last_vertex_ = q;
}

bool Triangulation::strictly_between(const PlanePoint& a, const PlanePoint& b,
                                     const PlanePoint& p) const {
  const PlanePoint& lo = lex_less(a, b) ? a : b;
  const PlanePoint& hi = lex_less(a, b) ? b : a;
  return lex_less(lo, p) && lex_less(p, hi);
}

Triangulation::Location Triangulation::locate(const PlanePoint& p, std::uint32_t f) {
  int rotation = 0;
  for (;;) {
    const Face& F = faces_[f];
    const int k = slot_of(F, kInfinite);
    if (k >= 0) {
      const std::uint32_t u = F.v[next(k)];
      const std::uint32_t w = F.v[prev(k)];
      const auto o = predicates_.orient2d(points_[u], points_[w], p);
      if (o == PredicateSign::positive) return {Where::outside, f, k};
      if (o == PredicateSign::negative) {
        f = F.n[k];
        continue;
      }
      if (p == points_[u]) return {Where::vertex, f, next(k)};
      if (p == points_[w]) return {Where::vertex, f, prev(k)};
      if (strictly_between(points_[u], points_[w], p)) return {Where::edge, f, k};
      // On the hull line but past one end: step along the hull towards it.
      const bool past_w = lex_less(points_[u], points_[w]) ? lex_less(points_[w], p)
                                                            : lex_less(p, points_[w]);
      f = past_w ? F.n[next(k)] : F.n[prev(k)];
      continue;
    }

    int zeros[3];
    int zero_count = 0;
    bool moved = false;
    rotation = next(rotation);
    for (int t = 0; t < 3; ++t) {
      const int e = (rotation + t) % 3;
      const auto o = predicates_.orient2d(points_[F.v[next(e)]], points_[F.v[prev(e)]], p);
      if (o == PredicateSign::negative) {
        f = F.n[e];
        moved = true;
        break;
      }
      if (o == PredicateSign::zero) zeros[zero_count++] = e;
    }
    if (moved) continue;
    if (zero_count == 0) return {Where::face, f, -1};
    if (zero_count == 1) return {Where::edge, f, zeros[0]};
    return {Where::vertex, f, 3 - zeros[0] - zeros[1]};
  }
}

void Triangulation::split_face(std::uint32_t f, std::uint32_t vertex) {
  const Face old = faces_[f];
  const auto [a, b, c] = old.v;
  const auto [na, nb, nc] = old.n;
  const std::uint32_t f1 = add_face({vertex, c, a});
  const std::uint32_t f2 = add_face({vertex, a, b});
  faces_[f] = {{vertex, b, c}, {na, f1, f2}};
  faces_[f1].n = {nb, f2, f};
  faces_[f2].n = {nc, f, f1};
  faces_[nb].n[neighbor_slot(faces_[nb], f)] = f1;
  faces_[nc].n[neighbor_slot(faces_[nc], f)] = f2;

  vertex_face_[vertex] = f;
  attach(a, f1);
  attach(b, f);
  attach(c, f);
  flip_stack_.emplace_back(f, 0);
  flip_stack_.emplace_back(f1, 0);
  flip_stack_.emplace_back(f2, 0);
}

void Triangulation::split_edge(std::uint32_t f, int edge, std::uint32_t vertex) {
  const Face old_f = faces_[f];
  const std::uint32_t a = old_f.v[edge];
  const std::uint32_t b = old_f.v[next(edge)];
  const std::uint32_t c = old_f.v[prev(edge)];
  const std::uint32_t f_opp_b = old_f.n[next(edge)];
  const std::uint32_t f_opp_c = old_f.n[prev(edge)];
  const std::uint32_t g = old_f.n[edge];
  const Face old_g = faces_[g];
  const int j = neighbor_slot(old_g, f);
  const std::uint32_t d = old_g.v[j];
  const std::uint32_t g_opp_c = old_g.n[next(j)];
  const std::uint32_t g_opp_b = old_g.n[prev(j)];

  const std::uint32_t f2 = add_face({a, vertex, c});
  const std::uint32_t g2 = add_face({d, vertex, b});
  faces_[f] = {{a, b, vertex}, {g2, f2, f_opp_c}};
  faces_[f2].n = {g, f_opp_b, f};
  faces_[g] = {{d, c, vertex}, {f2, g2, g_opp_b}};
  faces_[g2].n = {f, g_opp_c, g};
  faces_[f_opp_b].n[neighbor_slot(faces_[f_opp_b], f)] = f2;
  faces_[g_opp_c].n[neighbor_slot(faces_[g_opp_c], g)] = g2;

  vertex_face_[vertex] = f;
  attach(a, f);
  attach(b, f);
  attach(c, f2);
  attach(d, g);
  flip_stack_.emplace_back(f, 2);
  flip_stack_.emplace_back(f2, 1);
  flip_stack_.emplace_back(g, 2);
  flip_stack_.emplace_back(g2, 1);
}

bool Triangulation::in_conflict(std::uint32_t face, const PlanePoint& p) {
  const Face& G = faces_[face];
  const int k = slot_of(G, kInfinite);
  if (k < 0) {
    return predicates_.incircle_unchecked(points_[G.v[0]], points_[G.v[1]], points_[G.v[2]], p) ==
           PredicateSign::positive;
  }
  return predicates_.orient2d(points_[G.v[next(k)]], points_[G.v[prev(k)]], p) ==
         PredicateSign::positive;
}

void Triangulation::flip(std::uint32_t f, int slot) {
  const Face old_f = faces_[f];
  const std::uint32_t p = old_f.v[slot];
  const std::uint32_t b = old_f.v[next(slot)];
  const std::uint32_t c = old_f.v[prev(slot)];
  const std::uint32_t across_cp = old_f.n[next(slot)];
  const std::uint32_t across_pb = old_f.n[prev(slot)];
  const std::uint32_t g = old_f.n[slot];
  const Face old_g = faces_[g];
  const int j = neighbor_slot(old_g, f);
  const std::uint32_t d = old_g.v[j];
  const std::uint32_t across_bd = old_g.n[next(j)];
  const std::uint32_t across_dc = old_g.n[prev(j)];

  faces_[f] = {{p, b, d}, {across_bd, g, across_pb}};
  faces_[g] = {{p, d, c}, {across_dc, across_cp, f}};
  faces_[across_bd].n[neighbor_slot(faces_[across_bd], g)] = f;
  faces_[across_cp].n[neighbor_slot(faces_[across_cp], f)] = g;

  attach(p, f);
  attach(b, f);
  attach(d, f);
  attach(c, g);
  flip_stack_.emplace_back(f, 0);
  flip_stack_.emplace_back(g, 0);
}

void Triangulation::legalize(std::uint32_t vertex) {
  const PlanePoint p = points_[vertex];
  while (!flip_stack_.empty()) {
    auto [f, slot] = flip_stack_.back();
    flip_stack_.pop_back();
    if (faces_[f].v[slot] != vertex) {
      slot = slot_of(faces_[f], vertex);
      if (slot < 0) continue;
    }
    if (in_conflict(faces_[f].n[slot], p)) flip(f, slot);
  }
}

std::vector<std::uint32_t> Triangulation::star(std::uint32_t vertex) const {
  std::vector<std::uint32_t> faces;
  const std::uint32_t start = vertex == kInfinite ? infinite_face_ : vertex_face_[vertex];
  std::uint32_t f = start;
  do {
    faces.push_back(f);
    const Face& F = faces_[f];
    f = F.n[next(slot_of(F, vertex))];
  } while (f != start);
  return faces;
}

void Triangulation::merge_duplicate(std::uint32_t input, std::uint32_t vertex,
                                    const PlanePoint& p) {
  // The point sits on the closed circumdisk of every face around the vertex;
  // walk that star and check the point against each link edge before
  // resolving the insert onto the vertex.
  const std::uint32_t start = vertex_face_[vertex];
  std::uint32_t f = start;
  do {
    const Face& F = faces_[f];
    const int i = slot_of(F, vertex);
    const std::uint32_t a = F.v[next(i)];
    const std::uint32_t b = F.v[prev(i)];
    if (a != kInfinite && b != kInfinite &&
        predicates_.orient2d(points_[a], points_[b], p) != PredicateSign::positive) {
      throw std::logic_error("triangulation: coincident point outside its vertex star");
    }
    f = F.n[next(i)];
  } while (f != start);
  vertex_of_input_[input] = vertex;
}

void Triangulation::insert(std::uint32_t input, DuplicatePolicy duplicates) {
  const PlanePoint& p = input_[input];
  const Location loc = locate(p, vertex_face_[last_vertex_]);
  if (loc.where == Where::vertex) {
    const std::uint32_t existing = faces_[loc.face].v[loc.index];
    if (duplicates == DuplicatePolicy::reject) {
      throw std::invalid_argument("duplicate points: inputs " +
                                  std::to_string(vertex_input_[existing]) + " and " +
                                  std::to_string(input) + " coincide");
    }
    merge_duplicate(input, existing, p);
    last_vertex_ = existing;
    return;
  }
  const std::uint32_t v = add_vertex(p, input);
  if (loc.where == Where::edge) {
    split_edge(loc.face, loc.index, v);
  } else {
    split_face(loc.face, v);
  }
  legalize(v);
  last_vertex_ = v;
}

Triangulation Triangulation::build(std::span<const PlanePoint> points,
                                   const BuildOptions& options) {
  if (points.empty()) throw std::invalid_argument("cannot triangulate an empty point set");
  if (points.size() >= kInfinite) throw std::invalid_argument("too many points");
  for (const auto& p : points) make_point(p.re, p.im);

  Triangulation t(options.mode);
  t.input_ = points;
  t.vertex_of_input_.assign(points.size(), kInfinite);
  t.order_ = biased_random_order(points, options.seed);
  const auto& order = t.order_;

  std::vector<std::uint32_t> line;
  std::optional<std::uint32_t> second;
  std::size_t pos = 0;
  for (; pos < order.size(); ++pos) {
    if ((pos & 1023) == 0) poll(options.deadline);
    const std::uint32_t i = order[pos];
    if (line.empty()) {
      line.push_back(i);
      continue;
    }
    const PlanePoint& first = points[line.front()];
    if (!second) {
      if (!(points[i] == first)) second = i;
      line.push_back(i);
      continue;
    }
    if (t.predicates_.orient2d(first, points[*second], points[i]) == PredicateSign::zero) {
      line.push_back(i);
      continue;
    }
    t.start_from_collinear(std::move(line), i, options.duplicates);
    ++pos;
    break;
  }
  if (t.dimension_ < 2) {
    t.finish_collinear(std::move(line), options.duplicates);
    return t;
  }
  if (options.check_each_insertion && !t.is_locally_delaunay()) {
    throw std::logic_error("triangulation: Delaunay property lost after the first triangle");
  }
  for (; pos < order.size(); ++pos) {
    if ((pos & 1023) == 0) poll(options.deadline);
    t.insert(order[pos], options.duplicates);
    if (options.check_each_insertion && !t.is_locally_delaunay()) {
      throw std::logic_error("triangulation: Delaunay property lost at insertion " +
                             std::to_string(pos));
    }
  }
  t.input_ = {};
  return t;
}

std::size_t Triangulation::num_finite_faces() const {
  if (dimension_ < 2) return 0;
  std::size_t count = 0;
  for (std::uint32_t f = 0; f < faces_.size(); ++f) count += is_infinite(f) ? 0 : 1;
  return count;
}

std::vector<DelaunayEdge> Triangulation::finite_edges() const {
  std::vector<DelaunayEdge> edges;
  auto emit = [&](std::uint32_t x, std::uint32_t y) {
    std::uint32_t a = vertex_input_[x];
    std::uint32_t b = vertex_input_[y];
    if (a > b) std::swap(a, b);
    edges.push_back({a, b, squared_distance(points_[x], points_[y])});
  };
  if (dimension_ == 1) {
    edges.reserve(path_.size() - 1);
    for (std::size_t i = 0; i + 1 < path_.size(); ++i) emit(path_[i], path_[i + 1]);
    return edges;
  }
  if (dimension_ < 2) return edges;
  edges.reserve(3 * points_.size());
  for (std::uint32_t f = 0; f < faces_.size(); ++f) {
    const Face& F = faces_[f];
    for (int e = 0; e < 3; ++e) {
      const auto x = F.v[next(e)];
      const auto y = F.v[prev(e)];
      if (x == kInfinite || y == kInfinite || F.n[e] < f) continue;
      emit(x, y);
    }
  }
  return edges;
}

std::vector<std::array<std::uint32_t, 3>> Triangulation::finite_faces() const {
  std::vector<std::array<std::uint32_t, 3>> out;
  if (dimension_ < 2) return out;
  for (std::uint32_t f = 0; f < faces_.size(); ++f) {
    if (is_infinite(f)) continue;
    const auto& v = faces_[f].v;
    out.push_back({vertex_input_[v[0]], vertex_input_[v[1]], vertex_input_[v[2]]});
  }
  return out;
}

std::size_t Triangulation::vertex_degree(std::size_t input) const {
  const std::uint32_t v = vertex_of(input);
  if (dimension_ == 0) return 0;
  if (dimension_ == 1) {
    const auto it = std::find(path_.begin(), path_.end(), v);
    const bool at_end = it == path_.begin() || it + 1 == path_.end();
    return at_end ? 1 : 2;
  }
  std::size_t degree = 0;
  for (const auto f : star(v)) {
    const Face& F = faces_[f];
    degree += F.v[next(slot_of(F, v))] != kInfinite ? 1 : 0;
  }
  return degree;
}

bool Triangulation::check_structure() const {
  if (dimension_ < 2) return true;
  for (std::uint32_t f = 0; f < faces_.size(); ++f) {
    const Face& F = faces_[f];
    for (int e = 0; e < 3; ++e) {
      const std::uint32_t g = F.n[e];
      if (g >= faces_.size() || g == f) return false;
      const Face& G = faces_[g];
      const int j = neighbor_slot(G, f);
      if (j < 0 || G.v[next(j)] != F.v[prev(e)] || G.v[prev(j)] != F.v[next(e)]) return false;
    }
    if (!is_infinite(f) &&
        orient2d_exact(points_[F.v[0]], points_[F.v[1]], points_[F.v[2]]) !=
            PredicateSign::positive) {
      return false;
    }
  }
  for (std::uint32_t v = 0; v < points_.size(); ++v) {
    if (slot_of(faces_[vertex_face_[v]], v) < 0) return false;
  }
  return slot_of(faces_[infinite_face_], kInfinite) >= 0;
}

bool Triangulation::is_delaunay_exhaustive() const {
  if (dimension_ < 2) return true;
  for (std::uint32_t f = 0; f < faces_.size(); ++f) {
    if (is_infinite(f)) continue;
    const auto& v = faces_[f].v;
    for (std::uint32_t x = 0; x < points_.size(); ++x) {
      if (x == v[0] || x == v[1] || x == v[2]) continue;
      if (incircle_exact(points_[v[0]], points_[v[1]], points_[v[2]], points_[x]) ==
          PredicateSign::positive) {
        return false;
      }
    }
  }
  return true;
}

bool Triangulation::is_locally_delaunay() const {
  if (dimension_ < 2) return true;
  for (std::uint32_t f = 0; f < faces_.size(); ++f) {
    const Face& F = faces_[f];
    for (int e = 0; e < 3; ++e) {
      if (F.v[e] == kInfinite) continue;
      const PlanePoint& p = points_[F.v[e]];
      const Face& G = faces_[F.n[e]];
      const int k = slot_of(G, kInfinite);
      const bool conflict =
          k < 0 ? incircle_exact(points_[G.v[0]], points_[G.v[1]], points_[G.v[2]], p) ==
                      PredicateSign::positive
                : orient2d_exact(points_[G.v[next(k)]], points_[G.v[prev(k)]], p) ==
                      PredicateSign::positive;
      if (conflict) return false;
    }
  }
  return true;
}

void Triangulation::write_edge_list(std::ostream& out) const {
  for (const auto& e : finite_edges()) out << e.a << ' ' << e.b << '\n';
}

Triangulation build(const Spectrum& s, std::uint64_t seed, ArithmeticMode mode) {
  BuildOptions options;
  options.seed = seed;
  options.mode = mode;
  return Triangulation::build(s.points, options);
}

std::vector<DelaunayEdge> finite_edges(const Triangulation& t) { return t.finite_edges(); }

std::size_t vertex_degree(const Triangulation& t, std::size_t input) {
  return t.vertex_degree(input);
}

}  // namespace deltaclust
