#include "deltaclust/spectrum.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>
#include <tuple>

namespace deltaclust {

namespace {

std::uint64_t bits_of(double x) noexcept { return std::bit_cast<std::uint64_t>(x); }

// Bit pattern with -0.0 folded onto +0.0: the two compare equal and sit at
// distance zero, so the triangulation would treat them as coincident.
struct BitKey {
  std::uint64_t re;
  std::uint64_t im;
  auto operator<=>(const BitKey&) const = default;
};

BitKey key_of(const PlanePoint& p) noexcept { return {bits_of(p.re + 0.0), bits_of(p.im + 0.0)}; }

}  // namespace

Spectrum Spectrum::from_points(std::span<const PlanePoint> raw) {
  Spectrum s;
  s.points.reserve(raw.size());
  for (const auto& p : raw) s.points.push_back(make_point(p.re, p.im));
  s.origin_index.resize(raw.size());
  std::iota(s.origin_index.begin(), s.origin_index.end(), std::size_t{0});
  s.conjugate_of.assign(raw.size(), std::nullopt);
  s.multiplicity_group.resize(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) s.multiplicity_group[i] = {i};
  s.raw_to_point = s.origin_index;
  return s;
}

Spectrum reduce_conjugate_pairs(std::span<const PlanePoint> raw) {
  for (const auto& p : raw) make_point(p.re, p.im);

  // Positive-imaginary points still waiting for a partner, keyed by the
  // coordinates their conjugate would have.
  std::map<BitKey, std::vector<std::size_t>> waiting;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].im > 0) waiting[key_of({raw[i].re, -raw[i].im})].push_back(i);
  }
  for (auto& [key, queue] : waiting) std::reverse(queue.begin(), queue.end());

  std::vector<std::optional<std::size_t>> partner_of(raw.size());  // negative -> positive
  std::vector<std::optional<std::size_t>> partner(raw.size());     // positive -> negative
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (!(raw[i].im < 0)) continue;
    auto it = waiting.find(key_of(raw[i]));
    if (it == waiting.end() || it->second.empty()) continue;
    const std::size_t pos = it->second.back();
    it->second.pop_back();
    partner_of[i] = pos;
    partner[pos] = i;
  }

  Spectrum s;
  s.raw_to_point.assign(raw.size(), 0);
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (partner_of[i]) continue;
    s.raw_to_point[i] = s.points.size();
    s.points.push_back(raw[i]);
    s.origin_index.push_back(i);
    s.conjugate_of.push_back(partner[i]);
    s.multiplicity_group.push_back({i});
  }
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (partner_of[i]) s.raw_to_point[i] = s.raw_to_point[*partner_of[i]];
  }
  return s;
}

Spectrum deduplicate(const Spectrum& s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return key_of(s.points[a]) < key_of(s.points[b]);
  });

  // Representative of each old point (the earliest in point order).
  std::vector<std::size_t> rep(n);
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && key_of(s.points[order[j]]) == key_of(s.points[order[i]])) ++j;
    for (std::size_t t = i; t < j; ++t) rep[order[t]] = order[i];
    i = j;
  }

  Spectrum out;
  std::vector<std::size_t> new_index(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (rep[i] != i) continue;
    new_index[i] = out.points.size();
    out.points.push_back(s.points[i]);
    out.origin_index.push_back(s.origin_index[i]);
    out.conjugate_of.push_back(s.conjugate_of[i]);
    out.multiplicity_group.emplace_back();
  }
  for (std::size_t i = 0; i < n; ++i) {
    auto& group = out.multiplicity_group[new_index[rep[i]]];
    group.insert(group.end(), s.multiplicity_group[i].begin(), s.multiplicity_group[i].end());
  }
  out.raw_to_point.resize(s.raw_size());
  for (std::size_t r = 0; r < s.raw_size(); ++r) {
    out.raw_to_point[r] = new_index[rep[s.raw_to_point[r]]];
  }
  return out;
}

double unit_interval(std::uint64_t bits) noexcept {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

Spectrum perturb(const Spectrum& s, double magnitude, std::uint64_t seed) {
  if (!(magnitude >= 0) || !std::isfinite(magnitude)) {
    throw std::invalid_argument("perturbation magnitude must be finite and nonnegative");
  }
  Spectrum out = s;
  if (magnitude == 0) return out;
  std::mt19937_64 rng(seed);
  auto draw = [&] { return magnitude * (2.0 * unit_interval(rng()) - 1.0); };
  for (auto& p : out.points) {
    const double dx = draw();
    const double dy = draw();
    p = make_point(p.re + dx, p.im + dy);
  }
  return out;
}

Clustering broadcast_labels(const Clustering& c, const Spectrum& s) {
  if (c.labels.size() != s.size()) {
    throw std::invalid_argument("clustering covers " + std::to_string(c.labels.size()) +
                                " points but the spectrum has " + std::to_string(s.size()));
  }
  std::vector<std::uint32_t> raw(s.raw_size());
  for (std::size_t r = 0; r < raw.size(); ++r) raw[r] = c.labels[s.raw_to_point[r]];
  return canonicalize(raw);
}

double default_perturbation(std::span<const PlanePoint> raw) noexcept {
  double scale = 0;
  for (const auto& p : raw) scale = std::max({scale, std::abs(p.re), std::abs(p.im)});
  return std::ldexp(scale, -26);
}

}  // namespace deltaclust
