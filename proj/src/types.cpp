#include "deltaclust/types.hpp"

#include <cmath>
#include <unordered_map>

namespace deltaclust {

PlanePoint make_point(double re, double im) {
  if (!std::isfinite(re) || !std::isfinite(im)) {
    throw std::invalid_argument("point coordinates must be finite");
  }
  return {re, im};
}

bool is_finite(const PlanePoint& p) noexcept { return std::isfinite(p.re) && std::isfinite(p.im); }

void require_positive_delta(double delta) {
  if (!(delta > 0) || !std::isfinite(delta)) {
    throw std::invalid_argument("delta must be finite and positive");
  }
}

Clustering canonicalize(const std::vector<std::uint32_t>& raw_labels) {
  Clustering out;
  out.labels.resize(raw_labels.size());
  std::unordered_map<std::uint32_t, std::uint32_t> renumber;
  renumber.reserve(raw_labels.size());
  for (std::size_t i = 0; i < raw_labels.size(); ++i) {
    auto [it, inserted] = renumber.try_emplace(raw_labels[i], out.k + 1);
    if (inserted) ++out.k;
    out.labels[i] = it->second;
  }
  return out;
}

bool same_partition(const Clustering& a, const Clustering& b) {
  if (a.labels.size() != b.labels.size()) return false;
  return canonicalize(a.labels) == canonicalize(b.labels);
}

std::string to_string(DsuKind kind) { return kind == DsuKind::labels ? "labels" : "forest"; }

std::string to_string(ArithmeticMode mode) {
  switch (mode) {
    case ArithmeticMode::floating: return "float";
    case ArithmeticMode::filtered: return "filtered";
    case ArithmeticMode::exact: return "exact";
  }
  return "?";
}

DsuKind parse_dsu_kind(const std::string& s) {
  if (s == "labels") return DsuKind::labels;
  if (s == "forest") return DsuKind::forest;
  throw std::invalid_argument("unknown DSU kind '" + s + "'");
}

ArithmeticMode parse_arithmetic_mode(const std::string& s) {
  if (s == "float") return ArithmeticMode::floating;
  if (s == "filtered") return ArithmeticMode::filtered;
  if (s == "exact") return ArithmeticMode::exact;
  throw std::invalid_argument("unknown arithmetic mode '" + s + "'");
}

}  // namespace deltaclust
