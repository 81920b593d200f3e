#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace deltaclust {

// A point in the plane standing for a real or complex eigenvalue.
struct PlanePoint {
  double re = 0.0;
  double im = 0.0;

  friend bool operator==(const PlanePoint&, const PlanePoint&) = default;
};

// Throws std::invalid_argument unless both coordinates are finite.
PlanePoint make_point(double re, double im);

bool is_finite(const PlanePoint& p) noexcept;

// Squared Euclidean distance in binary64. Every closeness decision in the
// library goes through within_delta() so the algorithms agree bit-for-bit.
inline double squared_distance(const PlanePoint& a, const PlanePoint& b) noexcept {
  const double dx = a.re - b.re;
  const double dy = a.im - b.im;
  return dx * dx + dy * dy;
}

inline bool within_delta(const PlanePoint& a, const PlanePoint& b, double delta_sq) noexcept {
  return squared_distance(a, b) <= delta_sq;
}

// Throws std::invalid_argument unless delta is finite and positive.
void require_positive_delta(double delta);

// Cluster label per element, contiguous 1..k, numbered by first appearance.
struct Clustering {
  std::vector<std::uint32_t> labels;
  std::uint32_t k = 0;

  friend bool operator==(const Clustering&, const Clustering&) = default;
};

// Renumbers arbitrary labels to 1..k in order of first appearance.
Clustering canonicalize(const std::vector<std::uint32_t>& raw_labels);

// True when both label vectors describe the same set partition.
bool same_partition(const Clustering& a, const Clustering& b);

enum class DsuKind { labels, forest };

// Arithmetic used for geometric predicates.
enum class ArithmeticMode { floating, filtered, exact };

std::string to_string(DsuKind kind);
std::string to_string(ArithmeticMode mode);
DsuKind parse_dsu_kind(const std::string& s);
ArithmeticMode parse_arithmetic_mode(const std::string& s);

// Raised when a long computation passes its deadline.
class Cancelled : public std::runtime_error {
 public:
  Cancelled() : std::runtime_error("computation cancelled: deadline exceeded") {}
};

// Cooperative deadline polled by the long-running algorithms.
struct Deadline {
  std::chrono::steady_clock::time_point at;

  static Deadline after(std::chrono::duration<double> d) {
    return {std::chrono::steady_clock::now() +
            std::chrono::duration_cast<std::chrono::steady_clock::duration>(d)};
  }
  bool expired() const { return std::chrono::steady_clock::now() >= at; }
};

inline void poll(const std::optional<Deadline>& deadline) {
  if (deadline && deadline->expired()) throw Cancelled();
}

}  // namespace deltaclust
