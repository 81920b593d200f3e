#pragma once

#include <cstdint>

#include "deltaclust/types.hpp"

namespace deltaclust {

enum class PredicateSign : int { negative = -1, zero = 0, positive = 1 };

inline PredicateSign flip(PredicateSign s) noexcept {
  return static_cast<PredicateSign>(-static_cast<int>(s));
}

struct PredicateStats {
  std::uint64_t fast = 0;   // decided by the floating-point evaluation
  std::uint64_t exact = 0;  // decided by exact integer arithmetic

  std::uint64_t total() const noexcept { return fast + exact; }
  double fallback_fraction() const noexcept {
    return total() == 0 ? 0.0 : static_cast<double>(exact) / static_cast<double>(total());
  }
};

// Orientation and in-circle tests with selectable arithmetic.
//
// filtered: evaluate in binary64 and accept the sign when |det| exceeds a
//   static forward error bound (Shewchuk's bounds: (3 + 16e)e times the
//   permanent for orient2d, (10 + 96e)e for incircle, e = 2^-53). Those
//   bounds assume no overflow or underflow, so the filter also requires every
//   nonzero coordinate difference to lie within [2^-511, 2^511] (orient2d)
//   or [2^-250, 2^250] (incircle); anything else goes to the exact path.
// exact: always evaluate exactly. Each binary64 is m * 2^e with integer m,
//   so after shifting all inputs to the smallest exponent the determinant is
//   an integer polynomial, computed with GMP.
// floating: plain binary64 sign, no guarantee. Benchmark reference only.
//
// Counters are per instance; an instance is not safe to share across threads.
class Predicates {
 public:
  explicit Predicates(ArithmeticMode mode = ArithmeticMode::filtered) : mode_(mode) {}

  ArithmeticMode mode() const noexcept { return mode_; }

  // Sign of (b - a) x (c - a): positive when a, b, c turn counterclockwise.
  PredicateSign orient2d(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c);

  // Positive iff d lies strictly inside the circle through a, b, c, given that
  // a, b, c are counterclockwise (the sign flips for clockwise input).
  // Throws std::invalid_argument if a, b, c are collinear.
  PredicateSign incircle(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c,
                         const PlanePoint& d);

  // incircle without the collinearity check, for callers that guarantee it.
  PredicateSign incircle_unchecked(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c,
                                   const PlanePoint& d);

  const PredicateStats& stats() const noexcept { return stats_; }
  void reset_stats() noexcept { stats_ = {}; }

 private:
  ArithmeticMode mode_;
  PredicateStats stats_;
};

PredicateSign orient2d_exact(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c);
PredicateSign incircle_exact(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c,
                             const PlanePoint& d);

}  // namespace deltaclust
