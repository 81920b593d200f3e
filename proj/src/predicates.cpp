#include "deltaclust/predicates.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <stdexcept>

namespace deltaclust {

namespace {

constexpr double kEpsilon = 0x1.0p-53;
constexpr double kOrientBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;
constexpr double kIncircleBound = (10.0 + 96.0 * kEpsilon) * kEpsilon;

PredicateSign sign_of(double x) noexcept {
  return x > 0 ? PredicateSign::positive : (x < 0 ? PredicateSign::negative : PredicateSign::zero);
}

PredicateSign sign_of(const mpz_class& x) noexcept {
  const int s = sgn(x);
  return s > 0 ? PredicateSign::positive : (s < 0 ? PredicateSign::negative : PredicateSign::zero);
}

bool in_safe_range(std::initializer_list<double> diffs, double lo, double hi) noexcept {
  for (double d : diffs) {
    const double m = std::abs(d);
    if (m != 0 && !(m >= lo && m <= hi)) return false;
  }
  return true;
}

// Exact fixed-point images of binary64 coordinates: x = mantissa * 2^exponent,
// rescaled to the smallest exponent among the inputs.
class FixedPoint {
 public:
  template <std::size_t N>
  void load(const double (&xs)[N]) {
    int min_exp = 0;
    bool any = false;
    for (std::size_t i = 0; i < N; ++i) {
      if (xs[i] == 0) continue;
      int e = 0;
      std::frexp(xs[i], &e);
      min_exp = any ? std::min(min_exp, e - 53) : e - 53;
      any = true;
    }
    for (std::size_t i = 0; i < N; ++i) {
      if (xs[i] == 0) {
        values_[i] = 0;
        continue;
      }
      int e = 0;
      const double f = std::frexp(xs[i], &e);
      values_[i] = std::ldexp(f, 53);  // integral, |m| < 2^53
      mpz_mul_2exp(values_[i].get_mpz_t(), values_[i].get_mpz_t(),
                   static_cast<mp_bitcnt_t>(e - 53 - min_exp));
    }
  }

  const mpz_class& operator[](std::size_t i) const { return values_[i]; }

 private:
  mpz_class values_[8];
};

struct ExactScratch {
  FixedPoint fp;
  mpz_class adx, ady, bdx, bdy, cdx, cdy, t1, t2, lift, det;
};

ExactScratch& scratch() {
  thread_local ExactScratch s;
  return s;
}

}  // namespace

PredicateSign orient2d_exact(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  auto& s = scratch();
  const double xs[6] = {a.re, a.im, b.re, b.im, c.re, c.im};
  s.fp.load(xs);
  s.adx = s.fp[0] - s.fp[4];
  s.ady = s.fp[1] - s.fp[5];
  s.bdx = s.fp[2] - s.fp[4];
  s.bdy = s.fp[3] - s.fp[5];
  s.t1 = s.adx * s.bdy;
  s.t2 = s.ady * s.bdx;
  s.det = s.t1 - s.t2;
  return sign_of(s.det);
}

PredicateSign incircle_exact(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c,
                             const PlanePoint& d) {
  auto& s = scratch();
  const double xs[8] = {a.re, a.im, b.re, b.im, c.re, c.im, d.re, d.im};
  s.fp.load(xs);
  s.adx = s.fp[0] - s.fp[6];
  s.ady = s.fp[1] - s.fp[7];
  s.bdx = s.fp[2] - s.fp[6];
  s.bdy = s.fp[3] - s.fp[7];
  s.cdx = s.fp[4] - s.fp[6];
  s.cdy = s.fp[5] - s.fp[7];

  s.lift = s.adx * s.adx + s.ady * s.ady;
  s.t1 = s.bdx * s.cdy - s.cdx * s.bdy;
  s.det = s.lift * s.t1;

  s.lift = s.bdx * s.bdx + s.bdy * s.bdy;
  s.t1 = s.cdx * s.ady - s.adx * s.cdy;
  s.t2 = s.lift * s.t1;
  s.det += s.t2;

  s.lift = s.cdx * s.cdx + s.cdy * s.cdy;
  s.t1 = s.adx * s.bdy - s.bdx * s.ady;
  s.t2 = s.lift * s.t1;
  s.det += s.t2;
  return sign_of(s.det);
}

PredicateSign Predicates::orient2d(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c) {
  if (mode_ == ArithmeticMode::exact) {
    ++stats_.exact;
    return orient2d_exact(a, b, c);
  }
  const double acx = a.re - c.re;
  const double bcx = b.re - c.re;
  const double acy = a.im - c.im;
  const double bcy = b.im - c.im;
  const double left = acx * bcy;
  const double right = acy * bcx;
  const double det = left - right;
  if (mode_ == ArithmeticMode::floating) {
    ++stats_.fast;
    return sign_of(det);
  }
  const double bound = kOrientBound * (std::abs(left) + std::abs(right));
  if ((det > bound || -det > bound) &&
      in_safe_range({acx, bcx, acy, bcy}, 0x1.0p-511, 0x1.0p511)) {
    ++stats_.fast;
    return sign_of(det);
  }
  ++stats_.exact;
  return orient2d_exact(a, b, c);
}

PredicateSign Predicates::incircle(const PlanePoint& a, const PlanePoint& b, const PlanePoint& c,
                                   const PlanePoint& d) {
  if (orient2d(a, b, c) == PredicateSign::zero) {
    throw std::invalid_argument("incircle: the first three points are collinear");
  }
  return incircle_unchecked(a, b, c, d);
}

PredicateSign Predicates::incircle_unchecked(const PlanePoint& a, const PlanePoint& b,
                                             const PlanePoint& c, const PlanePoint& d) {
  if (mode_ == ArithmeticMode::exact) {
    ++stats_.exact;
    return incircle_exact(a, b, c, d);
  }
  const double adx = a.re - d.re;
  const double bdx = b.re - d.re;
  const double cdx = c.re - d.re;
  const double ady = a.im - d.im;
  const double bdy = b.im - d.im;
  const double cdy = c.im - d.im;

  const double bdxcdy = bdx * cdy;
  const double cdxbdy = cdx * bdy;
  const double alift = adx * adx + ady * ady;
  const double cdxady = cdx * ady;
  const double adxcdy = adx * cdy;
  const double blift = bdx * bdx + bdy * bdy;
  const double adxbdy = adx * bdy;
  const double bdxady = bdx * ady;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                     clift * (adxbdy - bdxady);
  if (mode_ == ArithmeticMode::floating) {
    ++stats_.fast;
    return sign_of(det);
  }
  const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift +
                           (std::abs(cdxady) + std::abs(adxcdy)) * blift +
                           (std::abs(adxbdy) + std::abs(bdxady)) * clift;
  const double bound = kIncircleBound * permanent;
  if ((det > bound || -det > bound) &&
      in_safe_range({adx, bdx, cdx, ady, bdy, cdy}, 0x1.0p-250, 0x1.0p250)) {
    ++stats_.fast;
    return sign_of(det);
  }
  ++stats_.exact;
  return incircle_exact(a, b, c, d);
}

}  // namespace deltaclust
