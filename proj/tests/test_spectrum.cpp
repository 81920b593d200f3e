#include <cmath>
#include <random>

#include "doctest.h"
#include "deltaclust/naive_cluster.hpp"
#include "deltaclust/spectrum.hpp"
#include "deltaclust/validate.hpp"

using namespace deltaclust;

namespace {

std::vector<PlanePoint> with_planted_duplicates(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<PlanePoint> pts;
  for (std::size_t i = 0; i < n; ++i) {
    if (!pts.empty() && rng() % 3 == 0) {
      pts.push_back(pts[rng() % pts.size()]);
    } else {
      pts.push_back({u(rng), u(rng)});
    }
  }
  return pts;
}

}  // namespace

TEST_SUITE("spectrum") {
  TEST_CASE("conjugate reduction keeps the positive member") {
    const std::vector<PlanePoint> raw{{1, 2}, {1, -2}, {3, 0}};
    const Spectrum s = reduce_conjugate_pairs(raw);
    REQUIRE(s.size() == 2);
    CHECK(s.points[0] == PlanePoint{1, 2});
    CHECK(s.points[1] == PlanePoint{3, 0});
    CHECK(s.conjugate_of[0] == std::optional<std::size_t>{1});
    CHECK_FALSE(s.conjugate_of[1]);
    CHECK(s.raw_to_point == std::vector<std::size_t>{0, 0, 1});
  }

  TEST_CASE("real points pass through conjugate reduction") {
    const std::vector<PlanePoint> raw{{5, 0}};
    const Spectrum s = reduce_conjugate_pairs(raw);
    REQUIRE(s.size() == 1);
    CHECK_FALSE(s.conjugate_of[0]);
  }

  TEST_CASE("unmatched negative imaginary points are retained") {
    const std::vector<PlanePoint> raw{{0, -1}};
    const Spectrum s = reduce_conjugate_pairs(raw);
    REQUIRE(s.size() == 1);
    CHECK(s.points[0] == PlanePoint{0, -1});
    CHECK_FALSE(s.conjugate_of[0]);
  }

  TEST_CASE("conjugate matching is greedy in input order") {
    // Two copies of 1+2i, one conjugate: the first copy gets it.
    const std::vector<PlanePoint> raw{{1, 2}, {1, 2}, {1, -2}, {1, -2}, {1, -2}};
    const Spectrum s = reduce_conjugate_pairs(raw);
    REQUIRE(s.size() == 3);
    CHECK(s.conjugate_of[0] == std::optional<std::size_t>{2});
    CHECK(s.conjugate_of[1] == std::optional<std::size_t>{3});
    CHECK(s.points[2] == PlanePoint{1, -2});
  }

  TEST_CASE("conjugate reduction conserves every input") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<PlanePoint> raw;
      const std::size_t n = 1 + rng() % 40;
      for (std::size_t i = 0; i < n; ++i) {
        const double re = static_cast<double>(rng() % 4), im = static_cast<double>(rng() % 5) - 2;
        raw.push_back({re, im});
        if (rng() % 2) raw.push_back({re, -im});
      }
      const Spectrum s = reduce_conjugate_pairs(raw);
      std::size_t linked = 0;
      for (std::size_t p = 0; p < s.size(); ++p) {
        CHECK(raw[s.origin_index[p]] == s.points[p]);
        if (const auto q = s.conjugate_of[p]) {
          ++linked;
          CHECK(raw[*q].re == s.points[p].re);
          CHECK(raw[*q].im == -s.points[p].im);
          CHECK(s.raw_to_point[*q] == p);
        }
      }
      CHECK(raw.size() == s.size() + linked);
    }
  }

  TEST_CASE("deduplicate collapses exact duplicates") {
    const std::vector<PlanePoint> raw{{0, 0}, {0, 0}, {1, 0}};
    const Spectrum s = deduplicate(Spectrum::from_points(raw));
    REQUIRE(s.size() == 2);
    CHECK(s.points[0] == PlanePoint{0, 0});
    CHECK(s.multiplicity_group[0] == std::vector<std::size_t>{0, 1});
    CHECK(s.multiplicity_group[1] == std::vector<std::size_t>{2});
  }

  TEST_CASE("deduplicate is exact, not tolerance based") {
    const std::vector<PlanePoint> raw{{0, 0}, {0, 1e-300}};
    CHECK(deduplicate(Spectrum::from_points(raw)).size() == 2);
  }

  TEST_CASE("signed zeros are one point") {
    const std::vector<PlanePoint> raw{{0.0, 0.0}, {-0.0, 0.0}, {0.0, -0.0}};
    CHECK(deduplicate(Spectrum::from_points(raw)).size() == 1);
  }

  TEST_CASE("origin with multiplicity n/6") {
    const std::size_t n = 600;
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(0.5, 1.0);
    std::vector<PlanePoint> raw(n / 6, PlanePoint{0, 0});
    while (raw.size() < n) raw.push_back({u(rng), u(rng)});
    const Spectrum s = deduplicate(Spectrum::from_points(raw));
    CHECK(s.size() == n - n / 6 + 1);
    CHECK(s.multiplicity_group[0].size() == n / 6);
  }

  TEST_CASE("multiplicity groups hold bitwise-equal points") {
    std::mt19937_64 rng(5);
    const auto raw = with_planted_duplicates(300, rng);
    const Spectrum s = deduplicate(Spectrum::from_points(raw));
    std::size_t covered = 0;
    for (std::size_t p = 0; p < s.size(); ++p) {
      for (auto r : s.multiplicity_group[p]) {
        CHECK(raw[r] == s.points[p]);
        CHECK(s.raw_to_point[r] == p);
      }
      covered += s.multiplicity_group[p].size();
    }
    CHECK(covered == raw.size());
  }

  TEST_CASE("dedup after conjugate reduction keeps conjugate links") {
    const std::vector<PlanePoint> raw{{1, 2}, {1, -2}, {1, 2}, {1, -2}, {4, 0}};
    const Spectrum s = deduplicate(reduce_conjugate_pairs(raw));
    REQUIRE(s.size() == 2);
    const Clustering c = broadcast_labels({{1, 2}, 2}, s);
    CHECK(c.labels == std::vector<std::uint32_t>{1, 1, 1, 1, 2});
  }

  TEST_CASE("perturb with magnitude zero is the identity") {
    std::mt19937_64 rng(1);
    const auto raw = with_planted_duplicates(50, rng);
    const Spectrum s = Spectrum::from_points(raw);
    CHECK(perturb(s, 0.0, 99).points == s.points);
    CHECK_THROWS_AS(perturb(s, -1.0, 0), std::invalid_argument);
  }

  TEST_CASE("perturb separates coincident points within the bound") {
    const std::vector<PlanePoint> raw{{0, 0}, {0, 0}};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const Spectrum s = perturb(Spectrum::from_points(raw), 1e-8, seed);
      CHECK(s.points[0] != s.points[1]);
      for (const auto& p : s.points) {
        CHECK(std::abs(p.re) <= 1e-8);
        CHECK(std::abs(p.im) <= 1e-8);
      }
    }
  }

  TEST_CASE("perturb is deterministic per seed") {
    std::mt19937_64 rng(2);
    const Spectrum s = Spectrum::from_points(with_planted_duplicates(100, rng));
    const Spectrum a = perturb(s, 1e-3, 7), b = perturb(s, 1e-3, 7), c = perturb(s, 1e-3, 8);
    CHECK(a.points == b.points);
    CHECK(a.points != c.points);
  }

  TEST_CASE("perturbation moves a point by at most m*sqrt(2)") {
    std::mt19937_64 rng(4);
    const Spectrum s = Spectrum::from_points(with_planted_duplicates(2000, rng));
    const double m = 0.01;
    const Spectrum t = perturb(s, m, 12);
    for (std::size_t i = 0; i < s.size(); ++i) {
      CHECK(std::sqrt(squared_distance(s.points[i], t.points[i])) <= m * std::sqrt(2.0) * (1 + 1e-12));
    }
  }

  TEST_CASE("unit_interval uses the top 53 bits") {
    CHECK(unit_interval(0) == 0.0);
    CHECK(unit_interval(~std::uint64_t{0}) == 1.0 - 0x1.0p-53);
    CHECK(unit_interval(std::uint64_t{1} << 63) == 0.5);
  }

  TEST_CASE("default perturbation is the data scale times 2^-26") {
    const std::vector<PlanePoint> raw{{0.5, -3.0}, {2.0, 0.0}};
    CHECK(default_perturbation(raw) == std::ldexp(3.0, -26));
  }

  TEST_CASE("broadcast examples") {
    const std::vector<PlanePoint> conj{{1, 2}, {1, -2}};
    CHECK(broadcast_labels({{1}, 1}, reduce_conjugate_pairs(conj)).labels ==
          std::vector<std::uint32_t>{1, 1});
    const std::vector<PlanePoint> dup{{0, 0}, {0, 0}};
    CHECK(broadcast_labels({{1}, 1}, deduplicate(Spectrum::from_points(dup))).labels ==
          std::vector<std::uint32_t>{1, 1});
    const std::vector<PlanePoint> plain{{0, 0}, {5, 0}, {9, 0}};
    CHECK(broadcast_labels({{1, 2, 3}, 3}, Spectrum::from_points(plain)).labels ==
          std::vector<std::uint32_t>{1, 2, 3});
    CHECK_THROWS_AS(broadcast_labels({{1, 2}, 2}, Spectrum::from_points(plain)),
                    std::invalid_argument);
  }

  TEST_CASE("clustering deduplicated points then broadcasting matches the raw clustering") {
    std::mt19937_64 rng(9);
    for (int trial = 0; trial < 100; ++trial) {
      const auto raw = with_planted_duplicates(1 + rng() % 80, rng);
      const double delta = 0.05 + 0.3 * static_cast<double>(rng() % 4);
      const Spectrum s = Spectrum::from_points(raw);
      const Spectrum d = deduplicate(s);
      const Clustering via_dedup =
          broadcast_labels(cluster_points_naive(d.points, delta).clustering, d);
      CHECK(via_dedup == oracle_components(raw, delta));
    }
  }
}
