#include <doctest.h>

#include <cmath>
#include <numbers>

#include "vvlab/inequalities.hpp"
#include "vvlab/norms.hpp"

using namespace vvlab;

namespace {
std::vector<Field> make_samples(const Grid& g, std::size_t count, std::size_t band,
                                std::uint64_t seed) {
  std::vector<Field> out;
  for (std::size_t j = 0; j < count; ++j)
    out.push_back(random_band_limited(g, band, seed + 1000 * j));
  return out;
}
}  // namespace

TEST_CASE("zero fields are skipped, not divided by") {
  Grid g(2.0 * std::numbers::pi, 64);
  std::vector<Field> zeros(3, Field(g.n, 0.0));
  auto r = check_gn(g, zeros);
  CHECK(r.empty());
  CHECK(r.skipped > 0);
}

TEST_CASE("band-limited generator is grid-independent as a function") {
  Grid g1(2.0 * std::numbers::pi, 128);
  Grid g2(2.0 * std::numbers::pi, 256);
  Field a = random_band_limited(g1, 10, 42);
  Field b = random_band_limited(g2, 10, 42);
  // Same continuum function: coarse nodes coincide with even fine nodes.
  for (std::size_t i = 0; i < g1.n; ++i)
    CHECK(a[i] == doctest::Approx(b[2 * i]).epsilon(1e-13));
}

TEST_CASE("Gagliardo-Nirenberg ratios: finite and grid-stable") {
  Grid g1(2.0 * std::numbers::pi, 128);
  Grid g2(2.0 * std::numbers::pi, 256);
  auto s1 = make_samples(g1, 60, 12, 5);
  auto s2 = make_samples(g2, 60, 12, 5);
  auto r1 = check_gn(g1, s1);
  auto r2 = check_gn(g2, s2);
  REQUIRE(!r1.empty());
  CHECK(std::isfinite(r1.max_ratio));
  CHECK(std::fabs(r1.max_ratio - r2.max_ratio) <= 0.05 * r1.max_ratio);
}

TEST_CASE("commutator ratios: finite and grid-stable for s = 1..3") {
  Grid g1(2.0 * std::numbers::pi, 256);
  Grid g2(2.0 * std::numbers::pi, 512);
  auto f1 = make_samples(g1, 40, 16, 21);
  auto h1 = make_samples(g1, 40, 16, 77);
  auto f2 = make_samples(g2, 40, 16, 21);
  auto h2 = make_samples(g2, 40, 16, 77);
  for (int s = 1; s <= 3; ++s) {
    auto r1 = check_moser(g1, f1, h1, s);
    auto r2 = check_moser(g2, f2, h2, s);
    REQUIRE(!r1.empty());
    CHECK(std::isfinite(r1.max_ratio));
    CHECK(std::fabs(r1.max_ratio - r2.max_ratio) <= 0.05 * r1.max_ratio);
  }
}

TEST_CASE("interpolation endpoints are exact") {
  Grid g(2.0 * std::numbers::pi, 128);
  auto s = make_samples(g, 20, 10, 9);
  for (double endpoint : {0.0, 3.0}) {
    auto r = check_interp(g, s, endpoint, 3);
    REQUIRE(!r.empty());
    for (double q : r.ratios) CHECK(std::fabs(q - 1.0) <= 1e-9);
  }
}

TEST_CASE("interpolation ratio at s' = 1.5 is bounded and grid-stable within 5%") {
  Grid g1(2.0 * std::numbers::pi, 128);
  Grid g2(2.0 * std::numbers::pi, 256);
  auto s1 = make_samples(g1, 200, 12, 31);
  auto s2 = make_samples(g2, 200, 12, 31);
  auto r1 = check_interp(g1, s1, 1.5);
  auto r2 = check_interp(g2, s2, 1.5);
  CHECK(std::isfinite(r1.max_ratio));
  CHECK(r1.max_ratio < 10.0);
  CHECK(std::fabs(r1.max_ratio - r2.max_ratio) <= 0.05 * r1.max_ratio);
}
