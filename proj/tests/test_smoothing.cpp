#include "doctest.h"

#include <cmath>

#include "petty/errors.hpp"
#include "petty/norms.hpp"
#include "petty/numerics.hpp"

using namespace petty;

namespace {

double evn(const Norm& n, const VecN& x) {
  return n.eval(std::span<const double>(x.data(), x.size()));
}

}  // namespace

TEST_CASE("smoothing a euclidean base is a passthrough") {
  SmoothingParams params;
  params.epsilon = 0.01;
  Norm base = Norm::lp(2, 2);
  Norm n0 = smooth_approx(base, {{1, 0}, {-1, 0}}, params);
  CHECK(n0.is_smooth_strictly_convex());
  auto rng = seeded_rng(3);
  for (int i = 0; i < 200; ++i) {
    VecN x = random_gaussian_vec(rng, 2);
    CHECK(evn(n0, x) == doctest::Approx(evn(base, x)).epsilon(1e-14));
  }
}

TEST_CASE("smoothing the planar l1 ball keeps anchors at unit norm") {
  SmoothingParams params;
  params.epsilon = 0.1;
  Norm base = Norm::lp(1, 2);
  std::vector<VecN> anchors = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  Norm n0 = smooth_approx(base, anchors, params);
  for (const auto& a : anchors) {
    CHECK(std::abs(evn(n0, a) - 1.0) <= 1e-9);
  }
  // Two-sided sandwich on independent samples.
  auto rng = seeded_rng(17);
  for (int i = 0; i < 10000; ++i) {
    VecN x = random_gaussian_vec(rng, 2);
    double b = evn(base, x), s = evn(n0, x);
    CHECK(b >= (1 - params.epsilon) * s - 1e-12);
    CHECK(b <= (1 + params.epsilon) * s + 1e-12);
  }
}

TEST_CASE("smoothed norms remain norms and are strictly convex on chords") {
  SmoothingParams params;
  params.epsilon = 0.05;
  Norm base = Norm::linf(3);
  std::vector<VecN> anchors = {{1, 1, 1}, {-1, -1, -1}};
  Norm n0 = smooth_approx(base, anchors, params);
  auto rng = seeded_rng(23);
  for (int i = 0; i < 500; ++i) {
    VecN x = random_gaussian_vec(rng, 3);
    VecN y = random_gaussian_vec(rng, 3);
    double nx = evn(n0, x), ny = evn(n0, y);
    // Triangle inequality and homogeneity.
    CHECK(evn(n0, vecn_add(x, y)) <= nx + ny + 1e-9);
    CHECK(evn(n0, vecn_scale(x, -2.5)) == doctest::Approx(2.5 * nx).epsilon(1e-9));
    // Strict convexity: normalized midpoints stay strictly interior.
    if (nx > 1e-9 && ny > 1e-9) {
      VecN xh = vecn_scale(x, 1.0 / nx), yh = vecn_scale(y, 1.0 / ny);
      double dist = vecn_norm2(vecn_sub(xh, yh));
      if (dist > 1e-3) {
        VecN mid = vecn_scale(vecn_add(xh, yh), 0.5);
        CHECK(evn(n0, mid) < 1.0);
      }
    }
  }
}

TEST_CASE("hexagon difference norm smoothing holds anchors for eps = 1/k") {
  // Differences of the equilateral triple {0, u, w} on an l1 circle:
  // u = (1,0), w = (0,1) at pairwise l1 distance... use a polytopal norm
  // built from the actual difference hexagon instead.
  RatMat hex = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
  Norm base = Norm::polytope(hex);
  std::vector<VecN> anchors;
  for (const auto& v : hex) anchors.push_back(rat_vec_to_double(v));
  for (int k : {2, 8, 32}) {
    SmoothingParams params;
    params.epsilon = 1.0 / k;
    Norm n0 = smooth_approx(base, anchors, params);
    for (const auto& a : anchors) {
      CHECK(std::abs(evn(n0, a) - 1.0) <= 1e-9);
    }
    auto rng = seeded_rng(1000 + k);
    for (int i = 0; i < 2000; ++i) {
      VecN x = random_gaussian_vec(rng, 2);
      double b = evn(base, x), s = evn(n0, x);
      CHECK(b >= (1 - params.epsilon) * s - 1e-12);
      CHECK(b <= (1 + params.epsilon) * s + 1e-12);
    }
  }
}

TEST_CASE("smoothing rejects bad inputs") {
  SmoothingParams params;
  params.epsilon = 1.5;
  CHECK_THROWS_AS(smooth_approx(Norm::lp(1, 2), {}, params), InputError);
  params.epsilon = 0.1;
  // Anchor far from the unit sphere.
  CHECK_THROWS_AS(smooth_approx(Norm::lp(1, 2), {{2.0, 0.0}}, params), InputError);
}
