#include "doctest.h"

#include <cmath>

#include "petty/errors.hpp"
#include "petty/norms.hpp"
#include "petty/numerics.hpp"

using namespace petty;

namespace {

double ev(const Norm& n, std::initializer_list<double> x) {
  std::vector<double> v(x);
  return n.eval(std::span<const double>(v.data(), v.size()));
}

Norm hexagon_norm() {
  // Vertices +-(1,0), +-(0,1), +-(1,1).
  RatMat v = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, -1}};
  return Norm::polytope(v);
}

}  // namespace

TEST_CASE("norm_eval unit examples") {
  CHECK(ev(Norm::lp(1, 4), {1, 0, 0, 0}) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(ev(Norm::l1l2(4), {1, 2, 2, 1}) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(ev(hexagon_norm(), {1, 1}) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(ev(Norm::linf(3), {0.5, -2.0, 1.0}) == doctest::Approx(2.0));
  CHECK(ev(Norm::lp(3.5, 2), {0, 0}) == 0.0);
}

TEST_CASE("norm_eval input errors") {
  CHECK_THROWS_AS(ev(Norm::lp(2, 3), {1, 0}), InputError);
  CHECK_THROWS_AS(Norm::lp(0.5, 2), InputError);
  CHECK_THROWS_AS(Norm::l1l2(1), InputError);
}

TEST_CASE("polytope validation rejects bad vertex sets") {
  // Not centrally symmetric.
  CHECK_THROWS_AS(Norm::polytope({{1, 0}, {0, 1}, {0, -1}}), InputError);
  // Does not span.
  CHECK_THROWS_AS(Norm::polytope({{1, 0}, {-1, 0}}), InputError);
  // Non-extreme listed vertex.
  RatMat with_interior = {{1, 0},  {-1, 0}, {0, 1},           {0, -1},
                          {1, 1},  {-1, -1}, {Rat(1) / 4, 0}, {Rat(-1) / 4, 0}};
  CHECK_THROWS_AS(Norm::polytope(with_interior), InputError);
}

TEST_CASE("polytope gauge at each listed vertex is exactly 1") {
  Norm hex = hexagon_norm();
  const auto& spec = std::get<PolytopeSpec>(hex.spec());
  for (const auto& v : spec.vertices) {
    Rat g = polytope_gauge_exact(spec, v);
    CHECK(g == 1);
    double gd = hex.eval(std::span<const double>(rat_vec_to_double(v).data(), 2));
    CHECK(gd == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("exact and double polytope gauges agree on random points") {
  Norm hex = hexagon_norm();
  const auto& spec = std::get<PolytopeSpec>(hex.spec());
  auto rng = seeded_rng(7);
  std::uniform_int_distribution<int> coord(-20, 20);
  for (int i = 0; i < 100; ++i) {
    RatVec x = {Rat(coord(rng)) / 7, Rat(coord(rng)) / 7};
    if (x[0] == 0 && x[1] == 0) continue;
    Rat exact = polytope_gauge_exact(spec, x);
    double approx = hex.eval(std::span<const double>(rat_vec_to_double(x).data(), 2));
    CHECK(approx == doctest::Approx(rat_to_double(exact)).epsilon(1e-10));
  }
}

TEST_CASE("norm axioms hold for sampled specs (homogeneity, subadditivity)") {
  std::vector<Norm> norms;
  norms.push_back(Norm::lp(1, 3));
  norms.push_back(Norm::lp(2, 3));
  norms.push_back(Norm::lp(3.7, 3));
  norms.push_back(Norm::linf(3));
  norms.push_back(Norm::l1l2(3));
  {
    RatMat v = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0},
                {0, 0, 1}, {0, 0, -1}, {1, 1, 1}, {-1, -1, -1}};
    norms.push_back(Norm::polytope(v));
  }
  auto rng = seeded_rng(99);
  std::uniform_real_distribution<double> scal(-3.0, 3.0);
  for (const Norm& n : norms) {
    for (int i = 0; i < 300; ++i) {
      VecN x = random_gaussian_vec(rng, 3);
      VecN y = random_gaussian_vec(rng, 3);
      double lam = scal(rng);
      double nx = n.eval(std::span<const double>(x.data(), 3));
      double ny = n.eval(std::span<const double>(y.data(), 3));
      VecN lx = vecn_scale(x, lam);
      double nlx = n.eval(std::span<const double>(lx.data(), 3));
      CHECK(std::abs(nlx - std::abs(lam) * nx) <= 1e-9 * (1.0 + std::abs(lam) * nx));
      VecN s = vecn_add(x, y);
      double ns = n.eval(std::span<const double>(s.data(), 3));
      CHECK(ns <= nx + ny + 1e-9);
    }
    // Zero iff zero vector.
    VecN zero(3, 0.0);
    CHECK(n.eval(std::span<const double>(zero.data(), 3)) == 0.0);
  }
}

TEST_CASE("exact eval for polyhedral norms only") {
  CHECK(*Norm::lp(1, 3).eval_exact({Rat(1) / 3, Rat(-1) / 3, 1}) == Rat(5) / 3);
  CHECK(*Norm::linf(2).eval_exact({Rat(-7) / 2, 1}) == Rat(7) / 2);
  CHECK(!Norm::lp(2, 2).eval_exact({1, 1}).has_value());
  CHECK(!Norm::l1l2(3).eval_exact({1, 0, 0}).has_value());
  Norm hex = hexagon_norm();
  CHECK(*hex.eval_exact({1, 1}) == 1);
  CHECK(*hex.eval_exact({2, 2}) == 2);
  CHECK(*hex.eval_exact({1, -1}) == 2);  // opposite diagonal is further out
}
