#include "doctest.h"

#include <random>

#include "petty/errors.hpp"
#include "petty/rational.hpp"
#include "petty/simplex.hpp"

using namespace petty;

TEST_CASE("rational parsing round trips") {
  CHECK(rat_from_string("3/4") == Rat(3) / 4);
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK(rat_from_string("-0.25") == Rat(-1) / 4);
  CHECK(rat_from_string("2.5") == Rat(5) / 2);
  CHECK(rat_to_string(Rat(22) / 7) == "22/7");
  CHECK_THROWS_AS(rat_from_string("nope"), InputError);
  CHECK_THROWS_AS(rat_from_string(""), InputError);
  CHECK(rat_from_double(0.5) == Rat(1) / 2);
  CHECK(rat_from_double(-0.75) == Rat(-3) / 4);
}

TEST_CASE("rational rank") {
  RatMat m = {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}};
  CHECK(rational_rank(m) == 2);
  RatMat id = {{1, 0}, {0, 1}};
  CHECK(rational_rank(id) == 2);
  RatMat aug = {{1, 1}, {2, 2}};
  CHECK(rational_rank(aug) == 1);
  CHECK(rational_rank_augmented(aug, {1, 3}) == 2);  // inconsistent
  CHECK(rational_rank_augmented(aug, {1, 2}) == 1);  // consistent
}

TEST_CASE("standard simplex solves a known LP exactly") {
  // min -x - y  s.t. x + 2y + s1 = 4, 3x + y + s2 = 6, all >= 0.
  // Optimum at intersection x = 8/5, y = 6/5, objective -14/5.
  std::vector<Rat> a = {1, 2, 1, 0, 3, 1, 0, 1};
  std::vector<Rat> b = {4, 6};
  std::vector<Rat> c = {-1, -1, 0, 0};
  auto sol = solve_standard_lp<Rat>(2, 4, a, b, c);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective == Rat(-14) / 5);
  CHECK(sol.x[0] == Rat(8) / 5);
  CHECK(sol.x[1] == Rat(6) / 5);
}

TEST_CASE("simplex reports unbounded") {
  // min -x s.t. x - y = 1, x,y >= 0 (x can grow without bound).
  std::vector<Rat> a = {1, -1};
  std::vector<Rat> b = {1};
  std::vector<Rat> c = {-1, 0};
  auto sol = solve_standard_lp<Rat>(1, 2, a, b, c);
  CHECK(sol.status == LpStatus::kUnbounded);
}

TEST_CASE("simplex infeasible with verified farkas certificate") {
  // x1 + x2 = 1, x1 + x2 = 2 cannot both hold.
  std::vector<Rat> a = {1, 1, 1, 1};
  std::vector<Rat> b = {1, 2};
  std::vector<Rat> c = {0, 0};
  auto sol = solve_standard_lp<Rat>(2, 2, a, b, c);
  REQUIRE(sol.status == LpStatus::kInfeasible);
  REQUIRE(sol.farkas.size() == 2);
  // y'A <= 0 and y'b > 0, re-checked here independently of the solver.
  Rat ya1 = sol.farkas[0] * Rat(1) + sol.farkas[1] * Rat(1);
  Rat ya2 = ya1;
  Rat yb = sol.farkas[0] * Rat(1) + sol.farkas[1] * Rat(2);
  CHECK(ya1 <= 0);
  CHECK(ya2 <= 0);
  CHECK(yb > 0);
}

TEST_CASE("general LP with bounds and free variables") {
  // min x + y s.t. x + y >= 1, -2 <= x <= 2, y free.
  std::vector<LpRow<Rat>> rows;
  rows.push_back({{1, 1}, LpRel::kGe, Rat(1)});
  std::vector<LpBounds<Rat>> bounds(2);
  bounds[0].lower = Rat(-2);
  bounds[0].upper = Rat(2);
  auto sol = solve_general_lp<Rat>(2, rows, bounds, {1, 1});
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective == 1);

  // Infeasible box: 0 <= x <= 1 with x >= 3.
  std::vector<LpRow<Rat>> rows2;
  rows2.push_back({{1}, LpRel::kGe, Rat(3)});
  std::vector<LpBounds<Rat>> bounds2(1);
  bounds2[0].lower = Rat(0);
  bounds2[0].upper = Rat(1);
  auto sol2 = solve_general_lp<Rat>(1, rows2, bounds2, {0});
  CHECK(sol2.status == LpStatus::kInfeasible);
}

TEST_CASE("exact and double simplex agree on random feasibility problems") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<int> coef(-4, 4);
  int disagreements = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const int rows = 3, cols = 5;
    std::vector<Rat> ar(rows * cols);
    std::vector<double> ad(rows * cols);
    for (int i = 0; i < rows * cols; ++i) {
      int v = coef(rng);
      ar[i] = v;
      ad[i] = v;
    }
    std::vector<Rat> br(rows);
    std::vector<double> bd(rows);
    for (int i = 0; i < rows; ++i) {
      int v = coef(rng);
      br[i] = v;
      bd[i] = v;
    }
    std::vector<Rat> cr(cols, Rat(0));
    std::vector<double> cd(cols, 0.0);
    auto se = solve_standard_lp<Rat>(rows, cols, ar, br, cr);
    auto sd = solve_standard_lp<double>(rows, cols, ad, bd, cd);
    if (se.status != sd.status) ++disagreements;
    if (se.status == LpStatus::kInfeasible) {
      // Certificate must verify.
      for (int j = 0; j < cols; ++j) {
        Rat ya = 0;
        for (int i = 0; i < rows; ++i) ya += se.farkas[i] * ar[i * cols + j];
        CHECK(ya <= 0);
      }
      Rat yb = 0;
      for (int i = 0; i < rows; ++i) yb += se.farkas[i] * br[i];
      CHECK(yb > 0);
    }
  }
  // Small random integer systems are well-conditioned; the guarded double
  // solver must match the exact one.
  CHECK(disagreements == 0);
}
