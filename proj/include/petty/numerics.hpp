#pragma once

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <random>
#include <thread>
#include <vector>

#include "petty/errors.hpp"
#include "petty/geometry.hpp"

namespace petty {

/// Brent's method on a bracketing interval [a,b] with f(a)*f(b) <= 0.
/// Returns the abscissa of the root to absolute tolerance xtol.
template <class F>
double brent_root(F&& f, double a, double b, double fa, double fb,
                  double xtol, int max_iter = 200) {
  if (fa == 0) return a;
  if (fb == 0) return b;
  if ((fa > 0) == (fb > 0)) throw InternalError("brent_root: interval does not bracket a root");
  double c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < max_iter; ++it) {
    if ((fb > 0) == (fc > 0)) {
      c = a, fc = fa, d = b - a, e = d;
    }
    if (std::abs(fc) < std::abs(fb)) {
      a = b, b = c, c = a;
      fa = fb, fb = fc, fc = fa;
    }
    const double tol1 = 2 * std::numeric_limits<double>::epsilon() * std::abs(b) + 0.5 * xtol;
    const double xm = 0.5 * (c - b);
    if (std::abs(xm) <= tol1 || fb == 0) return b;
    if (std::abs(e) >= tol1 && std::abs(fa) > std::abs(fb)) {
      double p, q, r, s = fb / fa;
      if (a == c) {
        p = 2 * xm * s;
        q = 1 - s;
      } else {
        q = fa / fc, r = fb / fc;
        p = s * (2 * xm * q * (q - r) - (b - a) * (r - 1));
        q = (q - 1) * (r - 1) * (s - 1);
      }
      if (p > 0) q = -q;
      p = std::abs(p);
      if (2 * p < std::min(3 * xm * q - std::abs(tol1 * q), std::abs(e * q))) {
        e = d, d = p / q;
      } else {
        d = xm, e = d;
      }
    } else {
      d = xm, e = d;
    }
    a = b, fa = fb;
    b += std::abs(d) > tol1 ? d : (xm > 0 ? tol1 : -tol1);
    fb = f(b);
  }
  return b;
}

/// Bisection on a monotone boolean predicate: pred(lo) true, pred(hi) false.
/// Returns the largest abscissa (within xtol) where pred holds.
template <class P>
double bisect_predicate(P&& pred, double lo, double hi, double xtol, int max_iter = 200) {
  for (int it = 0; it < max_iter && hi - lo > xtol; ++it) {
    double mid = 0.5 * (lo + hi);
    if (pred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lo;
}

struct PatternSearchResult {
  VecN x;
  double value = 0;
  int evals = 0;
};

/// Derivative-free compass search with shrinking steps. Coordinate
/// directions plus a rotating set of random directions so kinked
/// objectives (polyhedral norms) cannot stall it on a ridge.
template <class F>
PatternSearchResult pattern_search(F&& f, VecN start, double step0, double step_min,
                                   int max_iter, std::mt19937_64& rng) {
  const size_t n = start.size();
  PatternSearchResult best;
  best.x = std::move(start);
  best.value = f(best.x);
  best.evals = 1;
  double step = step0;
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<VecN> dirs;
  auto rebuild_dirs = [&]() {
    dirs.clear();
    for (size_t i = 0; i < n; ++i) {
      VecN e(n, 0.0);
      e[i] = 1.0;
      dirs.push_back(e);
      e[i] = -1.0;
      dirs.push_back(e);
    }
    for (size_t k = 0; k < n; ++k) {
      VecN d(n);
      double s = 0;
      for (size_t i = 0; i < n; ++i) {
        d[i] = gauss(rng);
        s += d[i] * d[i];
      }
      s = std::sqrt(std::max(s, 1e-300));
      for (size_t i = 0; i < n; ++i) d[i] /= s;
      dirs.push_back(d);
      dirs.push_back(vecn_scale(d, -1.0));
    }
  };
  rebuild_dirs();
  for (int it = 0; it < max_iter && step > step_min; ++it) {
    bool improved = false;
    for (const VecN& d : dirs) {
      VecN cand = vecn_add(best.x, vecn_scale(d, step));
      double v = f(cand);
      ++best.evals;
      if (v < best.value) {
        best.value = v;
        best.x = std::move(cand);
        improved = true;
        break;
      }
    }
    if (!improved) {
      step *= 0.5;
      rebuild_dirs();
    }
  }
  return best;
}

/// Deterministic seeded RNG for all randomized validation and tests.
inline std::mt19937_64 seeded_rng(uint64_t seed) { return std::mt19937_64(seed); }

inline VecN random_gaussian_vec(std::mt19937_64& rng, size_t dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  VecN v(dim);
  for (auto& c : v) c = g(rng);
  return v;
}

inline VecN random_unit_vec(std::mt19937_64& rng, size_t dim) {
  for (;;) {
    VecN v = random_gaussian_vec(rng, dim);
    double n = vecn_norm2(v);
    if (n > 1e-6) return vecn_scale(v, 1.0 / n);
  }
}

/// Runs fn(i) for i in [0,n). Work is split across threads; results must be
/// written to caller-owned per-index slots so the merge is deterministic.
inline void parallel_for(size_t n, const std::function<void(size_t)>& fn,
                         unsigned threads = 0) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  if (threads <= 1 || n <= 1) {
    for (size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  std::atomic<size_t> next{0};
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        size_t i = next.fetch_add(1);
        if (i >= n) return;
        fn(i);
      }
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace petty
