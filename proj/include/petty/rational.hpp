#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <vector>

namespace petty {

/// Exact rational scalar used by every certificate-producing path.
using Rat = boost::multiprecision::mpq_rational;

using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Parses "p/q", "p", or a decimal string like "-0.25" into an exact rational.
/// Throws InputError on malformed input.
Rat rat_from_string(const std::string& s);

/// Exact conversion of a finite double (doubles are binary rationals).
Rat rat_from_double(double x);

std::string rat_to_string(const Rat& r);

double rat_to_double(const Rat& r);

Rat rat_abs(const Rat& r);

/// Rank of a rational matrix by exact Gaussian elimination.
int rational_rank(RatMat m);

/// Rank of [A | b]; together with rational_rank(A) this decides whether
/// A x = b is consistent.
int rational_rank_augmented(RatMat a, const RatVec& b);

inline RatVec rat_vec_sub(const RatVec& a, const RatVec& b) {
  RatVec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Rat rat_dot(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline Rat rat_l1_norm(const RatVec& a) {
  Rat s = 0;
  for (const Rat& v : a) s += rat_abs(v);
  return s;
}

inline Rat rat_l1_dist(const RatVec& a, const RatVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += rat_abs(a[i] - b[i]);
  return s;
}

inline Rat rat_linf_norm(const RatVec& a) {
  Rat s = 0;
  for (const Rat& v : a) {
    Rat m = rat_abs(v);
    if (m > s) s = m;
  }
  return s;
}

std::vector<double> rat_vec_to_double(const RatVec& v);
RatVec rat_vec_from_double(const std::vector<double>& v);

}  // namespace petty
