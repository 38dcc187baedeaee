#include "petty/rational.hpp"

#include <cmath>
#include <cstdlib>

#include "petty/errors.hpp"

namespace petty {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw InputError("empty rational literal");
  // Decimal form: sign, digits, optional fraction. No exponents.
  auto is_decimal = [&]() {
    bool seen_digit = false, seen_dot = false;
    for (size_t i = 0; i < s.size(); ++i) {
      char c = s[i];
      if (c == '+' || c == '-') {
        if (i != 0) return false;
      } else if (c == '.') {
        if (seen_dot) return false;
        seen_dot = true;
      } else if (c >= '0' && c <= '9') {
        seen_digit = true;
      } else {
        return false;
      }
    }
    return seen_digit && seen_dot;
  };
  try {
    if (is_decimal()) {
      size_t dot = s.find('.');
      std::string digits = s.substr(0, dot) + s.substr(dot + 1);
      size_t frac_len = s.size() - dot - 1;
      Rat numer(digits.c_str());
      Rat denom = 1;
      for (size_t i = 0; i < frac_len; ++i) denom *= 10;
      return numer / denom;
    }
    Rat r(s.c_str());
    return r;
  } catch (const std::exception&) {
    throw InputError("malformed rational literal: '" + s + "'");
  }
}

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw InputError("non-finite value cannot become a rational");
  return Rat(x);
}

std::string rat_to_string(const Rat& r) { return r.str(); }

double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

namespace {

// Returns rank; eliminates in place.
int gauss_rank(RatMat& m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  size_t rank = 0;
  for (size_t col = 0; col < cols && rank < rows; ++col) {
    size_t pivot = rank;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    const Rat inv = m[rank][col];
    for (size_t j = col; j < cols; ++j) m[rank][j] /= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col] == 0) continue;
      const Rat f = m[i][col];
      for (size_t j = col; j < cols; ++j) m[i][j] -= f * m[rank][j];
    }
    ++rank;
  }
  return static_cast<int>(rank);
}

}  // namespace

int rational_rank(RatMat m) { return gauss_rank(m); }

int rational_rank_augmented(RatMat a, const RatVec& b) {
  for (size_t i = 0; i < a.size(); ++i) a[i].push_back(b[i]);
  return gauss_rank(a);
}

std::vector<double> rat_vec_to_double(const RatVec& v) {
  std::vector<double> r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = rat_to_double(v[i]);
  return r;
}

RatVec rat_vec_from_double(const std::vector<double>& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = rat_from_double(v[i]);
  return r;
}

}  // namespace petty
