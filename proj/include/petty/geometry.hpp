#pragma once

#include <cmath>
#include <vector>

namespace petty {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2() = default;
  constexpr Vec2(double px, double py) : x(px), y(py) {}

  constexpr Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  friend constexpr Vec2 operator*(double s, const Vec2& v) { return v * s; }

  constexpr double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  /// z-component of the 3D cross product; twice the signed area of (0,this,o).
  constexpr double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm2() const { return std::sqrt(x * x + y * y); }
};

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Vec3() = default;
  constexpr Vec3(double px, double py, double pz) : x(px), y(py), z(pz) {}

  constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
  constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
  constexpr Vec3 operator-() const { return {-x, -y, -z}; }
  friend constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

  constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
  constexpr Vec3 cross(const Vec3& o) const {
    return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
  }
  double norm2() const { return std::sqrt(x * x + y * y + z * z); }
  Vec3 normalized() const {
    double n = norm2();
    return n > 0 ? Vec3{x / n, y / n, z / n} : Vec3{};
  }
};

/// General-dimension dense vector; dimensions here are small (<= ~10).
using VecN = std::vector<double>;

inline VecN vecn_sub(const VecN& a, const VecN& b) {
  VecN r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline VecN vecn_add(const VecN& a, const VecN& b) {
  VecN r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline VecN vecn_scale(const VecN& a, double s) {
  VecN r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] * s;
  return r;
}

inline double vecn_dot(const VecN& a, const VecN& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

inline double vecn_norm2(const VecN& a) { return std::sqrt(vecn_dot(a, a)); }

inline VecN to_vecn(const Vec2& v) { return {v.x, v.y}; }
inline VecN to_vecn(const Vec3& v) { return {v.x, v.y, v.z}; }

}  // namespace petty
