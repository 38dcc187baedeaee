#pragma once

#include <cstdint>
#include <functional>
#include <memory>

#include "petty/geometry.hpp"
#include "petty/norms.hpp"

namespace petty {

/// Planar convex body given by an interior point and a membership oracle.
/// Bodies need not be symmetric (ball sections are not). When the body is
/// a sublevel set {level <= 1} the level function is attached too; the
/// solvers then use superlinear root finding instead of plain bisection.
struct ConvexBody2D {
  Vec2 interior;
  std::function<bool(const Vec2&)> member;
  std::function<double(const Vec2&)> level;  // optional; boundary at level == 1
  double tolerance = 1e-10;
  double max_radius = 1e6;

  bool is_member(const Vec2& p) const { return member(p); }
  bool has_level() const { return static_cast<bool>(level); }
};

/// Unit ball of a planar norm as a body oracle (interior point 0).
ConvexBody2D body_from_norm(std::shared_ptr<const Norm> norm);

/// Axis-aligned ellipse x^2/a^2 + y^2/b^2 <= 1.
ConvexBody2D body_from_ellipse(double a, double b);

/// Convex polygon given by vertices in order (convexity validated).
ConvexBody2D body_from_polygon(const std::vector<Vec2>& vertices);

/// Scaled distance along origin->direction until the boundary:
/// returns s with origin + s*direction on the boundary (within tolerance).
double ray_to_boundary_param(const ConvexBody2D& body, const Vec2& origin, const Vec2& dir);

/// Boundary point along the ray; spec operation ray_to_boundary.
Vec2 ray_to_boundary(const ConvexBody2D& body, const Vec2& origin, const Vec2& dir);

/// max { t >= 0 : x + t*v in body }; 0 when the ray exits immediately.
/// x must be a member (within tolerance).
double chord_extent(const ConvexBody2D& body, const Vec2& x, const Vec2& v);

/// Euclidean distance from p to the boundary along the ray from the
/// interior point; used as the residual measure everywhere.
double boundary_residual(const ConvexBody2D& body, const Vec2& p);

/// Sampled convexity validation for user-supplied membership oracles:
/// random member pairs, random convex combinations must be members.
/// Returns false (with a witness pair) on the first violation.
bool validate_convexity(const ConvexBody2D& body, int pairs, uint64_t seed,
                        Vec2* witness_a = nullptr, Vec2* witness_b = nullptr);

/// Checks the interior point has strict margin: membership holds on a
/// circle of radius tolerance around it.
bool validate_interior_margin(const ConvexBody2D& body);

}  // namespace petty
