#include "petty/body.hpp"

#include <cmath>

#include "petty/errors.hpp"
#include "petty/numerics.hpp"

namespace petty {

ConvexBody2D body_from_norm(std::shared_ptr<const Norm> norm) {
  if (norm->dim() != 2) throw InputError("body_from_norm needs a planar norm");
  ConvexBody2D b;
  b.interior = {0.0, 0.0};
  auto lv = [norm](const Vec2& p) { return norm->eval(p); };
  b.level = lv;
  b.member = [lv](const Vec2& p) { return lv(p) <= 1.0 + 1e-10; };
  return b;
}

ConvexBody2D body_from_ellipse(double a, double b) {
  if (!(a > 0) || !(b > 0)) throw InputError("ellipse semi-axes must be positive");
  ConvexBody2D body;
  body.interior = {0.0, 0.0};
  auto lv = [a, b](const Vec2& p) {
    return std::sqrt(p.x * p.x / (a * a) + p.y * p.y / (b * b));
  };
  body.level = lv;
  body.member = [lv](const Vec2& p) { return lv(p) <= 1.0 + 1e-10; };
  return body;
}

ConvexBody2D body_from_polygon(const std::vector<Vec2>& vertices) {
  const size_t n = vertices.size();
  if (n < 3) throw InputError("polygon needs at least 3 vertices");
  Vec2 centroid{0, 0};
  for (const Vec2& v : vertices) centroid = centroid + v;
  centroid = centroid * (1.0 / static_cast<double>(n));
  // Edge half-planes, normalized so level(centroid) < 1 and boundary = 1.
  struct Edge {
    Vec2 normal;
    double offset;
  };
  auto edges = std::make_shared<std::vector<Edge>>();
  for (size_t i = 0; i < n; ++i) {
    const Vec2& p = vertices[i];
    const Vec2& q = vertices[(i + 1) % n];
    Vec2 e = q - p;
    Vec2 nrm{e.y, -e.x};
    double side = nrm.dot(centroid - p);
    if (side > 0) nrm = -nrm;  // make centroid the negative side
    if (std::abs(side) < 1e-14) throw InputError("degenerate polygon edge");
    double off = nrm.dot(p - centroid);
    if (off <= 0) throw InputError("polygon is not convex around its centroid");
    edges->push_back({nrm * (1.0 / off), 0.0});
  }
  ConvexBody2D body;
  body.interior = centroid;
  auto lv = [edges, centroid](const Vec2& p) {
    double m = 0;
    Vec2 d = p - centroid;
    for (const auto& e : *edges) m = std::max(m, e.normal.dot(d));
    return m;
  };
  body.level = lv;
  body.member = [lv](const Vec2& p) { return lv(p) <= 1.0 + 1e-10; };
  // Reject non-convex inputs: every vertex must be on the boundary.
  for (const Vec2& v : vertices) {
    if (std::abs(lv(v) - 1.0) > 1e-9) {
      throw InputError("polygon is not convex (vertex off its own hull boundary)");
    }
  }
  return body;
}

namespace {

// March outward from t_lo until pred fails, then bracket. pred(t_lo) must
// hold. Returns (t_in, t_out) with pred(t_in) true, pred(t_out) false.
template <class P>
std::pair<double, double> march_out(P&& pred, double t_lo, double step, double t_max) {
  double prev = t_lo;
  double t = t_lo + step;
  for (int i = 0; i < 200; ++i) {
    if (t > t_max) {
      if (!pred(t_max)) return {prev, t_max};
      throw SolverError("body unbounded or oracle inconsistent");
    }
    if (!pred(t)) return {prev, t};
    prev = t;
    t = t_lo + (t - t_lo) * 2.0;
  }
  throw SolverError("body unbounded or oracle inconsistent");
}

}  // namespace

double ray_to_boundary_param(const ConvexBody2D& body, const Vec2& origin, const Vec2& dir) {
  const double dn = dir.norm2();
  if (dn == 0) throw InputError("ray direction must be nonzero");
  if (!body.is_member(origin)) throw InputError("ray origin is not a member of the body");
  const double step0 = 0.5;
  if (body.has_level()) {
    auto f = [&](double t) { return body.level(origin + t * dir) - 1.0; };
    if (f(0.0) >= 0.0) {
      // Origin on (or within tolerance of) the boundary already.
      return 0.0;
    }
    auto inside = [&](double t) { return f(t) < 0.0; };
    auto [tin, tout] = march_out(inside, 0.0, step0 / dn, body.max_radius / dn);
    return brent_root(f, tin, tout, f(tin), f(tout), body.tolerance / dn);
  }
  auto inside = [&](const double t) { return body.is_member(origin + t * dir); };
  auto [tin, tout] = march_out(inside, 0.0, step0 / dn, body.max_radius / dn);
  return bisect_predicate(inside, tin, tout, body.tolerance / dn);
}

Vec2 ray_to_boundary(const ConvexBody2D& body, const Vec2& origin, const Vec2& dir) {
  return origin + ray_to_boundary_param(body, origin, dir) * dir;
}

double chord_extent(const ConvexBody2D& body, const Vec2& x, const Vec2& v) {
  const double dn = v.norm2();
  if (dn == 0) throw InputError("extent direction must be nonzero");
  const double band = body.tolerance;
  if (body.has_level()) {
    const double l0 = body.level(x);
    if (l0 > 1.0 + 10 * band) throw InputError("extent base point is not a member");
    // level along the chord is convex; find the far crossing of 1 + band.
    auto f = [&](double t) { return body.level(x + t * v) - (1.0 + band); };
    const double probe = body.tolerance * 8.0 / dn;
    if (f(probe) > 0.0) return 0.0;  // exits immediately
    auto inside = [&](double t) { return f(t) < 0.0; };
    auto [tin, tout] = march_out(inside, probe, 0.5 / dn, body.max_radius / dn);
    double root = brent_root(f, tin, tout, f(tin), f(tout), body.tolerance / dn);
    return root;
  }
  if (!body.is_member(x)) throw InputError("extent base point is not a member");
  auto inside = [&](double t) { return body.is_member(x + t * v); };
  const double probe = body.tolerance * 8.0 / dn;
  if (!inside(probe)) return 0.0;
  auto [tin, tout] = march_out(inside, probe, 0.5 / dn, body.max_radius / dn);
  return bisect_predicate(inside, tin, tout, body.tolerance / dn);
}

double boundary_residual(const ConvexBody2D& body, const Vec2& p) {
  Vec2 d = p - body.interior;
  const double dn = d.norm2();
  if (dn < body.tolerance) {
    // Interior point itself: residual is its distance to the boundary,
    // which is what the caller gets by probing any direction.
    d = {1.0, 0.0};
  }
  double s = ray_to_boundary_param(body, body.interior, d);
  Vec2 hit = body.interior + s * d;
  return (p - hit).norm2();
}

bool validate_convexity(const ConvexBody2D& body, int pairs, uint64_t seed,
                        Vec2* witness_a, Vec2* witness_b) {
  auto rng = seeded_rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * M_PI);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < pairs; ++i) {
    // Random member points via boundary sampling.
    double a1 = angle(rng), a2 = angle(rng);
    double r1 = std::sqrt(unit(rng)), r2 = std::sqrt(unit(rng));
    Vec2 d1{std::cos(a1), std::sin(a1)}, d2{std::cos(a2), std::sin(a2)};
    double s1, s2;
    try {
      s1 = ray_to_boundary_param(body, body.interior, d1);
      s2 = ray_to_boundary_param(body, body.interior, d2);
    } catch (const SolverError&) {
      if (witness_a) *witness_a = body.interior;
      return false;
    }
    Vec2 p = body.interior + (r1 * s1 * 0.999) * d1;
    Vec2 q = body.interior + (r2 * s2 * 0.999) * d2;
    if (!body.is_member(p) || !body.is_member(q)) continue;
    double lam = unit(rng);
    Vec2 mid = p * lam + q * (1.0 - lam);
    if (!body.is_member(mid)) {
      if (witness_a) *witness_a = p;
      if (witness_b) *witness_b = q;
      return false;
    }
  }
  return true;
}

bool validate_interior_margin(const ConvexBody2D& body) {
  for (int k = 0; k < 16; ++k) {
    double a = 2.0 * M_PI * k / 16.0;
    Vec2 p = body.interior + Vec2{std::cos(a), std::sin(a)} * body.tolerance;
    if (!body.is_member(p)) return false;
  }
  return body.is_member(body.interior);
}

}  // namespace petty
