#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "petty/geometry.hpp"
#include "petty/rational.hpp"

namespace petty {

class Norm;

/// ell_p norm; `infinity` selects the max norm and ignores `p`.
struct LpSpec {
  double p = 2.0;
  bool infinity = false;
  int dim = 2;
};

/// Gauge of the convex hull of a centrally symmetric, spanning vertex set.
/// Vertices are exact rationals; doubles and facets are cached for the
/// numeric paths.
struct PolytopeSpec {
  int dim = 2;
  RatMat vertices;  // full list, closed under negation

  std::vector<VecN> vertices_double;
  std::vector<double> facet_flat;  // half list of unit-offset normals, row-major
  int facet_count = 0;
};

/// |x_1| + euclidean norm of the remaining coordinates.
struct L1L2Spec {
  int dim = 2;
};

/// Multiplicative radial correction pinning one anchor direction to norm 1.
struct AnchorBump {
  VecN center_dir;  // euclidean-unit anchor direction
  double width = 0.1;
  double log_gain = 0.0;
};

/// Smooth strictly convex replacement of a polytopal gauge: a weighted
/// power mean of the facet functionals (even power q), optionally bump-
/// corrected so every anchor sits at norm 1.
struct SmoothedData {
  std::shared_ptr<const Norm> base;
  double epsilon = 0.1;
  std::vector<VecN> anchors;

  bool passthrough = false;  // base is already smooth and strictly convex
  std::vector<double> facet_flat;
  int facet_count = 0;
  std::vector<double> weights;
  int log2_q = 7;
  double r_cut = 0.0;   // facet ratios below this underflow to zero in r^q
  double delta = 0.0;   // euclidean rounding of the dual body (adds delta*|x|_2)
  std::vector<AnchorBump> bumps;
};

using NormSpec = std::variant<LpSpec, PolytopeSpec, L1L2Spec, SmoothedData>;

/// Immutable norm value; every operation is a pure function of the spec
/// and safe to call concurrently.
class Norm {
 public:
  static Norm lp(double p, int dim);
  static Norm linf(int dim);
  /// Validates central symmetry, spanning, and vertex extremality, then
  /// caches the facet description. Throws InputError on violations.
  static Norm polytope(RatMat vertices);
  static Norm l1l2(int dim);
  static Norm smoothed(SmoothedData data);

  int dim() const { return dim_; }

  double eval(std::span<const double> x) const;
  double eval(const Vec2& v) const {
    const double buf[2] = {v.x, v.y};
    return eval(std::span<const double>(buf, 2));
  }
  double eval(const Vec3& v) const {
    const double buf[3] = {v.x, v.y, v.z};
    return eval(std::span<const double>(buf, 3));
  }

  /// Exact gauge for polyhedral-rational specs (l1, linf, polytope);
  /// nullopt otherwise.
  std::optional<Rat> eval_exact(const RatVec& x) const;

  bool is_polyhedral() const;
  bool is_smooth_strictly_convex() const;

  const NormSpec& spec() const { return spec_; }
  std::string describe() const;

 private:
  explicit Norm(NormSpec spec);

  NormSpec spec_;
  int dim_ = 0;
};

/// Exact polytope gauge by LP: min sum(mu) s.t. V mu = x, mu >= 0.
Rat polytope_gauge_exact(const PolytopeSpec& spec, const RatVec& x);

/// Brute-force facet enumeration for small symmetric vertex sets
/// (dim <= 6). Returns the half list of unit-offset facet normals.
std::vector<VecN> enumerate_half_facets(const std::vector<VecN>& vertices, int dim);

/// Vertex lists for the polytopal unit balls of l1 / linf.
RatMat cross_polytope_vertices(int dim);
RatMat cube_vertices(int dim);

struct SmoothingParams {
  double epsilon = 0.1;          // required in (0,1)
  double anchor_tolerance = 1e-9;
  int sample_count = 10000;
  int chord_samples = 2000;
  uint64_t seed = 0x5eedu;
  int max_retries = 3;
};

/// Smooth strictly convex approximation with the two-sided sandwich
///   (1-eps) * approx(x) <= base(x) <= (1+eps) * approx(x)
/// and every anchor held at norm 1 within anchor_tolerance. Validated by
/// seeded sampling; throws SolverError with the violating sample on failure.
Norm smooth_approx(const Norm& base, const std::vector<VecN>& anchors,
                   const SmoothingParams& params);

}  // namespace petty
