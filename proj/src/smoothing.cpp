#include <algorithm>
#include <cmath>
#include <sstream>

#include "petty/errors.hpp"
#include "petty/norms.hpp"
#include "petty/numerics.hpp"
#include "petty/simplex.hpp"

namespace petty {

namespace {

// Vertex list of a polytopal stand-in for the base ball. For l1l2 the
// disc rim is discretized finely enough that the gauge error stays well
// inside the epsilon budget.
std::vector<VecN> polytopal_vertices(const Norm& base, double epsilon) {
  if (const auto* poly = std::get_if<PolytopeSpec>(&base.spec())) {
    return poly->vertices_double;
  }
  if (const auto* lp = std::get_if<LpSpec>(&base.spec())) {
    const int n = base.dim();
    std::vector<VecN> v;
    if (!lp->infinity && lp->p == 1.0) {
      for (int i = 0; i < n; ++i) {
        VecN e(n, 0.0);
        e[i] = 1.0;
        v.push_back(e);
        e[i] = -1.0;
        v.push_back(e);
      }
      return v;
    }
    if (lp->infinity) {
      if (n > 6) throw InputError("smoothing of linf supported up to dimension 6");
      for (int mask = 0; mask < (1 << n); ++mask) {
        VecN p(n);
        for (int i = 0; i < n; ++i) p[i] = (mask >> i) & 1 ? 1.0 : -1.0;
        v.push_back(std::move(p));
      }
      return v;
    }
    throw InternalError("polytopal_vertices called on a smooth lp norm");
  }
  if (std::holds_alternative<L1L2Spec>(base.spec())) {
    const int n = base.dim();
    if (n > 3) throw InputError("smoothing of l1l2 supported up to dimension 3");
    std::vector<VecN> v;
    VecN e(n, 0.0);
    e[0] = 1.0;
    v.push_back(e);
    e[0] = -1.0;
    v.push_back(e);
    if (n == 2) {
      VecN u(n, 0.0);
      u[1] = 1.0;
      v.push_back(u);
      u[1] = -1.0;
      v.push_back(u);
      return v;
    }
    int m = static_cast<int>(std::ceil(M_PI / std::sqrt(0.4 * epsilon))) + 4;
    m += m % 2;  // even, so the rim stays centrally symmetric
    for (int j = 0; j < m; ++j) {
      double ang = 2.0 * M_PI * j / m;
      v.push_back({0.0, std::cos(ang), std::sin(ang)});
    }
    return v;
  }
  throw InputError("smoothing of an already-smoothed norm is not supported");
}

struct BuildInputs {
  std::vector<VecN> half_facets;
  double r2max = 1.0;  // euclidean outradius of the polytope
  double min_anchor_gap = 1.0;
  std::vector<VecN> bump_dirs;  // anchors deduped across +/- pairs
};

double facet_dot(const VecN& w, const VecN& x) {
  double s = 0;
  for (size_t i = 0; i < w.size(); ++i) s += w[i] * x[i];
  return s;
}

}  // namespace

Norm smooth_approx(const Norm& base, const std::vector<VecN>& anchors,
                   const SmoothingParams& params) {
  if (!(params.epsilon > 0.0 && params.epsilon < 1.0)) {
    throw InputError("smoothing epsilon must lie in (0,1)");
  }
  const int dim = base.dim();
  const double eps = params.epsilon;
  for (const auto& a : anchors) {
    if (static_cast<int>(a.size()) != dim) throw InputError("anchor dimension mismatch");
    double g = base.eval(std::span<const double>(a.data(), a.size()));
    double gate = std::max(params.anchor_tolerance * 10.0, std::min(1e-4, 0.5 * eps));
    if (std::abs(g - 1.0) > gate) {
      throw InputError("anchor is not a unit vector of the base norm");
    }
  }

  SmoothedData data;
  data.base = std::make_shared<Norm>(base);
  data.epsilon = eps;
  data.anchors = anchors;

  if (base.is_smooth_strictly_convex()) {
    data.passthrough = true;
    for (const auto& a : anchors) {
      double g = base.eval(std::span<const double>(a.data(), a.size()));
      if (std::abs(g - 1.0) > params.anchor_tolerance) {
        throw SolverError("smoothing failed: anchor off unit for an already-smooth base");
      }
    }
    return Norm::smoothed(std::move(data));
  }

  BuildInputs in;
  std::vector<VecN> verts = polytopal_vertices(base, eps);
  in.half_facets = enumerate_half_facets(verts, dim);
  if (in.half_facets.empty() || in.half_facets.size() > 256) {
    throw SolverError("smoothing failed: facet enumeration out of range");
  }
  for (const auto& v : verts) in.r2max = std::max(in.r2max, vecn_norm2(v));

  // Dedupe anchors across +/- pairs; the evaluator treats a bump and its
  // antipode as one correction.
  for (const auto& a : anchors) {
    VecN dir = vecn_scale(a, 1.0 / std::max(vecn_norm2(a), 1e-300));
    bool dup = false;
    for (const auto& d : in.bump_dirs) {
      if (std::abs(std::abs(vecn_dot(dir, d)) - 1.0) < 1e-12) {
        dup = true;
        break;
      }
    }
    if (!dup) in.bump_dirs.push_back(dir);
  }
  for (size_t i = 0; i < in.bump_dirs.size(); ++i) {
    for (size_t j = i + 1; j < in.bump_dirs.size(); ++j) {
      double gap = 1.0 - std::abs(vecn_dot(in.bump_dirs[i], in.bump_dirs[j]));
      in.min_anchor_gap = std::min(in.min_anchor_gap, gap);
    }
  }

  const int nf = static_cast<int>(in.half_facets.size());
  const double lambda_floor = 1e-4;
  const double margin_eps = 0.1 * eps;
  double q_target = std::max({std::log(2.0 * nf) / std::log1p(margin_eps),
                              std::log(1.0 / lambda_floor) / std::log1p(margin_eps), 64.0});
  int log2_q = static_cast<int>(std::ceil(std::log2(q_target)));
  const double delta = 0.05 * eps / in.r2max;
  double bump_width = std::min(0.2 * in.min_anchor_gap, 0.02);
  bump_width = std::max(bump_width, 1e-9);

  std::string failure;
  for (int attempt = 0; attempt <= params.max_retries; ++attempt) {
    data.facet_count = nf;
    data.facet_flat.clear();
    for (const auto& w : in.half_facets) {
      for (double c : w) data.facet_flat.push_back(c);
    }
    data.log2_q = std::min(log2_q, 40);
    const double q = std::ldexp(1.0, data.log2_q);
    data.r_cut = std::exp(-690.0 / q);
    data.delta = delta;
    data.weights.assign(nf, 1.0);
    data.bumps.clear();

    // Anchor calibration, first by reweighting facets (keeps the result a
    // genuine norm), falling back to radial bump corrections.
    bool calibrated = anchors.empty();
    if (!anchors.empty()) {
      std::vector<LpRow<double>> rows;
      bool representable = true;
      for (const auto& a : anchors) {
        LpRow<double> row;
        row.rel = LpRel::kEq;
        double target = 1.0 - delta * vecn_norm2(a);
        if (target <= 0) {
          representable = false;
          break;
        }
        row.rhs = std::exp(q * std::log(target));
        if (row.rhs < 1e-250) representable = false;
        row.coeff.resize(nf);
        for (int j = 0; j < nf; ++j) {
          double r = std::abs(facet_dot(in.half_facets[j], a));
          row.coeff[j] = r > 0 ? std::exp(q * std::log(r)) : 0.0;
          if (!std::isfinite(row.coeff[j])) representable = false;
        }
        rows.push_back(std::move(row));
      }
      if (representable) {
        std::vector<LpBounds<double>> bounds(nf);
        for (auto& b : bounds) {
          b.lower = lambda_floor;
          b.upper = 2.0;
        }
        std::vector<double> obj(nf, 1.0);
        try {
          LpSolution<double> sol = solve_general_lp<double>(nf, rows, bounds, obj);
          if (sol.status == LpStatus::kOptimal) {
            data.weights.assign(sol.x.begin(), sol.x.end());
            calibrated = true;
          }
        } catch (const SolverError&) {
          calibrated = false;
        }
      }
      if (calibrated) {
        Norm probe = Norm::smoothed(data);
        for (const auto& a : anchors) {
          double v = probe.eval(std::span<const double>(a.data(), a.size()));
          if (std::abs(v - 1.0) > 0.5 * params.anchor_tolerance) {
            calibrated = false;
            break;
          }
        }
        if (!calibrated) data.weights.assign(nf, 1.0);
      }
    }
    if (!calibrated) {
      Norm unc = Norm::smoothed(data);
      for (const auto& dir : in.bump_dirs) {
        AnchorBump b;
        b.center_dir = dir;
        b.width = bump_width;
        // Gain computed against the anchor with this direction.
        const VecN* a = nullptr;
        for (const auto& cand : anchors) {
          VecN cd = vecn_scale(cand, 1.0 / std::max(vecn_norm2(cand), 1e-300));
          if (std::abs(std::abs(vecn_dot(cd, dir)) - 1.0) < 1e-12) {
            a = &cand;
            break;
          }
        }
        if (a == nullptr) throw InternalError("bump direction without matching anchor");
        double v = unc.eval(std::span<const double>(a->data(), a->size()));
        b.log_gain = -std::log(v);
        data.bumps.push_back(std::move(b));
      }
    }

    // Validation: sandwich sampling, anchor values, chord convexity.
    Norm result = Norm::smoothed(data);
    auto rng = seeded_rng(params.seed + attempt);
    failure.clear();

    for (const auto& a : anchors) {
      double v = result.eval(std::span<const double>(a.data(), a.size()));
      if (std::abs(v - 1.0) > params.anchor_tolerance) {
        std::ostringstream os;
        os << "anchor value " << v << " off unit by " << std::abs(v - 1.0);
        failure = os.str();
        break;
      }
    }
    if (failure.empty()) {
      for (int s = 0; s < params.sample_count; ++s) {
        VecN x = random_gaussian_vec(rng, dim);
        double bx = base.eval(std::span<const double>(x.data(), x.size()));
        double nx = result.eval(std::span<const double>(x.data(), x.size()));
        const double slack = 1e-12 * (bx + nx);
        if (bx < (1.0 - eps) * nx - slack || bx > (1.0 + eps) * nx + slack) {
          std::ostringstream os;
          os << "sandwich violated at sample " << s << ": base=" << bx << " approx=" << nx;
          failure = os.str();
          break;
        }
      }
    }
    if (failure.empty()) {
      // Chord midpoints must stay strictly interior; the delta term gives
      // the margin scale. Extra chords target each bump's support.
      auto chord_check = [&](const VecN& d1, const VecN& d2) -> bool {
        VecN x = d1, y = d2;
        double nx = result.eval(std::span<const double>(x.data(), x.size()));
        double ny = result.eval(std::span<const double>(y.data(), y.size()));
        if (nx <= 0 || ny <= 0) return true;
        x = vecn_scale(x, 1.0 / nx);
        y = vecn_scale(y, 1.0 / ny);
        VecN m = vecn_scale(vecn_add(x, y), 0.5);
        double dist = vecn_norm2(vecn_sub(x, y));
        if (dist < 1e-6) return true;
        double nm = result.eval(std::span<const double>(m.data(), m.size()));
        return nm <= 1.0 - delta * dist * dist / 64.0 + 1e-12;
      };
      for (int s = 0; s < params.chord_samples && failure.empty(); ++s) {
        VecN d1 = random_gaussian_vec(rng, dim);
        VecN d2 = random_gaussian_vec(rng, dim);
        if (!chord_check(d1, d2)) failure = "chord midpoint not strictly interior";
      }
      for (const auto& b : data.bumps) {
        for (int s = 0; s < 64 && failure.empty(); ++s) {
          VecN d1 = vecn_add(b.center_dir,
                             vecn_scale(random_unit_vec(rng, dim), 2.0 * b.width));
          VecN d2 = vecn_add(b.center_dir,
                             vecn_scale(random_unit_vec(rng, dim), 2.0 * b.width));
          if (!chord_check(d1, d2)) failure = "chord midpoint near anchor bump not interior";
        }
      }
    }

    if (failure.empty()) return result;
    log2_q = std::min(log2_q + 2, 40);
    bump_width *= 0.5;
  }
  throw SolverError("smoothing failed: " + failure);
}

}  // namespace petty
