#include "petty/norms.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <map>
#include <sstream>

#include "petty/errors.hpp"
#include "petty/simplex.hpp"

namespace petty {

namespace {

double bump_profile(double s) {
  // C-infinity, compactly supported on |s| < 1, value 1 at 0.
  const double s2 = s * s;
  if (s2 >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (1.0 - s2));
}

double eval_lp(const LpSpec& spec, std::span<const double> x) {
  if (spec.infinity) {
    double m = 0;
    for (double c : x) m = std::max(m, std::abs(c));
    return m;
  }
  if (spec.p == 1.0) {
    double s = 0;
    for (double c : x) s += std::abs(c);
    return s;
  }
  if (spec.p == 2.0) {
    double s = 0;
    for (double c : x) s += c * c;
    return std::sqrt(s);
  }
  double m = 0;
  for (double c : x) m = std::max(m, std::abs(c));
  if (m == 0) return 0;
  double s = 0;
  for (double c : x) s += std::pow(std::abs(c) / m, spec.p);
  return m * std::pow(s, 1.0 / spec.p);
}

double eval_polytope(const PolytopeSpec& spec, std::span<const double> x) {
  const int d = spec.dim;
  double m = 0;
  const double* w = spec.facet_flat.data();
  for (int j = 0; j < spec.facet_count; ++j, w += d) {
    double t = 0;
    for (int i = 0; i < d; ++i) t += w[i] * x[i];
    m = std::max(m, std::abs(t));
  }
  return m;
}

double eval_l1l2(std::span<const double> x) {
  double s = 0;
  for (size_t i = 1; i < x.size(); ++i) s += x[i] * x[i];
  return std::abs(x[0]) + std::sqrt(s);
}

double eval_smoothed(const SmoothedData& d, std::span<const double> x, const Norm& base) {
  if (d.passthrough) return base.eval(x);
  const int dim = static_cast<int>(x.size());
  double m = 0;
  const double* w = d.facet_flat.data();
  const int nf = d.facet_count;  // construction caps this at 256
  double t[256];
  for (int j = 0; j < nf; ++j, w += dim) {
    double dot = 0;
    for (int i = 0; i < dim; ++i) dot += w[i] * x[i];
    t[j] = std::abs(dot);
    m = std::max(m, t[j]);
  }
  if (m == 0) return 0;
  double s = 0;
  for (int j = 0; j < nf; ++j) {
    double r = t[j] / m;
    if (r <= d.r_cut) continue;
    for (int k = 0; k < d.log2_q; ++k) r *= r;
    s += d.weights[j] * r;
  }
  const double q = std::ldexp(1.0, d.log2_q);
  double val = m * std::exp(std::log(s) / q);
  if (d.delta != 0.0 || !d.bumps.empty()) {
    double e2 = 0;
    for (int i = 0; i < dim; ++i) e2 += x[i] * x[i];
    const double en = std::sqrt(e2);
    val += d.delta * en;
    for (const AnchorBump& b : d.bumps) {
      double c = 0;
      for (int i = 0; i < dim; ++i) c += b.center_dir[i] * x[i];
      const double sdist = (1.0 - std::abs(c) / en) / b.width;
      if (sdist < 1.0) val *= std::exp(b.log_gain * bump_profile(sdist));
    }
  }
  return val;
}

}  // namespace

Norm::Norm(NormSpec spec) : spec_(std::move(spec)) {
  dim_ = std::visit(
      [](const auto& s) -> int {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, SmoothedData>) {
          return s.base->dim();
        } else {
          return s.dim;
        }
      },
      spec_);
}

Norm Norm::lp(double p, int dim) {
  if (dim < 1) throw InputError("norm dimension must be positive");
  if (!(p >= 1.0)) throw InputError("lp norm requires p >= 1");
  LpSpec s;
  s.p = p;
  s.dim = dim;
  return Norm(NormSpec(s));
}

Norm Norm::linf(int dim) {
  if (dim < 1) throw InputError("norm dimension must be positive");
  LpSpec s;
  s.infinity = true;
  s.dim = dim;
  return Norm(NormSpec(s));
}

Norm Norm::l1l2(int dim) {
  if (dim < 2) throw InputError("l1l2 norm requires dimension >= 2");
  L1L2Spec s;
  s.dim = dim;
  return Norm(NormSpec(s));
}

Norm Norm::polytope(RatMat vertices) {
  if (vertices.empty()) throw InputError("polytope norm needs vertices");
  const int dim = static_cast<int>(vertices[0].size());
  if (dim < 1 || dim > 6) throw InputError("polytope norm supports dimensions 1..6");
  for (const auto& v : vertices) {
    if (static_cast<int>(v.size()) != dim) throw InputError("inconsistent vertex dimensions");
  }
  // Central symmetry: every vertex has its negation listed.
  for (const auto& v : vertices) {
    bool found = false;
    for (const auto& u : vertices) {
      bool neg = true;
      for (int i = 0; i < dim && neg; ++i) neg = (u[i] == -v[i]);
      if (neg) {
        found = true;
        break;
      }
    }
    if (!found) throw InputError("polytope vertex set is not centrally symmetric");
  }
  if (rational_rank(vertices) != dim) {
    throw InputError("polytope vertices do not span the space");
  }

  PolytopeSpec spec;
  spec.dim = dim;
  spec.vertices = std::move(vertices);
  spec.vertices_double.reserve(spec.vertices.size());
  for (const auto& v : spec.vertices) spec.vertices_double.push_back(rat_vec_to_double(v));

  std::vector<VecN> half = enumerate_half_facets(spec.vertices_double, dim);
  if (half.empty()) throw InputError("polytope facet enumeration failed (degenerate hull)");
  spec.facet_count = static_cast<int>(half.size());
  spec.facet_flat.reserve(half.size() * dim);
  for (const auto& w : half) {
    for (double c : w) spec.facet_flat.push_back(c);
  }

  // Every listed vertex must be extreme (gauge 1, not < 1).
  for (const auto& v : spec.vertices_double) {
    double g = eval_polytope(spec, std::span<const double>(v.data(), v.size()));
    if (g < 1.0 - 1e-7) {
      throw InputError("polytope vertex is not extreme (lies inside the hull)");
    }
  }
  return Norm(NormSpec(std::move(spec)));
}

Norm Norm::smoothed(SmoothedData data) {
  if (!data.base) throw InternalError("smoothed norm without base");
  return Norm(NormSpec(std::move(data)));
}

double Norm::eval(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != dim_) throw InputError("norm_eval: dimension mismatch");
  return std::visit(
      [&](const auto& s) -> double {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LpSpec>) {
          return eval_lp(s, x);
        } else if constexpr (std::is_same_v<T, PolytopeSpec>) {
          return eval_polytope(s, x);
        } else if constexpr (std::is_same_v<T, L1L2Spec>) {
          return eval_l1l2(x);
        } else {
          return eval_smoothed(s, x, *s.base);
        }
      },
      spec_);
}

std::optional<Rat> Norm::eval_exact(const RatVec& x) const {
  if (static_cast<int>(x.size()) != dim_) throw InputError("norm_eval: dimension mismatch");
  if (const auto* lp = std::get_if<LpSpec>(&spec_)) {
    if (lp->infinity) return rat_linf_norm(x);
    if (lp->p == 1.0) return rat_l1_norm(x);
    return std::nullopt;
  }
  if (const auto* poly = std::get_if<PolytopeSpec>(&spec_)) {
    return polytope_gauge_exact(*poly, x);
  }
  return std::nullopt;
}

bool Norm::is_polyhedral() const {
  if (const auto* lp = std::get_if<LpSpec>(&spec_)) return lp->infinity || lp->p == 1.0;
  return std::holds_alternative<PolytopeSpec>(spec_);
}

bool Norm::is_smooth_strictly_convex() const {
  if (const auto* lp = std::get_if<LpSpec>(&spec_)) {
    return !lp->infinity && lp->p > 1.0;
  }
  return std::holds_alternative<SmoothedData>(spec_);
}

std::string Norm::describe() const {
  std::ostringstream os;
  std::visit(
      [&](const auto& s) {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, LpSpec>) {
          if (s.infinity) {
            os << "linf(dim=" << s.dim << ")";
          } else {
            os << "lp(p=" << s.p << ", dim=" << s.dim << ")";
          }
        } else if constexpr (std::is_same_v<T, PolytopeSpec>) {
          os << "polytope(" << s.vertices.size() << " vertices, dim=" << s.dim << ")";
        } else if constexpr (std::is_same_v<T, L1L2Spec>) {
          os << "l1l2(dim=" << s.dim << ")";
        } else {
          os << "smoothed(eps=" << s.epsilon << ", base=" << s.base->describe() << ")";
        }
      },
      spec_);
  return os.str();
}

Rat polytope_gauge_exact(const PolytopeSpec& spec, const RatVec& x) {
  const int n = spec.dim;
  const int m = static_cast<int>(spec.vertices.size());
  std::vector<Rat> a(static_cast<size_t>(n) * m);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < m; ++j) a[static_cast<size_t>(i) * m + j] = spec.vertices[j][i];
  }
  std::vector<Rat> b(x.begin(), x.end());
  std::vector<Rat> c(m, Rat(1));
  LpSolution<Rat> sol = solve_standard_lp<Rat>(n, m, std::move(a), std::move(b), std::move(c));
  if (sol.status != LpStatus::kOptimal) {
    throw InternalError("polytope gauge LP failed; hull should span the space");
  }
  return sol.objective;
}

std::vector<VecN> enumerate_half_facets(const std::vector<VecN>& vertices, int dim) {
  const int m = static_cast<int>(vertices.size());
  if (m < dim) return {};
  std::vector<VecN> half;
  std::map<std::vector<long long>, bool> seen;

  std::vector<int> idx(dim);
  std::vector<double> mat(static_cast<size_t>(dim) * (dim + 1));
  // Iterate over all dim-subsets.
  std::vector<int> comb(dim);
  for (int i = 0; i < dim; ++i) comb[i] = i;
  auto advance = [&]() -> bool {
    int i = dim - 1;
    while (i >= 0 && comb[i] == m - dim + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < dim; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };

  do {
    // Solve <w, v_k> = 1 for the subset by Gaussian elimination.
    for (int r = 0; r < dim; ++r) {
      const VecN& v = vertices[comb[r]];
      for (int ccol = 0; ccol < dim; ++ccol) mat[static_cast<size_t>(r) * (dim + 1) + ccol] = v[ccol];
      mat[static_cast<size_t>(r) * (dim + 1) + dim] = 1.0;
    }
    bool singular = false;
    for (int col = 0; col < dim && !singular; ++col) {
      int piv = col;
      for (int r = col + 1; r < dim; ++r) {
        if (std::abs(mat[static_cast<size_t>(r) * (dim + 1) + col]) >
            std::abs(mat[static_cast<size_t>(piv) * (dim + 1) + col]))
          piv = r;
      }
      double pv = mat[static_cast<size_t>(piv) * (dim + 1) + col];
      if (std::abs(pv) < 1e-12) {
        singular = true;
        break;
      }
      if (piv != col) {
        for (int j = col; j <= dim; ++j)
          std::swap(mat[static_cast<size_t>(piv) * (dim + 1) + j],
                    mat[static_cast<size_t>(col) * (dim + 1) + j]);
      }
      for (int r = 0; r < dim; ++r) {
        if (r == col) continue;
        double f = mat[static_cast<size_t>(r) * (dim + 1) + col] / pv;
        if (f == 0) continue;
        for (int j = col; j <= dim; ++j)
          mat[static_cast<size_t>(r) * (dim + 1) + j] -=
              f * mat[static_cast<size_t>(col) * (dim + 1) + j];
      }
    }
    if (singular) continue;
    VecN w(dim);
    for (int r = 0; r < dim; ++r)
      w[r] = mat[static_cast<size_t>(r) * (dim + 1) + dim] /
             mat[static_cast<size_t>(r) * (dim + 1) + r];

    bool supporting = true;
    for (int k = 0; k < m && supporting; ++k) {
      double dot = 0;
      for (int i = 0; i < dim; ++i) dot += w[i] * vertices[k][i];
      if (dot > 1.0 + 1e-9) supporting = false;
    }
    if (!supporting) continue;

    // Canonical orientation for dedup across +/- pairs.
    VecN canon = w;
    for (int i = 0; i < dim; ++i) {
      if (std::abs(canon[i]) > 1e-12) {
        if (canon[i] < 0) {
          for (int j = 0; j < dim; ++j) canon[j] = -canon[j];
        }
        break;
      }
    }
    std::vector<long long> key(dim);
    for (int i = 0; i < dim; ++i) key[i] = llround(canon[i] * 1e9);
    if (seen.emplace(std::move(key), true).second) half.push_back(canon);
  } while (advance());

  return half;
}

RatMat cross_polytope_vertices(int dim) {
  RatMat v;
  for (int i = 0; i < dim; ++i) {
    RatVec e(dim, Rat(0));
    e[i] = 1;
    v.push_back(e);
    e[i] = -1;
    v.push_back(e);
  }
  return v;
}

RatMat cube_vertices(int dim) {
  if (dim > 12) throw InputError("cube vertex list too large");
  RatMat v;
  for (int mask = 0; mask < (1 << dim); ++mask) {
    RatVec p(dim);
    for (int i = 0; i < dim; ++i) p[i] = (mask >> i) & 1 ? Rat(1) : Rat(-1);
    v.push_back(std::move(p));
  }
  return v;
}

}  // namespace petty
