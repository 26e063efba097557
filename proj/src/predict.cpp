#include "holecap/predict.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace holecap {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

double hole_reach(const ParamCurve& omega) {
  double r = 0.0;
  for (int i = 0; i < 256; ++i) r = std::max(r, norm(omega.point(kTwoPi * i / 256)));
  return r;
}

double boundary_distance(const std::vector<Vec2>& boundary, Vec2 p) {
  double d = std::numeric_limits<double>::infinity();
  for (const Vec2& q : boundary) d = std::min(d, norm(p - q));
  return d;
}

// vanishing order from FD Taylor data with the homogeneous-norm threshold
int classify_kbar(const TaylorPoly2& t, double rel_tol = 1e-6) {
  double max_norm = 0.0;
  std::vector<double> norms(t.degree() + 1, 0.0);
  for (int k = 0; k <= t.degree(); ++k) {
    double s = 0.0;
    for (int h = 0; h <= k; ++h) s += t.coeff(h, k - h) * t.coeff(h, k - h);
    norms[k] = std::sqrt(s);
    max_norm = std::max(max_norm, norms[k]);
  }
  if (max_norm <= 0.0) return -1;
  for (int k = 0; k <= t.degree(); ++k)
    if (norms[k] > rel_tol * max_norm) return k;
  return -1;
}
}  // namespace

double EigPrediction::shift(double eps) const {
  if (!(eps > 0.0) || !(eps < 1.0))
    fail(ErrorCode::NumericValidity, "shift needs eps in (0,1)");
  if (regime == ShiftRegime::Log) return coefficient * kTwoPi / std::abs(std::log(eps));
  return coefficient * std::pow(eps, 2.0 * kbar);
}

EigPrediction predict_shift(double lambda_N, const TaylorPoly2& u_at_p,
                            const ParamCurve& omega, int n, double tol) {
  EigPrediction pred;
  pred.lambda_base = lambda_N;
  pred.kbar = vanishing_order(u_at_p, tol);  // errors on the zero function
  if (pred.kbar == 0) {
    pred.regime = ShiftRegime::Log;
    const double u0 = u_at_p.coeff(0, 0);
    pred.coefficient = u0 * u0;
    return pred;
  }
  pred.regime = ShiftRegime::Power;
  const TaylorPoly2 lead = homogeneous_part(u_at_p, pred.kbar);
  const LeadingEnergy e = leading_energy(omega, lead, n);
  pred.coefficient = e.total;
  pred.limit_at_infinity = e.limit_at_infinity;
  return pred;
}

ScalingDescriptor scaling_exponent(const TaylorPoly2& u_at_p, double tol) {
  ScalingDescriptor d;
  d.kbar = vanishing_order(u_at_p, tol);
  if (d.kbar == 0) {
    d.regime = ShiftRegime::Log;
    d.exponent = 0.0;
    d.label = "1/|log eps|";
  } else {
    d.regime = ShiftRegime::Power;
    d.exponent = 2.0 * d.kbar;
    d.label = "eps^" + std::to_string(2 * d.kbar);
  }
  return d;
}

MaxPlacement optimal_location_max(const std::function<double(Vec2)>& u,
                                  const ParamCurve& Omega, int grid_res,
                                  const ParamCurve& omega, double eps, double tie_tol) {
  if (grid_res < 3) fail(ErrorCode::NumericValidity, "grid resolution must be >= 3");
  std::vector<Vec2> boundary(512);
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (int i = 0; i < 512; ++i) {
    boundary[i] = Omega.point(kTwoPi * i / 512);
    xmin = std::min(xmin, boundary[i].x);
    xmax = std::max(xmax, boundary[i].x);
    ymin = std::min(ymin, boundary[i].y);
    ymax = std::max(ymax, boundary[i].y);
  }
  const double margin = eps * hole_reach(omega);

  std::vector<Vec2> pts;
  std::vector<double> vals;
  for (int iy = 0; iy < grid_res; ++iy) {
    for (int ix = 0; ix < grid_res; ++ix) {
      const Vec2 p{xmin + (xmax - xmin) * ix / (grid_res - 1.0),
                   ymin + (ymax - ymin) * iy / (grid_res - 1.0)};
      if (boundary_distance(boundary, p) <= margin) continue;
      if (!winding_contains(Omega, p)) continue;
      const double v = u(p);
      pts.push_back(p);
      vals.push_back(v * v);
    }
  }
  if (pts.empty()) fail(ErrorCode::Geometry, "no admissible grid point inside Omega");
  const double best = *std::max_element(vals.begin(), vals.end());
  MaxPlacement out;
  out.value = best;
  const double cut = best - std::max(tie_tol * best, 1e-300);
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (vals[i] >= cut) out.argmax.push_back(pts[i]);
  out.degenerate = out.argmax.size() == pts.size();
  return out;
}

MinPlacement optimal_location_min(const std::function<double(Vec2)>& u,
                                  const ParamCurve& Omega, const ParamCurve& omega,
                                  int grid_res, double eps, int n) {
  if (grid_res < 3) fail(ErrorCode::NumericValidity, "grid resolution must be >= 3");
  std::vector<Vec2> boundary(512);
  double xmin = 1e300, xmax = -1e300, ymin = 1e300, ymax = -1e300;
  for (int i = 0; i < 512; ++i) {
    boundary[i] = Omega.point(kTwoPi * i / 512);
    xmin = std::min(xmin, boundary[i].x);
    xmax = std::max(xmax, boundary[i].x);
    ymin = std::min(ymin, boundary[i].y);
    ymax = std::max(ymax, boundary[i].y);
  }
  const double margin = std::max(eps * hole_reach(omega), 0.02 * Omega.diameter());
  const double fd_scale = 0.25 * Omega.diameter();

  MinPlacement out;
  struct Raw {
    Vec2 p;
    int kbar;
    TaylorPoly2 taylor;
  };
  std::vector<Raw> raws;
  for (int iy = 0; iy < grid_res; ++iy) {
    for (int ix = 0; ix < grid_res; ++ix) {
      const Vec2 p{xmin + (xmax - xmin) * ix / (grid_res - 1.0),
                   ymin + (ymax - ymin) * iy / (grid_res - 1.0)};
      if (boundary_distance(boundary, p) <= margin) continue;
      if (!winding_contains(Omega, p)) continue;
      const TaylorPoly2 t = taylor_from_function(u, p, 4, fd_scale);
      const int kb = classify_kbar(t);
      if (kb < 0) continue;
      raws.push_back({p, kb, t});
      out.kbar_max = std::max(out.kbar_max, kb);
    }
  }
  if (out.kbar_max == 0) {
    out.advisory = "no candidates: u has no interior zero on the scan grid";
    return out;
  }
  for (const Raw& r : raws) {
    if (r.kbar != out.kbar_max) continue;
    const TaylorPoly2 lead = homogeneous_part(r.taylor, r.kbar);
    const LeadingEnergy e = leading_energy(omega, lead, n);
    out.ranked.push_back({r.p, r.kbar, e.total});
  }
  std::sort(out.ranked.begin(), out.ranked.end(),
            [](const MinPlacement::Candidate& a, const MinPlacement::Candidate& b) {
              if (a.energy != b.energy) return a.energy < b.energy;
              if (a.p.x != b.p.x) return a.p.x < b.p.x;
              return a.p.y < b.p.y;
            });
  if (out.kbar_max == 1) {
    // does the nodal set reach the outer boundary? sample u on an offset ring
    const Vec2 c0 = area_centroid(Omega);
    bool sign_change = false;
    double prev = 0.0;
    bool have_prev = false;
    for (int i = 0; i <= 1024; ++i) {
      const Vec2 q = Omega.point(kTwoPi * (i % 1024) / 1024);
      const Vec2 ring = c0 + 0.95 * (q - c0);
      const double v = u(ring);
      if (have_prev && v * prev < 0.0) {
        sign_change = true;
        break;
      }
      prev = v;
      have_prev = true;
    }
    if (sign_change)
      out.advisory =
          "no minimizer expected: a single nodal line reaches the boundary and the "
          "eps^2 coefficient decays to zero along it";
  }
  return out;
}

}  // namespace holecap
