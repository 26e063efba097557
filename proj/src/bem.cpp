#include "holecap/bem.hpp"

#include <algorithm>
#include <complex>
#include <numbers>

namespace holecap {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool same_grid(const BoundaryGrid& a, const BoundaryGrid& b) {
  if (a.n != b.n) return false;
  for (int j : {0, a.n / 3, 2 * a.n / 3}) {
    if (norm(a.point[j] - b.point[j]) > 1e-14 * std::max(1.0, a.curve.diameter()))
      return false;
  }
  return true;
}

// Quadrature weights R_d for int_0^{2pi} log(4 sin^2((t-s)/2)) f(s) ds on the
// uniform grid, from exact integration of the trigonometric interpolant.
std::vector<double> kress_log_weights(int n) {
  std::vector<double> R(n);
  for (int d = 0; d < n; ++d) {
    const double td = kTwoPi * d / n;
    double s = 0.0;
    for (int m = 1; m <= n / 2 - 1; ++m) s += std::cos(m * td) / m;
    R[d] = -(4.0 * kPi / n) * s - (4.0 * kPi / (n * n)) * std::cos(0.5 * n * td);
  }
  return R;
}
}  // namespace

Eigen::VectorXd BoundaryGrid::weights() const {
  Eigen::VectorXd w(n);
  for (int j = 0; j < n; ++j) w[j] = speed[j] * dt;
  return w;
}

double BoundaryGrid::circumference() const {
  double c = 0.0;
  for (int j = 0; j < n; ++j) c += speed[j] * dt;
  return c;
}

double BoundaryGrid::spacing() const {
  double s = 0.0;
  for (int j = 0; j < n; ++j) s = std::max(s, speed[j]);
  return s * dt;
}

BoundaryGrid make_grid(const ParamCurve& curve, int n) {
  if (n < 16 || n % 2 != 0)
    fail(ErrorCode::NumericValidity, "grid size must be even and >= 16");
  BoundaryGrid g;
  g.curve = curve;
  g.n = n;
  g.dt = kTwoPi / n;
  g.t.resize(n);
  g.point.resize(n);
  g.normal.resize(n);
  g.speed.resize(n);
  g.curvature.resize(n);
  for (int j = 0; j < n; ++j) {
    g.t[j] = g.dt * j;
    const auto f = curve.frame(g.t[j]);
    g.point[j] = f.point;
    g.normal[j] = f.normal;
    g.speed[j] = f.speed;
    g.curvature[j] = f.curvature;
  }
  return g;
}

double min_gap(const BoundaryGrid& a, const BoundaryGrid& b) {
  double d = std::numeric_limits<double>::infinity();
  for (int i = 0; i < a.n; ++i)
    for (int j = 0; j < b.n; ++j) d = std::min(d, norm(a.point[i] - b.point[j]));
  return d;
}

double fundamental_solution(Vec2 x) {
  const double r = norm(x);
  if (!(r > 0.0)) fail(ErrorCode::NumericValidity, "S(x) evaluated at the singular point");
  return std::log(r) / kTwoPi;
}

double deriv_S(int h, int j, Vec2 x) {
  if (h < 0 || j < 0) fail(ErrorCode::NumericValidity, "negative derivative order");
  const int m = h + j;
  if (m > 16) fail(ErrorCode::NumericValidity, "derivative order above the configured max");
  if (m == 0) return fundamental_solution(x);
  if (!(norm2(x) > 0.0))
    fail(ErrorCode::NumericValidity, "deriv_S evaluated at the singular point");
  const std::complex<double> z(x.x, x.y);
  const std::complex<double> q = 1.0 / z;
  std::complex<double> p = q;
  double fact = 1.0;
  for (int i = 1; i < m; ++i) {
    p *= q;
    fact *= i;
  }
  static const std::complex<double> ipow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
  const double sign = (m % 2 == 0) ? -1.0 : 1.0;  // (-1)^(m-1)
  return sign * fact * (ipow[j % 4] * p).real() / kTwoPi;
}

Vec2 grad_deriv_S(int h, int j, Vec2 x) {
  return {deriv_S(h + 1, j, x), deriv_S(h, j + 1, x)};
}

DenseOperator assemble_single_layer(const BoundaryGrid& target, const BoundaryGrid& source) {
  DenseOperator op;
  op.tag = KernelTag::V;
  if (same_grid(target, source)) {
    const int n = source.n;
    const auto R = kress_log_weights(n);
    op.mat.resize(n, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        double entry;
        if (i == j) {
          entry = R[0] / (4.0 * kPi) + (source.dt / kTwoPi) * std::log(source.speed[i]);
        } else {
          const double r2 = norm2(target.point[i] - source.point[j]);
          const double s2 = 4.0 * std::pow(std::sin(0.5 * (target.t[i] - source.t[j])), 2);
          entry = R[std::abs(i - j)] / (4.0 * kPi) +
                  (source.dt / (4.0 * kPi)) * std::log(r2 / s2);
        }
        op.mat(i, j) = entry * source.speed[j];
      }
    }
    return op;
  }
  if (min_gap(target, source) < 2.0 * std::max(target.spacing(), source.spacing()))
    fail(ErrorCode::Geometry, "source and target curves intersect or nearly touch");
  op.mat.resize(target.n, source.n);
  for (int i = 0; i < target.n; ++i)
    for (int j = 0; j < source.n; ++j)
      op.mat(i, j) =
          fundamental_solution(target.point[i] - source.point[j]) * source.weight(j);
  return op;
}

DenseOperator assemble_dlp_trace(const BoundaryGrid& g) {
  DenseOperator op;
  op.tag = KernelTag::W;
  const int n = g.n;
  op.mat.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double k;
      if (i == j) {
        k = g.curvature[i] * g.speed[i] / (4.0 * kPi);
      } else {
        const Vec2 d = g.point[i] - g.point[j];
        k = -dot(g.normal[j], d) / (kTwoPi * norm2(d)) * g.speed[j];
      }
      op.mat(i, j) = k * g.dt;
    }
  }
  return op;
}

DenseOperator assemble_dlp_adjoint(const BoundaryGrid& g) {
  DenseOperator op;
  op.tag = KernelTag::Wstar;
  const int n = g.n;
  op.mat.resize(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      double k;
      if (i == j) {
        k = g.curvature[i] * g.speed[i] / (4.0 * kPi);
      } else {
        const Vec2 d = g.point[i] - g.point[j];
        k = dot(g.normal[i], d) / (kTwoPi * norm2(d)) * g.speed[j];
      }
      op.mat(i, j) = k * g.dt;
    }
  }
  return op;
}

PotentialValues eval_potentials(const BoundaryGrid& g, const Eigen::VectorXd& density,
                                const std::vector<Vec2>& targets, PotentialKind kind,
                                bool want_gradient, double min_spacings) {
  if (density.size() != g.n)
    fail(ErrorCode::Data, "density length does not match the grid");
  for (int j = 0; j < g.n; ++j)
    if (!std::isfinite(density[j])) fail(ErrorCode::Data, "density has non-finite entries");
  const double dmin = min_spacings * g.spacing();
  PotentialValues out;
  out.value.resize(static_cast<Eigen::Index>(targets.size()));
  if (want_gradient) out.gradient.resize(targets.size());
  for (std::size_t ti = 0; ti < targets.size(); ++ti) {
    const Vec2 x = targets[ti];
    double nearest = std::numeric_limits<double>::infinity();
    for (int j = 0; j < g.n; ++j) nearest = std::min(nearest, norm(x - g.point[j]));
    if (nearest < dmin)
      fail(ErrorCode::NearBoundary,
           "evaluation target is too close to the boundary; use trace operators");
    double v = 0.0;
    Vec2 grad{};
    for (int j = 0; j < g.n; ++j) {
      const Vec2 d = x - g.point[j];
      const double w = density[j] * g.weight(j);
      if (kind == PotentialKind::Single) {
        v += fundamental_solution(d) * w;
        if (want_gradient) {
          const double r2 = norm2(d);
          grad = grad + (w / (kTwoPi * r2)) * d;
        }
      } else {
        const double r2 = norm2(d);
        v += -dot(g.normal[j], d) / (kTwoPi * r2) * w;
        if (want_gradient) {
          // -Hess(S)(d) . nu, with Hess entries from the complex form
          const double s20 = deriv_S(2, 0, d);
          const double s11 = deriv_S(1, 1, d);
          const double s02 = deriv_S(0, 2, d);
          grad.x += -(s20 * g.normal[j].x + s11 * g.normal[j].y) * w;
          grad.y += -(s11 * g.normal[j].x + s02 * g.normal[j].y) * w;
        }
      }
    }
    out.value[static_cast<Eigen::Index>(ti)] = v;
    if (want_gradient) out.gradient[ti] = grad;
  }
  return out;
}

}  // namespace holecap
