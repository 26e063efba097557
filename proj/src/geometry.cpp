#include "holecap/geometry.hpp"

#include <algorithm>
#include <numbers>

namespace holecap {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
}  // namespace

double FourierSeries::eval(double t) const {
  double v = c0;
  for (std::size_t m = 0; m < a.size(); ++m) v += a[m] * std::cos((m + 1) * t);
  for (std::size_t m = 0; m < b.size(); ++m) v += b[m] * std::sin((m + 1) * t);
  return v;
}

double FourierSeries::deriv(double t) const {
  double v = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) v -= (m + 1) * a[m] * std::sin((m + 1) * t);
  for (std::size_t m = 0; m < b.size(); ++m) v += (m + 1) * b[m] * std::cos((m + 1) * t);
  return v;
}

double FourierSeries::deriv2(double t) const {
  double v = 0.0;
  for (std::size_t m = 0; m < a.size(); ++m) {
    const double w = static_cast<double>(m + 1);
    v -= w * w * a[m] * std::cos(w * t);
  }
  for (std::size_t m = 0; m < b.size(); ++m) {
    const double w = static_cast<double>(m + 1);
    v -= w * w * b[m] * std::sin(w * t);
  }
  return v;
}

Vec2 ParamCurve::point(double t) const {
  if (kind_ == CurveKind::Ellipse) {
    return center_ + rotate({a_ * std::cos(t), b_ * std::sin(t)}, theta_);
  }
  return {fx_.eval(t), fy_.eval(t)};
}

Vec2 ParamCurve::derivative(double t) const {
  if (kind_ == CurveKind::Ellipse) {
    return rotate({-a_ * std::sin(t), b_ * std::cos(t)}, theta_);
  }
  return {fx_.deriv(t), fy_.deriv(t)};
}

Vec2 ParamCurve::second_derivative(double t) const {
  if (kind_ == CurveKind::Ellipse) {
    return rotate({-a_ * std::cos(t), -b_ * std::sin(t)}, theta_);
  }
  return {fx_.deriv2(t), fy_.deriv2(t)};
}

ParamCurve::Frame ParamCurve::frame(double t) const {
  Frame f;
  f.point = point(t);
  const Vec2 d1 = derivative(t);
  const Vec2 d2 = second_derivative(t);
  f.speed = norm(d1);
  // ccw curve: outward normal is the tangent rotated by -pi/2
  f.normal = {d1.y / f.speed, -d1.x / f.speed};
  f.curvature = cross(d1, d2) / (f.speed * f.speed * f.speed);
  return f;
}

double ParamCurve::semi_major() const {
  if (kind_ != CurveKind::Ellipse) fail(ErrorCode::Geometry, "not an ellipse");
  return a_;
}
double ParamCurve::semi_minor() const {
  if (kind_ != CurveKind::Ellipse) fail(ErrorCode::Geometry, "not an ellipse");
  return b_;
}
double ParamCurve::rotation() const {
  if (kind_ != CurveKind::Ellipse) fail(ErrorCode::Geometry, "not an ellipse");
  return theta_;
}
Vec2 ParamCurve::center_point() const {
  if (kind_ != CurveKind::Ellipse) fail(ErrorCode::Geometry, "not an ellipse");
  return center_;
}

void ParamCurve::finish() {
  const int n = 512;
  std::vector<Vec2> p(n);
  for (int i = 0; i < n; ++i) p[i] = point(kTwoPi * i / n);
  double d = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; j += 7) d = std::max(d, norm(p[i] - p[j]));
  // the strided scan underestimates slightly; a full pass over antipodes fixes it
  for (int i = 0; i < n; ++i) d = std::max(d, norm(p[i] - p[(i + n / 2) % n]));
  diameter_ = d;
  validate();
}

void ParamCurve::validate() const {
  const int n = 512;
  const double tol = 1e-9 * std::max(diameter_, 1e-300);
  std::vector<Vec2> p(n);
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    p[i] = point(t);
    if (!(std::isfinite(p[i].x) && std::isfinite(p[i].y)))
      fail(ErrorCode::Geometry, "curve sample is not finite");
    if (!(norm(derivative(t)) > 0.0))
      fail(ErrorCode::Geometry, "curve has a vanishing-speed point");
  }
  // simplicity by pairwise node-distance sampling; parameter-close pairs are
  // exempt so legitimate neighbors do not trip the check
  for (int i = 0; i < n; ++i) {
    for (int j = i + 8; j < n; ++j) {
      if (n - (j - i) < 8) continue;
      if (norm(p[i] - p[j]) < tol)
        fail(ErrorCode::Geometry, "curve is (nearly) self-intersecting");
    }
  }
  // counterclockwise orientation
  double area = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    area += 0.5 * cross(point(t), derivative(t)) * (kTwoPi / n);
  }
  if (!(area > 0.0)) fail(ErrorCode::Geometry, "curve must be counterclockwise");
}

ParamCurve make_ellipse(double a, double b, double theta, Vec2 center) {
  if (!(b > 0.0) || !(a > 0.0)) fail(ErrorCode::Geometry, "ellipse axes must be positive");
  if (a < b) fail(ErrorCode::Geometry, "ellipse requires a >= b");
  ParamCurve c;
  c.kind_ = CurveKind::Ellipse;
  c.a_ = a;
  c.b_ = b;
  c.theta_ = theta;
  c.center_ = center;
  c.finish();
  return c;
}

ParamCurve make_trig_curve(const FourierSeries& x, const FourierSeries& y, int max_modes) {
  if (x.modes() > max_modes || y.modes() > max_modes)
    fail(ErrorCode::Geometry, "trig-series curve exceeds the mode budget");
  ParamCurve c;
  c.kind_ = CurveKind::TrigSeries;
  c.fx_ = x;
  c.fy_ = y;
  c.finish();
  return c;
}

ParamCurve scale_about_origin(const ParamCurve& c, double eps) {
  if (!(eps > 0.0)) fail(ErrorCode::Geometry, "scale factor must be positive");
  if (c.kind() == CurveKind::Ellipse) {
    return make_ellipse(eps * c.semi_major(), eps * c.semi_minor(), c.rotation(),
                        eps * c.center_point());
  }
  FourierSeries fx = c.series_x(), fy = c.series_y();
  fx.c0 *= eps;
  fy.c0 *= eps;
  for (auto& v : fx.a) v *= eps;
  for (auto& v : fx.b) v *= eps;
  for (auto& v : fy.a) v *= eps;
  for (auto& v : fy.b) v *= eps;
  return make_trig_curve(fx, fy);
}

ParamCurve translate(const ParamCurve& c, Vec2 d) {
  if (c.kind() == CurveKind::Ellipse) {
    return make_ellipse(c.semi_major(), c.semi_minor(), c.rotation(), c.center_point() + d);
  }
  FourierSeries fx = c.series_x(), fy = c.series_y();
  fx.c0 += d.x;
  fy.c0 += d.y;
  return make_trig_curve(fx, fy);
}

ParamCurve rotate_about_origin(const ParamCurve& c, double angle) {
  if (c.kind() == CurveKind::Ellipse) {
    return make_ellipse(c.semi_major(), c.semi_minor(), c.rotation() + angle,
                        rotate(c.center_point(), angle));
  }
  FourierSeries fx = c.series_x(), fy = c.series_y();
  const int mx = std::max(fx.modes(), fy.modes());
  fx.a.resize(mx, 0.0);
  fx.b.resize(mx, 0.0);
  fy.a.resize(mx, 0.0);
  fy.b.resize(mx, 0.0);
  const double cs = std::cos(angle), sn = std::sin(angle);
  FourierSeries gx = fx, gy = fy;
  gx.c0 = cs * fx.c0 - sn * fy.c0;
  gy.c0 = sn * fx.c0 + cs * fy.c0;
  for (int m = 0; m < mx; ++m) {
    gx.a[m] = cs * fx.a[m] - sn * fy.a[m];
    gx.b[m] = cs * fx.b[m] - sn * fy.b[m];
    gy.a[m] = sn * fx.a[m] + cs * fy.a[m];
    gy.b[m] = sn * fx.b[m] + cs * fy.b[m];
  }
  return make_trig_curve(gx, gy);
}

ParamCurve::Frame point_normal_speed(const ParamCurve& c, double t) { return c.frame(t); }

bool winding_contains(const ParamCurve& c, Vec2 p, double tol_rel) {
  const int n = 2048;
  const double tol = tol_rel * std::max(c.diameter(), 1e-300);
  double total = 0.0;
  Vec2 prev = c.point(0.0) - p;
  if (norm(prev) < tol) fail(ErrorCode::Geometry, "point lies on the curve");
  double prev_ang = std::atan2(prev.y, prev.x);
  for (int i = 1; i <= n; ++i) {
    const Vec2 q = c.point(kTwoPi * i / n) - p;
    if (norm(q) < tol) fail(ErrorCode::Geometry, "point lies on the curve");
    const double ang = std::atan2(q.y, q.x);
    double d = ang - prev_ang;
    while (d > kPi) d -= kTwoPi;
    while (d < -kPi) d += kTwoPi;
    total += d;
    prev_ang = ang;
  }
  const long w = std::lround(total / kTwoPi);
  return w == 1;
}

double signed_area(const ParamCurve& c, int n) {
  double area = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    area += 0.5 * cross(c.point(t), c.derivative(t)) * (kTwoPi / n);
  }
  return area;
}

Vec2 area_centroid(const ParamCurve& c, int n) {
  // centroid_x = (1/A) \oint x^2/2 nu_x dsigma, and likewise for y
  double area = 0.0, mx = 0.0, my = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    const auto f = c.frame(t);
    const double w = f.speed * (kTwoPi / n);
    area += 0.5 * (f.point.x * f.normal.x + f.point.y * f.normal.y) * w;
    mx += 0.5 * f.point.x * f.point.x * f.normal.x * w;
    my += 0.5 * f.point.y * f.point.y * f.normal.y * w;
  }
  return {mx / area, my / area};
}

}  // namespace holecap
