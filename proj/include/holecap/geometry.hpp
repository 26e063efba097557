#pragma once

#include <cmath>
#include <vector>

#include "holecap/errors.hpp"

namespace holecap {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline Vec2 operator-(Vec2 a) { return {-a.x, -a.y}; }
inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }
inline double norm2(Vec2 a) { return a.x * a.x + a.y * a.y; }
inline Vec2 rotate(Vec2 a, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * a.x - s * a.y, s * a.x + c * a.y};
}

/// Real 2pi-periodic series f(t) = c0 + sum_m (a[m-1] cos mt + b[m-1] sin mt).
struct FourierSeries {
  double c0 = 0.0;
  std::vector<double> a;
  std::vector<double> b;

  double eval(double t) const;
  double deriv(double t) const;
  double deriv2(double t) const;
  int modes() const { return static_cast<int>(std::max(a.size(), b.size())); }
};

enum class CurveKind { Ellipse, TrigSeries };

/// Smooth closed counterclockwise curve gamma : [0,2pi) -> R^2.
///
/// Only analytic parametrizations are admitted (ellipses and truncated
/// trigonometric series); this is what makes the trapezoid/Kress quadrature
/// in the boundary operators spectrally accurate.
class ParamCurve {
 public:
  struct Frame {
    Vec2 point;
    Vec2 normal;     // unit outward
    double speed;    // |gamma'(t)|
    double curvature;  // signed, positive for a ccw circle
  };

  CurveKind kind() const { return kind_; }

  Vec2 point(double t) const;
  Vec2 derivative(double t) const;
  Vec2 second_derivative(double t) const;
  Frame frame(double t) const;

  // Ellipse accessors (error for trig-series curves).
  double semi_major() const;
  double semi_minor() const;
  double rotation() const;
  Vec2 center_point() const;

  const FourierSeries& series_x() const { return fx_; }
  const FourierSeries& series_y() const { return fy_; }

  /// Cached estimate of the diameter (max pairwise sample distance).
  double diameter() const { return diameter_; }

  friend ParamCurve make_ellipse(double a, double b, double theta, Vec2 center);
  friend ParamCurve make_trig_curve(const FourierSeries& x, const FourierSeries& y,
                                    int max_modes);

 private:
  ParamCurve() = default;
  void validate() const;
  void finish();

  CurveKind kind_ = CurveKind::Ellipse;
  // ellipse data
  double a_ = 1.0, b_ = 1.0, theta_ = 0.0;
  Vec2 center_{};
  // trig-series data (also used as the generic fallback representation)
  FourierSeries fx_, fy_;
  double diameter_ = 0.0;
};

ParamCurve make_ellipse(double a, double b, double theta = 0.0, Vec2 center = {});
ParamCurve make_trig_curve(const FourierSeries& x, const FourierSeries& y,
                           int max_modes = 32);

/// The map omega -> eps*omega about the origin.
ParamCurve scale_about_origin(const ParamCurve& c, double eps);
ParamCurve translate(const ParamCurve& c, Vec2 d);
ParamCurve rotate_about_origin(const ParamCurve& c, double angle);

/// Spec-level alias for ParamCurve::frame.
ParamCurve::Frame point_normal_speed(const ParamCurve& c, double t);

/// Winding-number containment test (quadrature of the angle form).
/// Errors if p is within tol_rel*diameter of the sampled curve.
bool winding_contains(const ParamCurve& c, Vec2 p, double tol_rel = 1e-9);

/// Shoelace boundary integral; positive for counterclockwise curves.
double signed_area(const ParamCurve& c, int n = 256);

/// Area centroid from boundary integrals.
Vec2 area_centroid(const ParamCurve& c, int n = 256);

}  // namespace holecap
