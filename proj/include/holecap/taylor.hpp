#pragma once

#include <functional>
#include <vector>

#include "holecap/geometry.hpp"

namespace holecap {

/// Bivariate polynomial u(t) = sum_{h+j<=d} a_{h,j} t1^h t2^j. When used as
/// Taylor data of an analytic function at 0, a_{h,j} = d1^h d2^j u(0)/(h! j!).
class TaylorPoly2 {
 public:
  TaylorPoly2() : deg_(0), c_(1, 0.0) {}
  explicit TaylorPoly2(int degree);

  int degree() const { return deg_; }
  double coeff(int h, int j) const;
  void set_coeff(int h, int j, double v);
  /// Derivative value d1^h d2^j u(0) = a_{h,j} h! j!.
  double derivative_at_zero(int h, int j) const;

  double eval(Vec2 t) const;
  Vec2 grad_eval(Vec2 t) const;

  TaylorPoly2 dx() const;
  TaylorPoly2 dy() const;
  TaylorPoly2 laplacian() const;
  TaylorPoly2 operator*(const TaylorPoly2& o) const;
  TaylorPoly2 operator+(const TaylorPoly2& o) const;
  TaylorPoly2 operator-(const TaylorPoly2& o) const;
  TaylorPoly2& operator*=(double s);

  double max_abs_coeff() const;
  bool is_zero(double tol = 0.0) const;

  static TaylorPoly2 constant(double v);
  static TaylorPoly2 monomial(int h, int j, double v = 1.0);

 private:
  int deg_;
  std::vector<double> c_;  // (deg+1) x (deg+1) row-major, c_[h*(deg+1)+j]
};

/// Polynomial with frame rotated by `angle` (the composition p o R_{-angle});
/// the (beta,phi) normal form shifts phi by +angle under this map.
TaylorPoly2 rotate(const TaylorPoly2& p, double angle);

/// Smallest k with a coefficient above tol * max|a| on the diagonal h+j=k.
/// Errors when every coefficient is below the threshold.
int vanishing_order(const TaylorPoly2& p, double tol = 1e-9);

/// Degree-k homogeneous truncation u_{#,k}.
TaylorPoly2 homogeneous_part(const TaylorPoly2& p, int k);

/// Normal form of a nonzero harmonic homogeneous polynomial:
/// sign * beta * r^k sin(k t + k phi) with beta > 0 and
/// phi in (-pi/2k, pi/2k]. sign is -1 when the canonical window can only
/// represent the negated polynomial.
struct HarmonicLeading {
  int k = 1;
  double beta = 0.0;
  double phi = 0.0;
  int sign = 1;
};

HarmonicLeading beta_phi(const TaylorPoly2& h, int k);
TaylorPoly2 harmonic_from_beta_phi(int k, double beta, double phi);

/// Exact area integral int_omega q dt via the divergence reduction
/// int q = oint Q nu_1 dsigma with d1 Q = q, evaluated by the trapezoid rule.
double poly_area_integral(const TaylorPoly2& q, const ParamCurve& omega, int n = 256);

/// int_omega |grad h|^2 dt by the same reduction.
double interior_gradient_energy(const TaylorPoly2& h, const ParamCurve& omega, int n = 256);

/// Independent 2D quadrature over the region bounded by omega: radial
/// Gauss-Legendre times trapezoid in the boundary parameter.
double area_integral_quadrature(const std::function<double(Vec2)>& f,
                                const ParamCurve& omega, int n = 256,
                                int radial_order = 32);

/// Numerical Taylor coefficients of a black-box analytic function by iterated
/// central differences with two Richardson levels. Convenience path with a
/// roughly 1e-7 accuracy ceiling; degree <= 4.
TaylorPoly2 taylor_from_function(const std::function<double(Vec2)>& f, Vec2 center,
                                 int degree, double scale = 1.0);

}  // namespace holecap
