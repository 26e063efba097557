#pragma once

#include <vector>

#include "holecap/taylor.hpp"

namespace holecap {

/// Self-contained Bessel J_m: power series for small arguments, backward
/// (Miller) recurrence with even-order normalization beyond. m <= 12,
/// 0 <= x <= 1e4; absolute error <= 1e-12.
double bessel_J(int m, double x);

/// Bessel Y_m: logarithmic series for orders 0, 1 at small arguments, Hankel
/// asymptotics beyond, forward recurrence in the order. x > 0; absolute
/// error <= 1e-10.
double bessel_Y(int m, double x);

/// n-th positive zero of J_m (n >= 1).
double bessel_j_zero(int m, int n);

enum class AngularParity { Cos, Sin };

/// One Dirichlet disk mode: lambda = (j_{m,n}/R)^2, eigenfunction
/// norm_const * J_m(j_{m,n} r / R) * {cos,sin}(m theta), L^2-normalized.
struct DiskMode {
  int m = 0;
  int n = 1;
  double radius = 1.0;
  AngularParity parity = AngularParity::Cos;
  double lambda = 0.0;
  double norm_const = 0.0;
  bool simple = true;  // m = 0 modes are simple; m >= 1 come in cos/sin pairs

  double eval(Vec2 x) const;
};

/// First `count` Dirichlet eigenvalues of the disk of radius R, sorted
/// ascending; m >= 1 eigenvalues appear twice (cos and sin entries).
std::vector<DiskMode> disk_eigenvalues(double R, int count);

/// Taylor data of the mode at p: exact series coefficients at the center,
/// the finite-difference extraction helper elsewhere (documented ~1e-7
/// accuracy ceiling).
TaylorPoly2 disk_eigenfunction_taylor(const DiskMode& mode, Vec2 p, int degree);

/// First `count` Dirichlet eigenvalues lambda = k^2 of the annulus
/// eps < |x| < 1 in the angular sector m, from the roots of the cross
/// product J_m(k eps) Y_m(k) - J_m(k) Y_m(k eps).
std::vector<double> annulus_eigenvalues(double eps, int m, int count);

}  // namespace holecap
