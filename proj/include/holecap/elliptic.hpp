#pragma once

#include <vector>

namespace holecap {

/// Elliptic coordinate of the boundary of an axis-aligned ellipse with
/// semi-axes a > b > 0: xi_bar = log((a+b)/c), c = sqrt(a^2-b^2).
/// Errors for a = b (circle); callers use the polynomial forms instead.
double xi_bar(double a, double b);

/// C_k = 2^{1-2k} sum_j |k-2j| binom(k,j)^2.
double Ck(int k);
/// D_k(xi) = 2^{-2k} sum_j |k-2j| binom(k,j)^2 e^{2(k-2j) xi}.
double Dk(int k, double xi);
/// E_k(xi) = 2^{1-2k} sum_{j<=floor((k-1)/2)} (k-2j) binom(k,j)^2 e^{2(k-2j) xi}.
double Ek(int k, double xi);
/// Q_k(a,b) = c^{2k} E_k(xi_bar) in its polynomial form, regular at a = b.
double Qk(int k, double a, double b);

/// Closed-form leading energy for a hole that is an ellipse with semi-axes
/// (a,b), boundary datum beta r^k sin(kt + k phi):
///   E = -(pi beta^2 c^{2k}/2) C_k cos(2k phi) + pi beta^2 Q_k(a,b).
/// phi is taken mod pi/k (only cos 2k phi enters), so any angle is accepted.
double angular_energy(int k, double beta, double phi, double a, double b);

/// Fourier data of the exterior field in elliptic coordinates, normalized to
/// focal half-distance c = 1 (multiply entries by c^k for a physical
/// ellipse). a[j-1], b[j-1] hold a_j(xi), b_j(xi) for 1 <= j <= k (zero when
/// k+j is odd); exterior_energy = pi sum_j j (a_j^2 + b_j^2), which equals
/// -(pi beta^2/2) C_k cos(2k phi) + pi beta^2 D_k(xi) in the same
/// normalization.
struct HoleFourier {
  std::vector<double> a, b;
  double exterior_energy = 0.0;
};

HoleFourier hole_fourier_coefficients(int k, double beta, double phi, double xi);

}  // namespace holecap
