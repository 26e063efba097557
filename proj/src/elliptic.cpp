#include "holecap/elliptic.hpp"

#include <cmath>
#include <numbers>

#include "holecap/errors.hpp"

namespace holecap {

namespace {
constexpr double kPi = std::numbers::pi;

double binom(int n, int k) {
  double v = 1.0;
  for (int i = 1; i <= k; ++i) v = v * (n - k + i) / i;
  return std::round(v);
}

void check_k(int k) {
  if (k < 1 || k > 16) fail(ErrorCode::NumericValidity, "order k must be in [1, 16]");
}
}  // namespace

double xi_bar(double a, double b) {
  if (!(a > b) || !(b > 0.0))
    fail(ErrorCode::Geometry, "xi_bar needs a > b > 0 (circle is degenerate here)");
  const double c = std::sqrt(a * a - b * b);
  return std::log((a + b) / c);
}

double Ck(int k) {
  check_k(k);
  double s = 0.0;
  for (int j = 0; j <= k; ++j) s += std::abs(k - 2.0 * j) * binom(k, j) * binom(k, j);
  return s / std::pow(2.0, 2 * k - 1);
}

double Dk(int k, double xi) {
  check_k(k);
  double s = 0.0;
  for (int j = 0; j <= k; ++j)
    s += std::abs(k - 2.0 * j) * binom(k, j) * binom(k, j) * std::exp(2.0 * (k - 2 * j) * xi);
  return s / std::pow(2.0, 2 * k);
}

double Ek(int k, double xi) {
  check_k(k);
  double s = 0.0;
  for (int j = 0; 2 * j <= k - 1; ++j)
    s += (k - 2.0 * j) * binom(k, j) * binom(k, j) * std::exp(2.0 * (k - 2 * j) * xi);
  return s / std::pow(2.0, 2 * k - 1);
}

double Qk(int k, double a, double b) {
  check_k(k);
  if (!(a >= b) || !(b > 0.0)) fail(ErrorCode::Geometry, "Qk needs a >= b > 0");
  const double c2 = a * a - b * b;
  double s = 0.0;
  for (int j = 0; 2 * j <= k - 1; ++j)
    s += (k - 2.0 * j) * binom(k, j) * binom(k, j) * std::pow(c2, 2 * j) *
         std::pow(a + b, 2.0 * (k - 2 * j));
  return s / std::pow(2.0, 2 * k - 1);
}

double angular_energy(int k, double beta, double phi, double a, double b) {
  check_k(k);
  if (!(a >= b) || !(b > 0.0)) fail(ErrorCode::Geometry, "angular_energy needs a >= b > 0");
  const double c2 = a * a - b * b;
  const double angle_term =
      -0.5 * kPi * beta * beta * std::pow(c2, k) * Ck(k) * std::cos(2.0 * k * phi);
  return angle_term + kPi * beta * beta * Qk(k, a, b);
}

HoleFourier hole_fourier_coefficients(int k, double beta, double phi, double xi) {
  check_k(k);
  HoleFourier out;
  out.a.assign(k, 0.0);
  out.b.assign(k, 0.0);
  // c^k carried through beta: coefficients below are per unit c^k; callers
  // multiply by c^k themselves when a physical ellipse is in play. For the
  // energy identity with Dk, the c^{2k} factor cancels on both sides, so we
  // report the scale-free energy here.
  const double pref = beta / std::pow(2.0, k - 1);
  for (int j = 1; j <= k; ++j) {
    if ((k + j) % 2 != 0) continue;
    const double bin = binom(k, (k + j) / 2);
    out.a[j - 1] = pref * std::sin(k * phi) * bin * std::cosh(j * xi);
    out.b[j - 1] = pref * std::cos(k * phi) * bin * std::sinh(j * xi);
  }
  double e = 0.0;
  for (int j = 1; j <= k; ++j)
    e += j * (out.a[j - 1] * out.a[j - 1] + out.b[j - 1] * out.b[j - 1]);
  out.exterior_energy = kPi * e;
  return out;
}

}  // namespace holecap
