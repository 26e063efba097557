#pragma once

#include <string>
#include <vector>

#include "holecap/bem.hpp"
#include "holecap/taylor.hpp"

namespace holecap {

/// Density coefficient ladders on the Omega- and omega-grids. rho entries are
/// the epsilon-derivatives (coefficient of eps^k carries a 1/k!), theta
/// likewise. rho_i[0] integrates to one, rho_i[k>=1] and every theta_i[k] are
/// mean-zero, (theta_o[0], theta_i[0]) = (0,0) and theta_o[1] = 0.
struct DensityCoefficients {
  int K = 0;
  std::vector<Eigen::VectorXd> rho_o, rho_i;
  std::vector<Eigen::VectorXd> theta_o, theta_i;
};

/// Everything derived from the densities that feeds the capacity series.
struct LadderCoefficients {
  int K = 0;
  std::vector<Eigen::VectorXd> flux_u;  // nu . grad u_{m,k} on the omega nodes
  std::vector<Eigen::VectorXd> flux_v;  // v~_k
  std::vector<double> g;                // g_k (g_0 = u(0))
  std::vector<double> r;                // r_k (r_0 enters the log denominators)
  std::vector<Eigen::VectorXd> u_tilde, g_tilde, a_tilde;
  std::vector<double> xi;                               // interior-energy series
  std::vector<std::vector<Eigen::VectorXd>> lambda;     // lambda[n][l], l <= n+1
};

/// Triangular coefficient array of the eps / 1/log|eps| double series
///   Cap = sum_n eps^n sum_{l<=n+1} c(n,l) / (r0 + log|eps|/2pi)^l.
struct CapacitySeries {
  double r0 = 0.0;         // lim H^i_0 - H^o_0(0), harmonic-solver route
  double r0_ladder = 0.0;  // k = 0 ladder average; agrees with r0
  int n_max = 0;
  Eigen::MatrixXd c;       // (n_max+1) x (n_max+2)
  double guard = 0.05;     // validity band for the log denominator
};

DensityCoefficients rho_coefficients(const BoundaryGrid& Omega_grid,
                                     const BoundaryGrid& omega_grid, int K);

/// rho + theta ladders (theta needs the Taylor data of u at the origin).
DensityCoefficients theta_coefficients(const BoundaryGrid& Omega_grid,
                                       const BoundaryGrid& omega_grid,
                                       const TaylorPoly2& u, int K);

LadderCoefficients ladder_coefficients(const BoundaryGrid& Omega_grid,
                                       const BoundaryGrid& omega_grid,
                                       const TaylorPoly2& u, int K);

CapacitySeries capacity_series(const ParamCurve& Omega, const ParamCurve& omega,
                               const TaylorPoly2& u, int n_max, int n);

/// Truncated double-sum value; errors when |r0 + log|eps|/2pi| falls inside
/// the guard band (the series degenerates there).
double eval_capacity_series(const CapacitySeries& s, double eps);

/// Structured text record (one line per coefficient) for CLI output.
std::string serialize(const CapacitySeries& s);

/// Leading-order energy of a nonzero homogeneous boundary datum:
/// exterior Dirichlet energy of the bounded extension plus the interior
/// gradient energy, together with lim_{t->inf} of the exterior field.
struct LeadingEnergy {
  double exterior = 0.0;
  double interior = 0.0;
  double total = 0.0;
  double limit_at_infinity = 0.0;
};

LeadingEnergy leading_energy(const ParamCurve& omega, const TaylorPoly2& leading, int n);

}  // namespace holecap
