#pragma once

#include <Eigen/Dense>

#include "holecap/bem.hpp"

namespace holecap {

/// Solve (1/2 + W) psi = data on the grid; the interior field is the
/// double-layer potential of psi and reproduces data on the boundary.
Eigen::VectorXd solve_interior_dirichlet(const BoundaryGrid& grid,
                                         const Eigen::VectorXd& data);

/// Bounded exterior harmonic field v[sigma] + c with mean-zero sigma.
/// The limit at infinity is c; the exterior normal derivative is the
/// second-kind expression (1/2) sigma + W* sigma.
struct ExteriorSolution {
  BoundaryGrid grid;
  Eigen::VectorXd sigma;
  double c = 0.0;

  double limit_at_infinity() const { return c; }
  double value(Vec2 x) const;
  Vec2 gradient(Vec2 x) const;
};

ExteriorSolution solve_exterior_bounded(const BoundaryGrid& grid,
                                        const Eigen::VectorXd& data);

/// (1/2) sigma + W* sigma on the nodes (pass a prebuilt W* to amortize).
Eigen::VectorXd exterior_normal_derivative(const BoundaryGrid& grid,
                                           const Eigen::VectorXd& sigma,
                                           const Eigen::MatrixXd* wstar = nullptr);

/// Exterior Dirichlet energy -int (data - c) d_nu(field) dsigma.
double exterior_energy(const BoundaryGrid& grid, const ExteriorSolution& sol,
                       const Eigen::VectorXd& data,
                       const Eigen::MatrixXd* wstar = nullptr);

/// Null density of (1/2 - W*) normalized to unit integral; its single-layer
/// potential is constant on the curve.
Eigen::VectorXd equilibrium_density(const BoundaryGrid& grid);

/// r_0 = lim_{t->inf} H^i_0(t) - H^o_0(0), the constant entering every
/// 1/(r_0 + log|eps|/2pi) denominator of the capacity series. The
/// containment check enforces the omega-inside-Omega precondition; the
/// series engine disables it since it only needs the origin inside both.
double r0_constant(const ParamCurve& Omega, const ParamCurve& omega, int n,
                   bool check_containment = true);

/// exp(2 pi lim H^i_0): the logarithmic capacity (outer conformal radius).
/// Computed about the curve's own area centroid so that the value is
/// translation invariant.
double log_capacity(const ParamCurve& omega, int n);

}  // namespace holecap
