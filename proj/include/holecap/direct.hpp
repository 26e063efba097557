#pragma once

#include <functional>

#include "holecap/bem.hpp"
#include "holecap/taylor.hpp"

namespace holecap {

/// Harmonic field in the two-boundary region between an outer curve and a
/// hole: u(x) = v[outer, sigma_o](x) + v[hole, sigma_i](x) + c with the
/// bordered normalization int sigma_o + int sigma_i = 0.
struct TwoBoundarySolution {
  BoundaryGrid outer, hole;
  Eigen::VectorXd sigma_o, sigma_i;
  double c = 0.0;

  double value(Vec2 x) const;
  /// d_nu u on the hole nodes from the annular side:
  /// (1/2) sigma_i + W*_hole sigma_i plus the smooth outer-layer gradient.
  Eigen::VectorXd hole_flux() const;
  /// Total flux through the outer boundary (outward normal of the region).
  double outer_flux() const;
};

TwoBoundarySolution solve_two_boundary_dirichlet(const BoundaryGrid& outer,
                                                 const BoundaryGrid& hole,
                                                 const Eigen::VectorXd& data_outer,
                                                 const Eigen::VectorXd& data_inner);

/// Cap_Omega(eps omega) = -int_{d(eps omega)} d_nu V dsigma for the
/// capacitary potential (V = 1 on the hole, 0 on the outer boundary).
/// n doubles automatically (up to 2048) when the boundary gap is too small
/// for the quadrature separation rule.
double condenser_capacity(const ParamCurve& Omega, const ParamCurve& omega, double eps,
                          int n);

/// Cap_Omega(eps omega, u) by the divergence identity: boundary flux term
/// plus the interior gradient energy over the scaled hole. Polynomial u uses
/// the exact area-integral reduction.
double u_capacity(const ParamCurve& Omega, const ParamCurve& omega, const TaylorPoly2& u,
                  double eps, int n);

/// Same for a black-box u with gradient (2D quadrature over omega in
/// rescaled variables).
double u_capacity(const ParamCurve& Omega, const ParamCurve& omega,
                  const std::function<double(Vec2)>& u,
                  const std::function<Vec2(Vec2)>& grad_u, double eps, int n);

}  // namespace holecap
