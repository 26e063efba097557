#pragma once

#include <Eigen/Dense>
#include <vector>

#include "holecap/geometry.hpp"

namespace holecap {

/// Nystrom discretization of a closed curve: uniform parameter nodes
/// t_j = 2*pi*j/n with trapezoid weight 2*pi/n. n must be even and >= 16
/// (the log-singularity quadrature pairs nodes across half-periods).
struct BoundaryGrid {
  ParamCurve curve;
  int n = 0;
  double dt = 0.0;
  std::vector<double> t;
  std::vector<Vec2> point;
  std::vector<Vec2> normal;
  std::vector<double> speed;
  std::vector<double> curvature;

  double weight(int j) const { return speed[j] * dt; }
  Eigen::VectorXd weights() const;
  double circumference() const;
  double spacing() const;  // max arc step, used by near-boundary guards
};

BoundaryGrid make_grid(const ParamCurve& curve, int n);

/// Minimum node-pair distance between two grids.
double min_gap(const BoundaryGrid& a, const BoundaryGrid& b);

/// S(x) = log|x| / (2 pi).
double fundamental_solution(Vec2 x);

/// d1^h d2^j S at x != 0. Order m = h+j derivatives are
/// (-1)^(m-1) (m-1)! Re(i^j / z^m) / (2 pi) with z = x1 + i x2.
double deriv_S(int h, int j, Vec2 x);

/// Gradient of d1^h d2^j S (one more derivative in each slot).
Vec2 grad_deriv_S(int h, int j, Vec2 x);

enum class KernelTag { V, W, Wstar, Eval };

/// Dense Nystrom matrix acting on nodal density values and returning nodal
/// values on the target grid. Quadrature weights are baked into the columns.
struct DenseOperator {
  KernelTag tag = KernelTag::V;
  Eigen::MatrixXd mat;
};

/// Single-layer trace V. Same-grid assembly splits off the
/// log(4 sin^2((t-s)/2)) factor and applies the spectral product quadrature;
/// distinct grids use the plain trapezoid rule and must not intersect.
DenseOperator assemble_single_layer(const BoundaryGrid& target, const BoundaryGrid& source);

/// W_O [psi](x) = -int psi(y) nu(y).grad S(x-y) dsigma_y, continuous diagonal.
DenseOperator assemble_dlp_trace(const BoundaryGrid& grid);

/// W*_O [phi](x) = int phi(y) nu(x).grad S(x-y) dsigma_y; exact discrete
/// adjoint of W with respect to the arc-weighted inner product.
DenseOperator assemble_dlp_adjoint(const BoundaryGrid& grid);

enum class PotentialKind { Single, Double };

struct PotentialValues {
  Eigen::VectorXd value;
  std::vector<Vec2> gradient;  // empty unless requested
};

/// Off-boundary potential evaluation by the trapezoid rule. Targets closer
/// than min_spacings node spacings to the curve are rejected; on-boundary
/// quantities must go through the trace operators instead.
PotentialValues eval_potentials(const BoundaryGrid& grid, const Eigen::VectorXd& density,
                                const std::vector<Vec2>& targets, PotentialKind kind,
                                bool want_gradient = false, double min_spacings = 5.0);

}  // namespace holecap
