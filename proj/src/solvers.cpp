#include "holecap/solvers.hpp"

#include <iostream>
#include <numbers>

namespace holecap {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::VectorXd bordered_solve(const Eigen::MatrixXd& A, const Eigen::VectorXd& border_col,
                               const Eigen::VectorXd& border_row, const Eigen::VectorXd& rhs,
                               double rhs_last, double* aux = nullptr) {
  const Eigen::Index n = A.rows();
  Eigen::MatrixXd M(n + 1, n + 1);
  M.topLeftCorner(n, n) = A;
  M.topRightCorner(n, 1) = border_col;
  M.bottomLeftCorner(1, n) = border_row.transpose();
  M(n, n) = 0.0;
  Eigen::VectorXd b(n + 1);
  b.head(n) = rhs;
  b[n] = rhs_last;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
  if (lu.rcond() < 1e-12)
    std::cerr << "holecap: warning: bordered boundary system is ill-conditioned "
                 "(rcond < 1e-12)\n";
  Eigen::VectorXd sol = lu.solve(b);
  if (!sol.allFinite())
    fail(ErrorCode::NumericValidity, "bordered boundary system is numerically singular");
  if (aux) *aux = sol[n];
  return sol.head(n);
}
}  // namespace

Eigen::VectorXd solve_interior_dirichlet(const BoundaryGrid& grid,
                                         const Eigen::VectorXd& data) {
  const auto W = assemble_dlp_trace(grid);
  Eigen::MatrixXd A = W.mat;
  A.diagonal().array() += 0.5;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(A);
  Eigen::VectorXd psi = lu.solve(data);
  if (!psi.allFinite())
    fail(ErrorCode::NumericValidity, "interior double-layer system is singular");
  return psi;
}

double ExteriorSolution::value(Vec2 x) const {
  const auto p = eval_potentials(grid, sigma, {x}, PotentialKind::Single);
  return p.value[0] + c;
}

Vec2 ExteriorSolution::gradient(Vec2 x) const {
  const auto p = eval_potentials(grid, sigma, {x}, PotentialKind::Single, true);
  return p.gradient[0];
}

ExteriorSolution solve_exterior_bounded(const BoundaryGrid& grid,
                                        const Eigen::VectorXd& data) {
  const auto V = assemble_single_layer(grid, grid);
  const Eigen::VectorXd w = grid.weights();
  ExteriorSolution sol;
  sol.grid = grid;
  sol.sigma = bordered_solve(V.mat, Eigen::VectorXd::Ones(grid.n), w, data, 0.0, &sol.c);
  return sol;
}

Eigen::VectorXd exterior_normal_derivative(const BoundaryGrid& grid,
                                           const Eigen::VectorXd& sigma,
                                           const Eigen::MatrixXd* wstar) {
  Eigen::MatrixXd local;
  if (!wstar) {
    local = assemble_dlp_adjoint(grid).mat;
    wstar = &local;
  }
  return 0.5 * sigma + (*wstar) * sigma;
}

double exterior_energy(const BoundaryGrid& grid, const ExteriorSolution& sol,
                       const Eigen::VectorXd& data, const Eigen::MatrixXd* wstar) {
  const Eigen::VectorXd flux = exterior_normal_derivative(grid, sol.sigma, wstar);
  const Eigen::VectorXd w = grid.weights();
  double e = 0.0;
  for (int j = 0; j < grid.n; ++j) e -= w[j] * (data[j] - sol.c) * flux[j];
  return e;
}

Eigen::VectorXd equilibrium_density(const BoundaryGrid& grid) {
  const auto Wstar = assemble_dlp_adjoint(grid);
  Eigen::MatrixXd A = -Wstar.mat;
  A.diagonal().array() += 0.5;
  const Eigen::VectorXd w = grid.weights();
  return bordered_solve(A, Eigen::VectorXd::Ones(grid.n), w,
                        Eigen::VectorXd::Zero(grid.n), 1.0);
}

double r0_constant(const ParamCurve& Omega, const ParamCurve& omega, int n,
                   bool check_containment) {
  if (!winding_contains(Omega, {0.0, 0.0}) || !winding_contains(omega, {0.0, 0.0}))
    fail(ErrorCode::Geometry, "r0 requires the origin inside both curves");
  const auto og = make_grid(omega, n);
  if (check_containment) {
    for (const Vec2& p : og.point)
      if (!winding_contains(Omega, p))
        fail(ErrorCode::Geometry, "r0 requires omega to be contained in Omega");
  }

  const auto Og = make_grid(Omega, n);
  Eigen::VectorXd data_o(Og.n);
  for (int j = 0; j < Og.n; ++j) data_o[j] = fundamental_solution(Og.point[j]);
  const Eigen::VectorXd psi = solve_interior_dirichlet(Og, data_o);
  const double Ho0 =
      eval_potentials(Og, psi, {Vec2{0.0, 0.0}}, PotentialKind::Double).value[0];

  Eigen::VectorXd data_i(og.n);
  for (int j = 0; j < og.n; ++j) data_i[j] = fundamental_solution(og.point[j]);
  const auto Hi = solve_exterior_bounded(og, data_i);
  return Hi.limit_at_infinity() - Ho0;
}

double log_capacity(const ParamCurve& omega, int n) {
  const ParamCurve centered = translate(omega, -1.0 * area_centroid(omega));
  if (!winding_contains(centered, {0.0, 0.0}))
    fail(ErrorCode::Geometry, "log_capacity requires the centroid inside the curve");
  const auto g = make_grid(centered, n);
  Eigen::VectorXd data(g.n);
  for (int j = 0; j < g.n; ++j) data[j] = fundamental_solution(g.point[j]);
  const auto Hi = solve_exterior_bounded(g, data);
  return std::exp(kTwoPi * Hi.limit_at_infinity());
}

}  // namespace holecap
