#include "holecap/direct.hpp"

#include <numbers>

namespace holecap {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxN = 2048;

struct DirectSetup {
  BoundaryGrid outer, hole;
};

// Enforce the minimum boundary-gap rule, doubling n until it holds.
DirectSetup admissible_grids(const ParamCurve& Omega, const ParamCurve& omega, double eps,
                             int n) {
  if (!(eps > 0.0)) fail(ErrorCode::Geometry, "eps must be positive");
  const ParamCurve hole_curve = scale_about_origin(omega, eps);
  for (const double t : {0.0, 1.0, 2.0, 3.0, 4.0, 5.0}) {
    if (!winding_contains(Omega, hole_curve.point(t)))
      fail(ErrorCode::Geometry, "scaled hole is not contained in the outer domain");
  }
  int cur = n;
  while (true) {
    DirectSetup s{make_grid(Omega, cur), make_grid(hole_curve, cur)};
    const double gap = min_gap(s.outer, s.hole);
    const double need = 5.0 * std::max(s.outer.spacing(), s.hole.spacing());
    if (gap >= need) return s;
    if (2 * cur > kMaxN)
      fail(ErrorCode::NumericValidity,
           "boundaries too close for quadrature separation at n <= 2048");
    cur *= 2;
  }
}
}  // namespace

double TwoBoundarySolution::value(Vec2 x) const {
  const auto vo = eval_potentials(outer, sigma_o, {x}, PotentialKind::Single);
  const auto vi = eval_potentials(hole, sigma_i, {x}, PotentialKind::Single);
  return vo.value[0] + vi.value[0] + c;
}

Eigen::VectorXd TwoBoundarySolution::hole_flux() const {
  const auto wstar = assemble_dlp_adjoint(hole);
  Eigen::VectorXd flux = 0.5 * sigma_i + wstar.mat * sigma_i;
  const auto go = eval_potentials(outer, sigma_o, hole.point, PotentialKind::Single, true);
  for (int j = 0; j < hole.n; ++j) flux[j] += dot(hole.normal[j], go.gradient[j]);
  return flux;
}

double TwoBoundarySolution::outer_flux() const {
  // d_nu from inside the outer curve: -(1/2) sigma_o + W* sigma_o, plus the
  // smooth gradient of the hole layer
  const auto wstar = assemble_dlp_adjoint(outer);
  Eigen::VectorXd flux = -0.5 * sigma_o + wstar.mat * sigma_o;
  const auto gi = eval_potentials(hole, sigma_i, outer.point, PotentialKind::Single, true);
  double total = 0.0;
  for (int j = 0; j < outer.n; ++j)
    total += (flux[j] + dot(outer.normal[j], gi.gradient[j])) * outer.weight(j);
  return total;
}

TwoBoundarySolution solve_two_boundary_dirichlet(const BoundaryGrid& outer,
                                                 const BoundaryGrid& hole,
                                                 const Eigen::VectorXd& data_outer,
                                                 const Eigen::VectorXd& data_inner) {
  for (int j = 0; j < data_outer.size(); ++j)
    if (!std::isfinite(data_outer[j])) fail(ErrorCode::Data, "non-finite outer data");
  for (int j = 0; j < data_inner.size(); ++j)
    if (!std::isfinite(data_inner[j])) fail(ErrorCode::Data, "non-finite inner data");
  const int no = outer.n, ni = hole.n;
  const Eigen::MatrixXd Voo = assemble_single_layer(outer, outer).mat;
  const Eigen::MatrixXd Vii = assemble_single_layer(hole, hole).mat;
  const Eigen::MatrixXd Voi = assemble_single_layer(outer, hole).mat;
  const Eigen::MatrixXd Vio = assemble_single_layer(hole, outer).mat;
  Eigen::MatrixXd M = Eigen::MatrixXd::Zero(no + ni + 1, no + ni + 1);
  M.block(0, 0, no, no) = Voo;
  M.block(0, no, no, ni) = Voi;
  M.block(no, 0, ni, no) = Vio;
  M.block(no, no, ni, ni) = Vii;
  M.block(0, no + ni, no + ni, 1).setOnes();
  M.block(no + ni, 0, 1, no) = outer.weights().transpose();
  M.block(no + ni, no, 1, ni) = hole.weights().transpose();
  Eigen::VectorXd b(no + ni + 1);
  b.head(no) = data_outer;
  b.segment(no, ni) = data_inner;
  b[no + ni] = 0.0;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu(M);
  Eigen::VectorXd sol = lu.solve(b);
  if (!sol.allFinite())
    fail(ErrorCode::NumericValidity, "two-boundary system is numerically singular");
  TwoBoundarySolution out;
  out.outer = outer;
  out.hole = hole;
  out.sigma_o = sol.head(no);
  out.sigma_i = sol.segment(no, ni);
  out.c = sol[no + ni];
  return out;
}

double condenser_capacity(const ParamCurve& Omega, const ParamCurve& omega, double eps,
                          int n) {
  const DirectSetup s = admissible_grids(Omega, omega, eps, n);
  const auto sol = solve_two_boundary_dirichlet(
      s.outer, s.hole, Eigen::VectorXd::Zero(s.outer.n), Eigen::VectorXd::Ones(s.hole.n));
  const Eigen::VectorXd flux = sol.hole_flux();
  double cap = 0.0;
  for (int j = 0; j < s.hole.n; ++j) cap -= flux[j] * s.hole.weight(j);
  return cap;
}

double u_capacity(const ParamCurve& Omega, const ParamCurve& omega, const TaylorPoly2& u,
                  double eps, int n) {
  const DirectSetup s = admissible_grids(Omega, omega, eps, n);
  Eigen::VectorXd data_i(s.hole.n);
  for (int j = 0; j < s.hole.n; ++j) data_i[j] = u.eval(s.hole.point[j]);
  const auto sol = solve_two_boundary_dirichlet(s.outer, s.hole,
                                                Eigen::VectorXd::Zero(s.outer.n), data_i);
  const Eigen::VectorXd flux = sol.hole_flux();
  double cap = 0.0;
  for (int j = 0; j < s.hole.n; ++j) cap -= flux[j] * data_i[j] * s.hole.weight(j);
  const TaylorPoly2 gx = u.dx(), gy = u.dy();
  cap += poly_area_integral(gx * gx + gy * gy, s.hole.curve, std::max(n, 256));
  return cap;
}

double u_capacity(const ParamCurve& Omega, const ParamCurve& omega,
                  const std::function<double(Vec2)>& u,
                  const std::function<Vec2(Vec2)>& grad_u, double eps, int n) {
  const DirectSetup s = admissible_grids(Omega, omega, eps, n);
  Eigen::VectorXd data_i(s.hole.n);
  for (int j = 0; j < s.hole.n; ++j) {
    data_i[j] = u(s.hole.point[j]);
    if (!std::isfinite(data_i[j])) fail(ErrorCode::Data, "u is not finite on the hole");
  }
  const auto sol = solve_two_boundary_dirichlet(s.outer, s.hole,
                                                Eigen::VectorXd::Zero(s.outer.n), data_i);
  const Eigen::VectorXd flux = sol.hole_flux();
  double cap = 0.0;
  for (int j = 0; j < s.hole.n; ++j) cap -= flux[j] * data_i[j] * s.hole.weight(j);
  // eps^2 int_omega |grad u(eps t)|^2 dt in rescaled variables
  cap += eps * eps *
         area_integral_quadrature(
             [&](Vec2 t) {
               const Vec2 g = grad_u({eps * t.x, eps * t.y});
               return norm2(g);
             },
             omega, std::max(n, 256));
  return cap;
}

}  // namespace holecap
