#include "holecap/series.hpp"

#include <array>
#include <cstdio>
#include <numbers>

#include "holecap/solvers.hpp"

namespace holecap {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxOrder = 6;

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

struct Pascal {
  explicit Pascal(int n) : n_(n), c_((n + 1) * (n + 1), 0.0) {
    for (int i = 0; i <= n; ++i) {
      at(i, 0) = 1.0;
      for (int j = 1; j <= i; ++j)
        at(i, j) = get(i - 1, j - 1) + get(i - 1, j);
    }
  }
  double& at(int i, int j) { return c_[i * (n_ + 1) + j]; }
  double get(int i, int j) const {
    if (j < 0 || j > i) return 0.0;
    return c_[i * (n_ + 1) + j];
  }
  int n_;
  std::vector<double> c_;
};

// Bordered solver with a prefactored LU of [[A, col], [row^T, 0]].
struct BorderedSystem {
  Eigen::PartialPivLU<Eigen::MatrixXd> lu;
  int n = 0;
  void factor(const Eigen::MatrixXd& A, const Eigen::VectorXd& col,
              const Eigen::VectorXd& row) {
    n = static_cast<int>(A.rows());
    Eigen::MatrixXd M(n + 1, n + 1);
    M.topLeftCorner(n, n) = A;
    M.topRightCorner(n, 1) = col;
    M.bottomLeftCorner(1, n) = row.transpose();
    M(n, n) = 0.0;
    lu.compute(M);
  }
  Eigen::VectorXd solve(const Eigen::VectorXd& rhs, double last) const {
    Eigen::VectorXd b(n + 1);
    b.head(n) = rhs;
    b[n] = last;
    Eigen::VectorXd s = lu.solve(b);
    if (!s.allFinite())
      fail(ErrorCode::NumericValidity, "degenerate bordered recursion system");
    return s.head(n);
  }
};

// Shared state for the Section 3/4 recursions on a fixed pair of grids.
struct Engine {
  BoundaryGrid OG, og;  // Omega and omega grids
  int K;
  Pascal binom;
  Eigen::VectorXd wO, wo;  // arc weights
  double omega_len = 0.0;

  Eigen::MatrixXd Wstar_O, W_O, W_o, Wstar_o, V_o;
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_rho_o;    // 1/2 + W*_Omega
  Eigen::PartialPivLU<Eigen::MatrixXd> lu_theta_o;  // 1/2 + W_Omega
  BorderedSystem sys_rho_i;                         // 1/2 - W*_omega, unit-integral border
  BorderedSystem sys_theta_i;                       // 1/2 - W_omega, mean-zero border
  BorderedSystem sys_ext;                           // V_omega + constant, exterior solves

  DensityCoefficients dens;

  // caches keyed by [order][a][b]
  std::vector<std::vector<std::vector<double>>> mom;     // int rho_i_m s1^a s2^b
  std::vector<std::vector<std::vector<Vec2>>> rint;      // int rho_o_m (grad d^a d^b S)
  std::vector<std::vector<std::vector<double>>> sint;    // int rho_o_m d1^a d2^b S
  std::vector<std::vector<std::vector<double>>> tint;    // int theta_o_m nu.(grad d^a d^b S)
  std::vector<std::vector<std::vector<Vec2>>> thmom;     // int theta_i_m nu s1^a s2^b

  Engine(const BoundaryGrid& Omega_grid, const BoundaryGrid& omega_grid, int k_max)
      : OG(Omega_grid), og(omega_grid), K(k_max), binom(k_max + 2) {
    if (K < 0 || K > kMaxOrder)
      fail(ErrorCode::NumericValidity, "expansion order exceeds the K <= 6 guard");
    wO = OG.weights();
    wo = og.weights();
    omega_len = wo.sum();

    Wstar_O = assemble_dlp_adjoint(OG).mat;
    W_O = assemble_dlp_trace(OG).mat;
    W_o = assemble_dlp_trace(og).mat;
    Wstar_o = assemble_dlp_adjoint(og).mat;
    V_o = assemble_single_layer(og, og).mat;

    Eigen::MatrixXd A = Wstar_O;
    A.diagonal().array() += 0.5;
    lu_rho_o.compute(A);

    A = W_O;
    A.diagonal().array() += 0.5;
    lu_theta_o.compute(A);

    A = -Wstar_o;
    A.diagonal().array() += 0.5;
    sys_rho_i.factor(A, Eigen::VectorXd::Ones(og.n), wo);

    A = -W_o;
    A.diagonal().array() += 0.5;
    sys_theta_i.factor(A, Eigen::VectorXd::Ones(og.n), wo);

    sys_ext.factor(V_o, Eigen::VectorXd::Ones(og.n), wo);

    dens.K = K;
  }

  void cache_rho_i(int k) {
    auto& m = mom[k];
    for (int a = 0; a + 0 <= K; ++a)
      for (int b = 0; a + b <= K; ++b) {
        double acc = 0.0;
        for (int j = 0; j < og.n; ++j)
          acc += dens.rho_i[k][j] * std::pow(og.point[j].x, a) *
                 std::pow(og.point[j].y, b) * wo[j];
        m[a][b] = acc;
      }
  }

  void cache_rho_o(int k) {
    for (int a = 0; a + 0 <= K; ++a)
      for (int b = 0; a + b <= K; ++b) {
        Vec2 vacc{};
        double sacc = 0.0;
        for (int j = 0; j < OG.n; ++j) {
          const double w = dens.rho_o[k][j] * wO[j];
          const Vec2 gs = grad_deriv_S(a, b, OG.point[j]);
          vacc = vacc + w * gs;
          sacc += w * deriv_S(a, b, OG.point[j]);
        }
        rint[k][a][b] = vacc;
        sint[k][a][b] = sacc;
      }
  }

  void cache_theta_o(int k) {
    for (int a = 0; a + 0 <= K; ++a)
      for (int b = 0; a + b <= K; ++b) {
        double acc = 0.0;
        for (int j = 0; j < OG.n; ++j)
          acc += dens.theta_o[k][j] *
                 dot(OG.normal[j], grad_deriv_S(a, b, OG.point[j])) * wO[j];
        tint[k][a][b] = acc;
      }
  }

  void cache_theta_i(int k) {
    for (int a = 0; a + 0 <= K; ++a)
      for (int b = 0; a + b <= K; ++b) {
        Vec2 acc{};
        for (int j = 0; j < og.n; ++j)
          acc = acc + dens.theta_i[k][j] * std::pow(og.point[j].x, a) *
                          std::pow(og.point[j].y, b) * wo[j] * og.normal[j];
        thmom[k][a][b] = acc;
      }
  }

  static std::vector<std::vector<std::vector<double>>> cube(int k, int a) {
    return std::vector<std::vector<std::vector<double>>>(
        k, std::vector<std::vector<double>>(a, std::vector<double>(a, 0.0)));
  }
  static std::vector<std::vector<std::vector<Vec2>>> vcube(int k, int a) {
    return std::vector<std::vector<std::vector<Vec2>>>(
        k, std::vector<std::vector<Vec2>>(a, std::vector<Vec2>(a, Vec2{})));
  }

  void run_rho() {
    mom = cube(K + 1, K + 1);
    rint = vcube(K + 1, K + 1);
    sint = cube(K + 1, K + 1);
    dens.rho_o.resize(K + 1);
    dens.rho_i.resize(K + 1);
    for (int k = 0; k <= K; ++k) {
      // inner density first: its equation only sees rho_o of lower order
      Eigen::VectorXd rhs_i = Eigen::VectorXd::Zero(og.n);
      if (k >= 1) {
        for (int j = 0; j <= k - 1; ++j) {
          const double cj = k * binom.get(k - 1, j) * ((j % 2 == 0) ? -1.0 : 1.0);
          for (int h = 0; h <= j; ++h) {
            const double ch = binom.get(j, h);
            const Vec2 R = rint[k - 1 - j][h][j - h];
            for (int i = 0; i < og.n; ++i)
              rhs_i[i] += cj * ch * std::pow(og.point[i].x, h) *
                          std::pow(og.point[i].y, j - h) * dot(og.normal[i], R);
          }
        }
      }
      dens.rho_i[k] = sys_rho_i.solve(rhs_i, k == 0 ? 1.0 : 0.0);
      cache_rho_i(k);

      Eigen::VectorXd rhs_o = Eigen::VectorXd::Zero(OG.n);
      for (int j = 0; j <= k; ++j) {
        const double cj = binom.get(k, j) * ((j % 2 == 0) ? -1.0 : 1.0);
        for (int h = 0; h <= j; ++h) {
          const double ch = binom.get(j, h);
          const double momv = mom[k - j][h][j - h];
          if (momv == 0.0) continue;
          for (int i = 0; i < OG.n; ++i)
            rhs_o[i] += cj * ch * momv *
                        dot(OG.normal[i], grad_deriv_S(h, j - h, OG.point[i]));
        }
      }
      dens.rho_o[k] = lu_rho_o.solve(rhs_o);
      cache_rho_o(k);
    }
  }

  // k! g_k building block, sum_l C(k,l) M_u(l, k-l)
  double g_times_factorial(const TaylorPoly2& u, int k) const {
    double acc = 0.0;
    for (int l = 0; l <= k; ++l) {
      double mu = 0.0;
      for (int h = 0; h <= l; ++h)
        mu += binom.get(l, h) * u.derivative_at_zero(h, l - h) * mom[k - l][h][l - h];
      acc += binom.get(k, l) * mu;
    }
    return acc;
  }

  void run_theta(const TaylorPoly2& u) {
    tint = cube(K + 1, K + 1);
    thmom = vcube(K + 1, K + 1);
    dens.theta_o.assign(K + 1, Eigen::VectorXd::Zero(OG.n));
    dens.theta_i.assign(K + 1, Eigen::VectorXd::Zero(og.n));
    cache_theta_o(0);
    cache_theta_i(0);
    for (int k = 1; k <= K; ++k) {
      if (k >= 2) {
        Eigen::VectorXd rhs_o = Eigen::VectorXd::Zero(OG.n);
        for (int j = 0; j <= k - 2; ++j) {
          const double cj = k * binom.get(k - 1, j) * ((j % 2 == 0) ? -1.0 : 1.0);
          for (int h = 0; h <= j; ++h) {
            const double ch = binom.get(j, h);
            const Vec2 Th = thmom[k - 1 - j][h][j - h];
            for (int i = 0; i < OG.n; ++i)
              rhs_o[i] += cj * ch * dot(grad_deriv_S(h, j - h, OG.point[i]), Th);
          }
        }
        dens.theta_o[k] = lu_theta_o.solve(rhs_o);
      }
      cache_theta_o(k);

      Eigen::VectorXd rhs_i = Eigen::VectorXd::Zero(og.n);
      for (int j = 0; j <= k - 1; ++j) {
        const double cj = binom.get(k, j) * ((j % 2 == 0) ? -1.0 : 1.0);
        for (int h = 0; h <= j; ++h) {
          const double ch = binom.get(j, h);
          const double T = tint[k - j][h][j - h];
          if (T == 0.0) continue;
          for (int i = 0; i < og.n; ++i)
            rhs_i[i] += cj * ch * std::pow(og.point[i].x, h) *
                        std::pow(og.point[i].y, j - h) * T;
        }
      }
      const double kfac = factorial(k);
      const TaylorPoly2 uk =
          (k <= u.degree()) ? homogeneous_part(u, k) : TaylorPoly2::constant(0.0);
      const double gk = g_times_factorial(u, k);
      for (int i = 0; i < og.n; ++i) rhs_i[i] += kfac * uk.eval(og.point[i]) - gk;
      dens.theta_i[k] = sys_theta_i.solve(rhs_i, 0.0);
      cache_theta_i(k);
    }
  }

  // Exterior flux of a bounded field from its boundary trace, via the
  // single-layer re-representation (keeps everything second kind).
  Eigen::VectorXd resolve_flux(const Eigen::VectorXd& trace) const {
    const Eigen::VectorXd sigma = sys_ext.solve(trace, 0.0);
    return 0.5 * sigma + Wstar_o * sigma;
  }

  LadderCoefficients run_ladder(const TaylorPoly2& u) {
    LadderCoefficients L;
    L.K = K;
    L.flux_u.assign(K + 1, Eigen::VectorXd::Zero(og.n));
    L.flux_v.assign(K + 1, Eigen::VectorXd::Zero(og.n));
    L.g.assign(K + 1, 0.0);
    L.r.assign(K + 1, 0.0);

    std::vector<Eigen::VectorXd> usharp(K + 1, Eigen::VectorXd::Zero(og.n));
    std::vector<TaylorPoly2> usharp_poly(K + 1, TaylorPoly2::constant(0.0));
    for (int m = 0; m <= K; ++m) {
      if (m <= u.degree()) usharp_poly[m] = homogeneous_part(u, m);
      for (int i = 0; i < og.n; ++i) usharp[m][i] = usharp_poly[m].eval(og.point[i]);
    }

    for (int k = 0; k <= K; ++k) {
      const double invfac = 1.0 / factorial(k);
      // polynomial parts of u_{m,k} and v_{m,k}
      TaylorPoly2 P(std::max(0, k - 1)), Q(k);
      if (k >= 1) {
        for (int j = 0; j <= k - 1; ++j) {
          const double cj = binom.get(k, j) * ((j % 2 == 0) ? 1.0 : -1.0);
          for (int h = 0; h <= j; ++h)
            P.set_coeff(h, j - h,
                        P.coeff(h, j - h) +
                            invfac * cj * binom.get(j, h) * tint[k - j][h][j - h]);
        }
      }
      for (int j = 0; j <= k; ++j) {
        const double cj = binom.get(k, j) * ((j % 2 == 0) ? 1.0 : -1.0);
        for (int h = 0; h <= j; ++h)
          Q.set_coeff(h, j - h,
                      Q.coeff(h, j - h) +
                          invfac * cj * binom.get(j, h) * sint[k - j][h][j - h]);
      }

      Eigen::VectorXd fu = Eigen::VectorXd::Zero(og.n);
      if (k >= 1) {
        for (int i = 0; i < og.n; ++i)
          fu[i] = dot(og.normal[i], P.grad_eval(og.point[i]));
        // double-layer tail: re-solve its exterior trace, then second-kind flux
        const Eigen::VectorXd trace =
            -0.5 * dens.theta_i[k] + W_o * dens.theta_i[k];
        fu -= invfac * resolve_flux(trace);
      }
      L.flux_u[k] = fu;

      Eigen::VectorXd fv(og.n);
      const Eigen::VectorXd sl_flux =
          0.5 * dens.rho_i[k] + Wstar_o * dens.rho_i[k];
      for (int i = 0; i < og.n; ++i)
        fv[i] = dot(og.normal[i], Q.grad_eval(og.point[i])) + invfac * sl_flux[i];
      L.flux_v[k] = fv;

      L.g[k] = invfac * g_times_factorial(u, k);

      double ravg = 0.0;
      const Eigen::VectorXd vtrace = V_o * dens.rho_i[k];
      for (int i = 0; i < og.n; ++i)
        ravg += (Q.eval(og.point[i]) + invfac * vtrace[i]) * wo[i];
      L.r[k] = ravg / omega_len;
    }

    L.u_tilde.assign(K + 1, Eigen::VectorXd::Zero(og.n));
    L.g_tilde.assign(K + 1, Eigen::VectorXd::Zero(og.n));
    L.a_tilde.assign(K + 1, Eigen::VectorXd::Zero(og.n));
    for (int k = 0; k <= K; ++k) {
      for (int l = 0; l <= k; ++l) {
        L.u_tilde[k] += L.flux_u[l].cwiseProduct(usharp[k - l]);
        L.g_tilde[k] += L.g[l] * usharp[k - l];
      }
      for (int j = 0; j <= k; ++j)
        L.a_tilde[k] += L.g_tilde[k - j].cwiseProduct(L.flux_v[j]);
    }

    // xi_n: power series of the interior gradient energy
    L.xi.assign(K + 1, 0.0);
    for (int n2 = 2; n2 <= K; ++n2) {
      double acc = 0.0;
      for (int l = 0; l <= n2 - 2; ++l) {
        const TaylorPoly2& p1 = usharp_poly[l + 1];
        const TaylorPoly2& p2 = usharp_poly[n2 - l - 1];
        acc += poly_area_integral(p1.dx() * p2.dx() + p1.dy() * p2.dy(), og.curve, og.n);
      }
      L.xi[n2] = acc;
    }

    // composition sums e[m][k] = sum over beta in (N\0)^m, |beta| = k
    std::vector<std::vector<double>> e(K + 1, std::vector<double>(K + 1, 0.0));
    e[0][0] = 1.0;
    for (int m = 1; m <= K; ++m)
      for (int k = m; k <= K; ++k)
        for (int i = 1; i <= k - m + 1; ++i) e[m][k] += L.r[i] * e[m - 1][k - i];

    L.lambda.assign(K + 1, {});
    for (int n2 = 0; n2 <= K; ++n2) {
      L.lambda[n2].assign(n2 + 2, Eigen::VectorXd::Zero(og.n));
      L.lambda[n2][0] = L.u_tilde[n2];
      L.lambda[n2][1] = L.a_tilde[n2];
      for (int l = 2; l <= n2 + 1; ++l) {
        Eigen::VectorXd acc = Eigen::VectorXd::Zero(og.n);
        for (int k = l - 1; k <= n2; ++k)
          if (e[l - 1][k] != 0.0) acc += e[l - 1][k] * L.a_tilde[n2 - k];
        L.lambda[n2][l] = ((l - 1) % 2 == 0 ? 1.0 : -1.0) * acc;
      }
    }
    return L;
  }
};

void require_origin_inside(const ParamCurve& c, const char* name) {
  if (!winding_contains(c, {0.0, 0.0}))
    fail(ErrorCode::Geometry, std::string("the origin must lie inside ") + name);
}
}  // namespace

DensityCoefficients rho_coefficients(const BoundaryGrid& Omega_grid,
                                     const BoundaryGrid& omega_grid, int K) {
  Engine e(Omega_grid, omega_grid, K);
  e.run_rho();
  return e.dens;
}

DensityCoefficients theta_coefficients(const BoundaryGrid& Omega_grid,
                                       const BoundaryGrid& omega_grid,
                                       const TaylorPoly2& u, int K) {
  Engine e(Omega_grid, omega_grid, K);
  e.run_rho();
  e.run_theta(u);
  return e.dens;
}

LadderCoefficients ladder_coefficients(const BoundaryGrid& Omega_grid,
                                       const BoundaryGrid& omega_grid,
                                       const TaylorPoly2& u, int K) {
  Engine e(Omega_grid, omega_grid, K);
  e.run_rho();
  e.run_theta(u);
  return e.run_ladder(u);
}

CapacitySeries capacity_series(const ParamCurve& Omega, const ParamCurve& omega,
                               const TaylorPoly2& u, int n_max, int n) {
  require_origin_inside(Omega, "Omega");
  require_origin_inside(omega, "omega");
  const BoundaryGrid OG = make_grid(Omega, n);
  const BoundaryGrid og = make_grid(omega, n);

  Engine e(OG, og, n_max);
  e.run_rho();
  e.run_theta(u);
  const LadderCoefficients L = e.run_ladder(u);

  CapacitySeries s;
  s.n_max = n_max;
  s.r0_ladder = L.r[0];
  s.r0 = r0_constant(Omega, omega, n, /*check_containment=*/false);
  s.c = Eigen::MatrixXd::Zero(n_max + 1, n_max + 2);
  const Eigen::VectorXd wo = og.weights();
  for (int n2 = 0; n2 <= n_max; ++n2)
    for (int l = 0; l <= n2 + 1; ++l)
      s.c(n2, l) = -wo.dot(L.lambda[n2][l]) + (l == 0 ? L.xi[n2] : 0.0);
  return s;
}

double eval_capacity_series(const CapacitySeries& s, double eps) {
  if (!(eps > 0.0) || !(eps < 1.0))
    fail(ErrorCode::NumericValidity, "eval_capacity_series needs 0 < eps < 1");
  const double D = s.r0 + std::log(eps) / kTwoPi;
  if (std::abs(D) <= s.guard)
    fail(ErrorCode::NumericValidity,
         "log denominator inside the guard band; the series degenerates here");
  double value = 0.0;
  double epow = 1.0;
  for (int n2 = 0; n2 <= s.n_max; ++n2) {
    double dpow = 1.0;
    for (int l = 0; l <= n2 + 1; ++l) {
      value += epow * s.c(n2, l) / dpow;
      dpow *= D;
    }
    epow *= eps;
  }
  return value;
}

std::string serialize(const CapacitySeries& s) {
  char buf[128];
  std::string out;
  std::snprintf(buf, sizeof buf, "capacity-series n_max=%d r0=%.17g r0_ladder=%.17g\n",
                s.n_max, s.r0, s.r0_ladder);
  out += buf;
  for (int n2 = 0; n2 <= s.n_max; ++n2)
    for (int l = 0; l <= n2 + 1; ++l) {
      std::snprintf(buf, sizeof buf, "c %d %d %.17g\n", n2, l, s.c(n2, l));
      out += buf;
    }
  return out;
}

LeadingEnergy leading_energy(const ParamCurve& omega, const TaylorPoly2& leading, int n) {
  if (leading.is_zero()) fail(ErrorCode::Data, "leading_energy of the zero polynomial");
  const BoundaryGrid g = make_grid(omega, n);
  Eigen::VectorXd data(g.n);
  for (int j = 0; j < g.n; ++j) data[j] = leading.eval(g.point[j]);
  const ExteriorSolution sol = solve_exterior_bounded(g, data);
  const Eigen::MatrixXd wstar = assemble_dlp_adjoint(g).mat;
  LeadingEnergy out;
  out.exterior = exterior_energy(g, sol, data, &wstar);
  out.interior = interior_gradient_energy(leading, omega, std::max(n, 256));
  out.total = out.exterior + out.interior;
  out.limit_at_infinity = sol.limit_at_infinity();
  return out;
}

}  // namespace holecap
