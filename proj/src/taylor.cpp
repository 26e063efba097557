#include "holecap/taylor.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

namespace holecap {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr int kMaxDegree = 16;

double factorial(int k) {
  double f = 1.0;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}
}  // namespace

TaylorPoly2::TaylorPoly2(int degree) : deg_(degree) {
  if (degree < 0 || degree > kMaxDegree)
    fail(ErrorCode::Data, "polynomial degree out of range");
  c_.assign(static_cast<std::size_t>(degree + 1) * (degree + 1), 0.0);
}

double TaylorPoly2::coeff(int h, int j) const {
  if (h < 0 || j < 0 || h + j > deg_) return 0.0;
  return c_[static_cast<std::size_t>(h) * (deg_ + 1) + j];
}

void TaylorPoly2::set_coeff(int h, int j, double v) {
  if (h < 0 || j < 0 || h + j > deg_) fail(ErrorCode::Data, "coefficient index out of range");
  c_[static_cast<std::size_t>(h) * (deg_ + 1) + j] = v;
}

double TaylorPoly2::derivative_at_zero(int h, int j) const {
  return coeff(h, j) * factorial(h) * factorial(j);
}

double TaylorPoly2::eval(Vec2 t) const {
  // Horner in t1 with inner Horner in t2
  double v = 0.0;
  for (int h = deg_; h >= 0; --h) {
    double row = 0.0;
    for (int j = deg_ - h; j >= 0; --j) row = row * t.y + coeff(h, j);
    v = v * t.x + row;
  }
  return v;
}

Vec2 TaylorPoly2::grad_eval(Vec2 t) const { return {dx().eval(t), dy().eval(t)}; }

TaylorPoly2 TaylorPoly2::dx() const {
  TaylorPoly2 r(std::max(0, deg_ - 1));
  for (int h = 1; h <= deg_; ++h)
    for (int j = 0; h + j <= deg_; ++j) r.set_coeff(h - 1, j, h * coeff(h, j));
  return r;
}

TaylorPoly2 TaylorPoly2::dy() const {
  TaylorPoly2 r(std::max(0, deg_ - 1));
  for (int h = 0; h <= deg_; ++h)
    for (int j = 1; h + j <= deg_; ++j) r.set_coeff(h, j - 1, j * coeff(h, j));
  return r;
}

TaylorPoly2 TaylorPoly2::laplacian() const {
  TaylorPoly2 r(std::max(0, deg_ - 2));
  for (int h = 0; h <= deg_ - 2; ++h)
    for (int j = 0; h + j <= deg_ - 2; ++j)
      r.set_coeff(h, j, (h + 2.0) * (h + 1.0) * coeff(h + 2, j) +
                            (j + 2.0) * (j + 1.0) * coeff(h, j + 2));
  return r;
}

TaylorPoly2 TaylorPoly2::operator*(const TaylorPoly2& o) const {
  TaylorPoly2 r(deg_ + o.deg_);
  for (int h = 0; h <= deg_; ++h)
    for (int j = 0; h + j <= deg_; ++j) {
      const double a = coeff(h, j);
      if (a == 0.0) continue;
      for (int p = 0; p <= o.deg_; ++p)
        for (int q = 0; p + q <= o.deg_; ++q) {
          const double b = o.coeff(p, q);
          if (b == 0.0) continue;
          r.set_coeff(h + p, j + q, r.coeff(h + p, j + q) + a * b);
        }
    }
  return r;
}

TaylorPoly2 TaylorPoly2::operator+(const TaylorPoly2& o) const {
  TaylorPoly2 r(std::max(deg_, o.deg_));
  for (int h = 0; h <= r.deg_; ++h)
    for (int j = 0; h + j <= r.deg_; ++j) r.set_coeff(h, j, coeff(h, j) + o.coeff(h, j));
  return r;
}

TaylorPoly2 TaylorPoly2::operator-(const TaylorPoly2& o) const {
  TaylorPoly2 r(std::max(deg_, o.deg_));
  for (int h = 0; h <= r.deg_; ++h)
    for (int j = 0; h + j <= r.deg_; ++j) r.set_coeff(h, j, coeff(h, j) - o.coeff(h, j));
  return r;
}

TaylorPoly2& TaylorPoly2::operator*=(double s) {
  for (auto& v : c_) v *= s;
  return *this;
}

double TaylorPoly2::max_abs_coeff() const {
  double m = 0.0;
  for (int h = 0; h <= deg_; ++h)
    for (int j = 0; h + j <= deg_; ++j) m = std::max(m, std::abs(coeff(h, j)));
  return m;
}

bool TaylorPoly2::is_zero(double tol) const { return max_abs_coeff() <= tol; }

TaylorPoly2 TaylorPoly2::constant(double v) {
  TaylorPoly2 p(0);
  p.set_coeff(0, 0, v);
  return p;
}

TaylorPoly2 TaylorPoly2::monomial(int h, int j, double v) {
  TaylorPoly2 p(h + j);
  p.set_coeff(h, j, v);
  return p;
}

TaylorPoly2 rotate(const TaylorPoly2& p, double angle) {
  // p(R_{-angle} t): substitute the two linear forms and expand by powers
  const double c = std::cos(angle), s = std::sin(angle);
  TaylorPoly2 u(1), v(1);
  u.set_coeff(1, 0, c);
  u.set_coeff(0, 1, s);
  v.set_coeff(1, 0, -s);
  v.set_coeff(0, 1, c);
  std::vector<TaylorPoly2> upow(p.degree() + 1), vpow(p.degree() + 1);
  upow[0] = TaylorPoly2::constant(1.0);
  vpow[0] = TaylorPoly2::constant(1.0);
  for (int k = 1; k <= p.degree(); ++k) {
    upow[k] = upow[k - 1] * u;
    vpow[k] = vpow[k - 1] * v;
  }
  TaylorPoly2 r(p.degree());
  for (int h = 0; h <= p.degree(); ++h)
    for (int j = 0; h + j <= p.degree(); ++j) {
      const double a = p.coeff(h, j);
      if (a == 0.0) continue;
      TaylorPoly2 term = upow[h] * vpow[j];
      term *= a;
      r = r + term;
    }
  return r;
}

int vanishing_order(const TaylorPoly2& p, double tol) {
  const double scale = p.max_abs_coeff();
  if (scale <= 0.0) fail(ErrorCode::Data, "vanishing_order of the zero function");
  for (int k = 0; k <= p.degree(); ++k) {
    for (int h = 0; h <= k; ++h) {
      if (std::abs(p.coeff(h, k - h)) > tol * scale) return k;
    }
  }
  fail(ErrorCode::Data, "all coefficients below the vanishing tolerance");
}

TaylorPoly2 homogeneous_part(const TaylorPoly2& p, int k) {
  if (k > p.degree()) fail(ErrorCode::Data, "homogeneous degree exceeds the polynomial degree");
  TaylorPoly2 r(k);
  for (int h = 0; h <= k; ++h) r.set_coeff(h, k - h, p.coeff(h, k - h));
  return r;
}

TaylorPoly2 harmonic_from_beta_phi(int k, double beta, double phi) {
  // beta r^k sin(kt + k phi) = beta [ sin(k phi) Re z^k + cos(k phi) Im z^k ]
  TaylorPoly2 re(k), im(k);
  double sign = 1.0;
  for (int i = 0; 2 * i <= k; ++i) {
    re.set_coeff(k - 2 * i, 2 * i, sign * std::round(std::tgamma(k + 1) /
                                                     (std::tgamma(2 * i + 1) *
                                                      std::tgamma(k - 2 * i + 1))));
    sign = -sign;
  }
  sign = 1.0;
  for (int i = 0; 2 * i + 1 <= k; ++i) {
    im.set_coeff(k - 2 * i - 1, 2 * i + 1,
                 sign * std::round(std::tgamma(k + 1) / (std::tgamma(2 * i + 2) *
                                                         std::tgamma(k - 2 * i))));
    sign = -sign;
  }
  re *= beta * std::sin(k * phi);
  im *= beta * std::cos(k * phi);
  return re + im;
}

HarmonicLeading beta_phi(const TaylorPoly2& h, int k) {
  if (k < 1) fail(ErrorCode::Data, "beta_phi needs k >= 1");
  const double scale = h.max_abs_coeff();
  if (scale <= 0.0) fail(ErrorCode::Data, "beta_phi of the zero polynomial");
  // Harmonicity is a linear identity on coefficients; check it exactly
  // relative to the coefficient scale.
  TaylorPoly2 hom = homogeneous_part(h, k);
  if ((h - hom).max_abs_coeff() > 1e-12 * scale)
    fail(ErrorCode::Data, "beta_phi input is not homogeneous of the stated degree");
  if (hom.laplacian().max_abs_coeff() > 1e-10 * scale)
    fail(ErrorCode::Data, "beta_phi input is not harmonic");

  // h = A Re z^k + B Im z^k with A = coeff(t1^k), B = coeff(t1^{k-1} t2)/k
  const double A = hom.coeff(k, 0);
  const double B = hom.coeff(k - 1, 1) / k;
  HarmonicLeading out;
  out.k = k;
  out.beta = std::hypot(A, B);
  double psi = std::atan2(A, B);  // = k phi for the sign=+1 branch
  out.sign = 1;
  if (psi <= -kPi / 2 || psi > kPi / 2) {
    out.sign = -1;
    psi += (psi > 0.0) ? -kPi : kPi;
  }
  out.phi = psi / k;
  // residual check: the (A, B) pair must reproduce every coefficient
  TaylorPoly2 rec = harmonic_from_beta_phi(k, out.sign * out.beta, out.phi);
  if ((rec - hom).max_abs_coeff() > 1e-10 * scale)
    fail(ErrorCode::Data, "beta_phi input is not of the harmonic normal form");
  return out;
}

double poly_area_integral(const TaylorPoly2& q, const ParamCurve& omega, int n) {
  // F = (Q, 0) with d1 Q = q, div F = q
  TaylorPoly2 Q(q.degree() + 1);
  for (int h = 0; h <= q.degree(); ++h)
    for (int j = 0; h + j <= q.degree(); ++j)
      Q.set_coeff(h + 1, j, q.coeff(h, j) / (h + 1.0));
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double t = kTwoPi * i / n;
    const auto f = omega.frame(t);
    acc += Q.eval(f.point) * f.normal.x * f.speed * (kTwoPi / n);
  }
  return acc;
}

double interior_gradient_energy(const TaylorPoly2& h, const ParamCurve& omega, int n) {
  const TaylorPoly2 gx = h.dx(), gy = h.dy();
  return poly_area_integral(gx * gx + gy * gy, omega, n);
}

double area_integral_quadrature(const std::function<double(Vec2)>& f,
                                const ParamCurve& omega, int n, int radial_order) {
  // map (r,s) -> r gamma(s); signed Jacobian r (gamma x gamma') covers the
  // enclosed region with multiplicity one for winding-one curves
  std::vector<double> gl_x(radial_order), gl_w(radial_order);
  {
    // Gauss-Legendre on [0,1] by Newton on Legendre polynomials
    const int m = radial_order;
    for (int i = 0; i < m; ++i) {
      double x = std::cos(kPi * (i + 0.75) / (m + 0.5));
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = x;
        for (int k = 2; k <= m; ++k) {
          const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        const double dp = m * (x * p1 - p0) / (x * x - 1.0);
        const double dx = p1 / dp;
        x -= dx;
        if (std::abs(dx) < 1e-15) break;
      }
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= m; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      const double dp = m * (x * p1 - p0) / (x * x - 1.0);
      gl_x[i] = 0.5 * (1.0 + x);
      gl_w[i] = 1.0 / ((1.0 - x * x) * dp * dp);
    }
  }
  double acc = 0.0;
  for (int i = 0; i < n; ++i) {
    const double s = kTwoPi * i / n;
    const Vec2 g = omega.point(s);
    const Vec2 gp = omega.derivative(s);
    const double jac0 = cross(g, gp);
    for (int r = 0; r < radial_order; ++r) {
      const double rr = gl_x[r];
      acc += f(rr * g) * rr * jac0 * gl_w[r] * (kTwoPi / n);
    }
  }
  return acc;
}

TaylorPoly2 taylor_from_function(const std::function<double(Vec2)>& f, Vec2 center,
                                 int degree, double scale) {
  if (degree > 4) fail(ErrorCode::Data, "FD Taylor extraction supports degree <= 4");
  const double h0 = 1e-2 * scale;
  std::map<std::pair<long, long>, double> cache;
  const double quantum = h0 / 16.0;
  auto sample = [&](double ox, double oy) {
    const std::pair<long, long> key{std::llround(ox / quantum), std::llround(oy / quantum)};
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    const double v = f({center.x + ox, center.y + oy});
    cache.emplace(key, v);
    return v;
  };
  // central difference for d1^a d2^b at one step size
  auto central = [&](int a, int b, double h) {
    double acc = 0.0;
    for (int i = 0; i <= a; ++i) {
      const double wa = ((i % 2) ? -1.0 : 1.0) * std::round(std::tgamma(a + 1) /
                                                            (std::tgamma(i + 1) *
                                                             std::tgamma(a - i + 1)));
      const double ox = (0.5 * a - i) * h;
      for (int j = 0; j <= b; ++j) {
        const double wb = ((j % 2) ? -1.0 : 1.0) * std::round(std::tgamma(b + 1) /
                                                              (std::tgamma(j + 1) *
                                                               std::tgamma(b - j + 1)));
        const double oy = (0.5 * b - j) * h;
        acc += wa * wb * sample(ox, oy);
      }
    }
    return acc / std::pow(h, a + b);
  };
  TaylorPoly2 p(degree);
  for (int a = 0; a <= degree; ++a) {
    for (int b = 0; a + b <= degree; ++b) {
      if (a == 0 && b == 0) {
        p.set_coeff(0, 0, sample(0.0, 0.0));
        continue;
      }
      const double d0 = central(a, b, h0);
      const double d1 = central(a, b, h0 / 2.0);
      const double d2 = central(a, b, h0 / 4.0);
      const double e1 = (4.0 * d1 - d0) / 3.0;
      const double e2 = (4.0 * d2 - d1) / 3.0;
      const double val = (16.0 * e2 - e1) / 15.0;
      p.set_coeff(a, b, val / (factorial(a) * factorial(b)));
    }
  }
  return p;
}

}  // namespace holecap
