#include "holecap/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace holecap {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kEulerGamma = 0.57721566490153286060651209;
constexpr double kSeriesCut = 12.0;

void check_args(int m, double x) {
  if (m < 0 || m > 12) fail(ErrorCode::NumericValidity, "Bessel order must be in [0, 12]");
  if (!(x <= 1e4)) fail(ErrorCode::NumericValidity, "Bessel argument above 1e4");
}

double j_series(int m, double x) {
  // sum_l (-1)^l (x/2)^{m+2l} / (l! (m+l)!)
  const double q = 0.25 * x * x;
  double term = std::pow(0.5 * x, m);
  for (int i = 1; i <= m; ++i) term /= i;
  double sum = term;
  for (int l = 1; l < 80; ++l) {
    term *= -q / (l * (m + l));
    sum += term;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
  }
  return sum;
}

// Backward (Miller) recurrence with the J_0 + 2 sum J_{2k} = 1 normalization.
void j_backward(double x, int m_max, std::vector<double>& out) {
  const int start = static_cast<int>(x + 16.0 * std::cbrt(x + 1.0) + 24) & ~1;
  out.assign(m_max + 1, 0.0);
  double jp = 0.0;        // J_{k+1} (unnormalized)
  double jc = 1e-280;     // J_k
  double norm = 0.0;
  for (int k = start; k >= 0; --k) {
    if (k <= m_max) out[k] = jc;
    if (k % 2 == 0) norm += (k == 0) ? jc : 2.0 * jc;
    if (k == 0) break;
    double jm = (2.0 * k / x) * jc - jp;
    jp = jc;
    jc = jm;
    if (std::abs(jc) > 1e250) {
      const double s = 1e-250;
      jc *= s;
      jp *= s;
      norm *= s;
      for (auto& v : out) v *= s;
    }
  }
  for (auto& v : out) v /= norm;
}

struct HankelPQ {
  double p, q;
};

// Asymptotic P, Q factors for order nu at large x.
HankelPQ hankel_pq(int nu, double x) {
  const double mu = 4.0 * nu * nu;
  double term = 1.0;
  double p = 1.0, q = 0.0;
  double prev = std::abs(term);
  for (int k = 1; k < 40; ++k) {
    term *= (mu - (2.0 * k - 1.0) * (2.0 * k - 1.0)) / (k * 8.0 * x);
    const double mag = std::abs(term);
    if (mag > prev) break;  // divergent tail; stop at the optimal truncation
    prev = mag;
    if (k % 2 == 1) {
      q += ((k / 2) % 2 == 0 ? 1.0 : -1.0) * term;
    } else {
      p += ((k / 2) % 2 == 0 ? 1.0 : -1.0) * term;
    }
    if (mag < 1e-18) break;
  }
  return {p, q};
}

double j_asymptotic(int nu, double x) {
  const auto [p, q] = hankel_pq(nu, x);
  const double chi = x - (0.5 * nu + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

double y_asymptotic(int nu, double x) {
  const auto [p, q] = hankel_pq(nu, x);
  const double chi = x - (0.5 * nu + 0.25) * kPi;
  return std::sqrt(2.0 / (kPi * x)) * (p * std::sin(chi) + q * std::cos(chi));
}

// Y_0, Y_1 by the logarithmic series (x <= kSeriesCut).
double y0_series(double x) {
  const double q = 0.25 * x * x;
  double term = 1.0, hk = 0.0, sum = 0.0;
  for (int k = 1; k < 80; ++k) {
    term *= q / (static_cast<double>(k) * k);
    hk += 1.0 / k;
    const double add = ((k % 2 == 1) ? 1.0 : -1.0) * hk * term;
    sum += add;
    if (std::abs(add) < 1e-18 * (std::abs(sum) + 1e-30)) break;
  }
  return (2.0 / kPi) * ((std::log(0.5 * x) + kEulerGamma) * j_series(0, x) + sum);
}

double y1_series(double x) {
  // Y_1 = (2/pi) ln(x/2) J_1 - (2/(pi x))
  //       - (x/(2 pi)) sum_k (psi(k+1) + psi(k+2)) (-q)^k / (k! (k+1)!)
  const double q = 0.25 * x * x;
  double term = 1.0;  // (-q)^k / (k!(k+1)!)
  double psi1 = -kEulerGamma, psi2 = 1.0 - kEulerGamma;
  double sum = psi1 + psi2;
  for (int k = 1; k < 80; ++k) {
    term *= -q / (static_cast<double>(k) * (k + 1));
    psi1 += 1.0 / k;
    psi2 += 1.0 / (k + 1);
    const double add = (psi1 + psi2) * term;
    sum += add;
    if (std::abs(add) < 1e-18 * (std::abs(sum) + 1e-30)) break;
  }
  return (2.0 / kPi) * std::log(0.5 * x) * j_series(1, x) - 2.0 / (kPi * x) -
         (x / (2.0 * kPi)) * sum;
}
}  // namespace

double bessel_J(int m, double x) {
  check_args(m, x);
  if (!(x >= 0.0)) fail(ErrorCode::NumericValidity, "bessel_J needs x >= 0");
  if (x == 0.0) return m == 0 ? 1.0 : 0.0;
  if (x <= kSeriesCut) return j_series(m, x);
  std::vector<double> j;
  j_backward(x, std::max(m, 1), j);
  return j[m];
}

double bessel_Y(int m, double x) {
  check_args(m, x);
  if (!(x > 0.0)) fail(ErrorCode::NumericValidity, "bessel_Y needs x > 0");
  double y0, y1;
  if (x <= kSeriesCut) {
    y0 = y0_series(x);
    y1 = y1_series(x);
  } else {
    y0 = y_asymptotic(0, x);
    y1 = y_asymptotic(1, x);
  }
  if (m == 0) return y0;
  double ym1 = y0, yc = y1;
  for (int k = 1; k < m; ++k) {
    const double yn = (2.0 * k / x) * yc - ym1;
    ym1 = yc;
    yc = yn;
  }
  return yc;
}

double bessel_j_zero(int m, int n) {
  if (n < 1 || n > 64) fail(ErrorCode::NumericValidity, "zero index out of range");
  // scan for sign changes, then bisect
  double x = (m == 0) ? 2.0 : std::max(1.0, static_cast<double>(m));
  double f_prev = bessel_J(m, x);
  int found = 0;
  const double step = 0.1;
  for (int it = 0; it < 400000; ++it) {
    const double x_next = x + step;
    const double f_next = bessel_J(m, x_next);
    if (f_prev == 0.0) {
      ++found;
      if (found == n) return x;
    } else if (f_prev * f_next < 0.0) {
      ++found;
      if (found == n) {
        double lo = x, hi = x_next, flo = f_prev;
        for (int b = 0; b < 200; ++b) {
          const double mid = 0.5 * (lo + hi);
          const double fm = bessel_J(m, mid);
          if (flo * fm <= 0.0) {
            hi = mid;
          } else {
            lo = mid;
            flo = fm;
          }
          if (hi - lo < 1e-14 * hi) break;
        }
        return 0.5 * (lo + hi);
      }
    }
    x = x_next;
    f_prev = f_next;
  }
  fail(ErrorCode::NumericValidity, "Bessel zero scan exhausted");
}

double DiskMode::eval(Vec2 x) const {
  const double r = norm(x);
  const double k = std::sqrt(lambda);
  const double ang = std::atan2(x.y, x.x);
  const double angular =
      (parity == AngularParity::Cos) ? std::cos(m * ang) : std::sin(m * ang);
  return norm_const * bessel_J(m, k * r) * angular;
}

std::vector<DiskMode> disk_eigenvalues(double R, int count) {
  if (count < 1 || count > 50) fail(ErrorCode::NumericValidity, "count must be in [1, 50]");
  if (!(R > 0.0)) fail(ErrorCode::Geometry, "disk radius must be positive");
  struct Entry {
    double j;
    int m, n;
  };
  // every needed zero lies below the count-th zero of J_0
  const double j_cap = bessel_j_zero(0, count) + 1e-9;
  std::vector<Entry> entries;
  for (int m = 0; m <= 12; ++m) {
    if (bessel_j_zero(m, 1) > j_cap) break;
    for (int n = 1; n <= count; ++n) {
      const double j = bessel_j_zero(m, n);
      if (j > j_cap) break;
      entries.push_back({j, m, n});
    }
  }
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.j < b.j; });
  std::vector<DiskMode> out;
  for (const auto& e : entries) {
    const double jz = e.j;
    const double lambda = (jz / R) * (jz / R);
    const double jnext = std::abs(bessel_J(e.m + 1, jz));
    DiskMode mode;
    mode.m = e.m;
    mode.n = e.n;
    mode.radius = R;
    mode.lambda = lambda;
    mode.simple = (e.m == 0);
    if (e.m == 0) {
      mode.norm_const = 1.0 / (std::sqrt(kPi) * jnext * R);
      mode.parity = AngularParity::Cos;
      out.push_back(mode);
    } else {
      mode.norm_const = std::sqrt(2.0 / kPi) / (jnext * R);
      mode.parity = AngularParity::Cos;
      out.push_back(mode);
      if (static_cast<int>(out.size()) >= count) break;
      mode.parity = AngularParity::Sin;
      out.push_back(mode);
    }
    if (static_cast<int>(out.size()) >= count) break;
  }
  out.resize(count);
  return out;
}

TaylorPoly2 disk_eigenfunction_taylor(const DiskMode& mode, Vec2 p, int degree) {
  if (degree > 8) fail(ErrorCode::NumericValidity, "Taylor degree must be <= 8");
  if (!(norm(p) < mode.radius)) fail(ErrorCode::NumericValidity, "point outside the disk");
  if (norm(p) > 0.0) {
    return taylor_from_function([&mode](Vec2 x) { return mode.eval(x); }, p, degree,
                                mode.radius);
  }
  // exact center expansion: J_m(k r) {cos,sin}(m theta)
  //   = sum_l (-1)^l (k/2)^{m+2l} / (l! (m+l)!) (x^2+y^2)^l {Re,Im}((x+iy)^m)
  const double k = std::sqrt(mode.lambda);
  TaylorPoly2 re(mode.m), im(std::max(mode.m, 1));
  double sign = 1.0;
  for (int i = 0; 2 * i <= mode.m; ++i) {
    double b = 1.0;
    for (int t = 1; t <= 2 * i; ++t) b = b * (mode.m - 2 * i + t) / t;
    re.set_coeff(mode.m - 2 * i, 2 * i, sign * std::round(b));
    sign = -sign;
  }
  sign = 1.0;
  for (int i = 0; 2 * i + 1 <= mode.m; ++i) {
    double b = 1.0;
    for (int t = 1; t <= 2 * i + 1; ++t) b = b * (mode.m - 2 * i - 1 + t) / t;
    im.set_coeff(mode.m - 2 * i - 1, 2 * i + 1, sign * std::round(b));
    sign = -sign;
  }
  const TaylorPoly2& angular = (mode.parity == AngularParity::Cos) ? re : im;
  TaylorPoly2 r2(2);
  r2.set_coeff(2, 0, 1.0);
  r2.set_coeff(0, 2, 1.0);
  TaylorPoly2 out(degree);
  TaylorPoly2 radial_pow = TaylorPoly2::constant(1.0);
  double coef = std::pow(0.5 * k, mode.m);
  for (int t = 1; t <= mode.m; ++t) coef /= t;
  for (int l = 0; mode.m + 2 * l <= degree; ++l) {
    if (l > 0) {
      radial_pow = radial_pow * r2;
      coef *= -0.25 * k * k / (static_cast<double>(l) * (mode.m + l));
    }
    TaylorPoly2 term = radial_pow * angular;
    term *= coef * mode.norm_const;
    out = out + term;
  }
  return out;
}

std::vector<double> annulus_eigenvalues(double eps, int m, int count) {
  if (!(eps >= 1e-6 && eps <= 0.9))
    fail(ErrorCode::NumericValidity, "annulus ratio must be in [1e-6, 0.9]");
  if (count < 1 || count > 64) fail(ErrorCode::NumericValidity, "count out of range");
  auto cross = [&](double k) {
    return bessel_J(m, k * eps) * bessel_Y(m, k) - bessel_J(m, k) * bessel_Y(m, k * eps);
  };
  std::vector<double> roots;
  const double step = 0.05;
  double x = 1e-4;
  double f_prev = cross(x);
  for (int it = 0; it < 4000000 && static_cast<int>(roots.size()) < count; ++it) {
    const double x_next = x + step;
    const double f_next = cross(x_next);
    if (f_prev * f_next < 0.0) {
      double lo = x, hi = x_next, flo = f_prev;
      for (int b = 0; b < 200; ++b) {
        const double mid = 0.5 * (lo + hi);
        const double fm = cross(mid);
        if (flo * fm <= 0.0) {
          hi = mid;
        } else {
          lo = mid;
          flo = fm;
        }
        if (hi - lo < 1e-14 * hi) break;
      }
      roots.push_back(0.5 * (lo + hi));
    }
    x = x_next;
    f_prev = f_next;
  }
  if (static_cast<int>(roots.size()) < count)
    fail(ErrorCode::NumericValidity, "annulus root bracketing failed");
  std::vector<double> lambdas(count);
  for (int i = 0; i < count; ++i) lambdas[i] = roots[i] * roots[i];
  return lambdas;
}

}  // namespace holecap
