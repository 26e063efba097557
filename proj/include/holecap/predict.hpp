#pragma once

#include <functional>
#include <string>
#include <vector>

#include "holecap/series.hpp"

namespace holecap {

enum class ShiftRegime { Log, Power };

/// Predicted eigenvalue shift for a hole p + eps*omega. In the log regime
/// (vanishing order 0) the shift is coefficient * 2pi/|log eps| with
/// coefficient = u(p)^2; in the power regime it is coefficient * eps^{2k}
/// with the leading-order energy as coefficient. Asymptotic-only contract:
/// the o(.) remainders are unquantified.
struct EigPrediction {
  double lambda_base = 0.0;
  Vec2 center{};
  int kbar = 0;
  ShiftRegime regime = ShiftRegime::Log;
  double coefficient = 0.0;
  double limit_at_infinity = 0.0;  // lim of the exterior field (power regime)

  double shift(double eps) const;
  double predict(double eps) const { return lambda_base + shift(eps); }
};

/// u_at_p is the Taylor data of the eigenfunction at the (translated) hole
/// center; omega is the unscaled hole shape in the same frame.
EigPrediction predict_shift(double lambda_N, const TaylorPoly2& u_at_p,
                            const ParamCurve& omega, int n = 256, double tol = 1e-9);

struct ScalingDescriptor {
  int kbar = 0;
  ShiftRegime regime = ShiftRegime::Log;
  double exponent = 0.0;  // 2k for the power regime
  std::string label;      // "1/|log eps|" or "eps^2k"
};

ScalingDescriptor scaling_exponent(const TaylorPoly2& u_at_p, double tol = 1e-9);

/// argmax of |u|^2 over an interior grid with margin keeping p + eps*omega
/// inside Omega. Ties within tolerance come back as a set; a full-grid tie
/// is flagged degenerate.
struct MaxPlacement {
  std::vector<Vec2> argmax;
  double value = 0.0;
  bool degenerate = false;
};

MaxPlacement optimal_location_max(const std::function<double(Vec2)>& u,
                                  const ParamCurve& Omega, int grid_res,
                                  const ParamCurve& omega, double eps,
                                  double tie_tol = 1e-9);

/// Candidate hole centers for the eigenvalue-minimizing placement: grid
/// points of maximal vanishing order, ranked by the leading-order energy.
struct MinPlacement {
  struct Candidate {
    Vec2 p;
    int kbar = 0;
    double energy = 0.0;
  };
  std::vector<Candidate> ranked;  // ascending energy
  int kbar_max = 0;
  std::string advisory;  // non-empty when no minimizer is expected
};

MinPlacement optimal_location_min(const std::function<double(Vec2)>& u,
                                  const ParamCurve& Omega, const ParamCurve& omega,
                                  int grid_res, double eps, int n = 128);

}  // namespace holecap
