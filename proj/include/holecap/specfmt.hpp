#pragma once

#include <string>

#include "holecap/geometry.hpp"
#include "holecap/taylor.hpp"

namespace holecap {

/// Curve-spec text parser. Accepts the compact form
///   ellipse:a,b[,theta=T][,cx=X][,cy=Y]
/// and the structured key/value form
///   kind=ellipse a=3 b=2 theta=0 cx=0 cy=0
///   kind=trig
///   x 0 <const> 0
///   x m <cos> <sin>
///   y m <cos> <sin>
/// (structured records may separate rows by newlines or semicolons).
ParamCurve parse_curve_spec(const std::string& text);

/// Polynomial text format: rows "h j coeff" separated by newlines or
/// semicolons; a leading "poly:" tag is permitted.
TaylorPoly2 parse_poly_spec(const std::string& text);

/// Fixed 17-significant-digit float formatting used by every CSV/JSON
/// emitter (byte-identical reruns).
std::string fmt17(double v);

}  // namespace holecap
