#pragma once

#include <array>
#include <vector>

#include "altsurf/curve.hpp"

namespace altsurf::detail {

/// A curve checked against a point index. When the check passes,
/// gap_points[i] holds the attachment points at the two ends of gap i: the
/// end leaving station i and the end entering station i + 1.
struct ResolvedCurve {
  CurveCheck check;
  std::vector<std::array<int, 2>> gap_points;
};

ResolvedCurve resolve_curve(const Curve& c, const Diagram& d, const PointIndex& index);

}  // namespace altsurf::detail
