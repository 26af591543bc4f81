#pragma once

#include "kpgeo/lie.hpp"

namespace kpgeo {

/// Chart coordinates z = x + iy on the SU(2) orbit disc. Regular points
/// satisfy x^2 + y^2 < 1; the rim |z| = 1 is the singular stratum and is
/// only valid as a curve endpoint.
struct DiscPoint {
  double x = 0.0;
  double y = 0.0;

  double r2() const { return x * x + y * y; }
};

struct DiscTangent {
  double vx = 0.0;
  double vy = 0.0;
};

/// One record of a disc curve with its (analytic or differenced) velocity.
struct DiscCurvePoint {
  double t = 0.0;
  DiscPoint p;
  DiscTangent v;
};

struct QuotientGeodesicState {
  DiscPoint point;
  DiscTangent velocity;
};

/// (1,1)-entry chart map SU(2) -> closed unit disc.
DiscPoint project(const GroupElement& x);

}  // namespace kpgeo
