#pragma once

namespace ellipsoid {

// Principal-branch Lambert W on [0, inf): the w >= 0 with w e^w = x.
// Halley iteration from a log-based initial guess; relative defect
// |W e^W - x| / x stays below ~1e-15 across the whole range.
double lambert_w(double x);

}  // namespace ellipsoid
