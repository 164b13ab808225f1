#pragma once

#include "maskpoints/geometry.hpp"

namespace maskpoints {

/// Sign of the orientation determinant: +1 when (a, b, c) wind
/// counterclockwise (positive signed area), -1 clockwise, 0 collinear.
/// Evaluated with a floating-point filter backed by exact expansion
/// arithmetic, so the sign is always correct.
int orient2d_sign(const Point2& a, const Point2& b, const Point2& c);

/// Plain double orientation value, 2x the signed triangle area. Not exact
/// near zero; pair with orient2d_sign when the sign matters.
double orient2d_value(const Point2& a, const Point2& b, const Point2& c);

/// Sign of the incircle determinant: +1 when d lies strictly inside the
/// circumcircle of the counterclockwise triangle (a, b, c), -1 strictly
/// outside, 0 cocircular. Exact, same scheme as orient2d_sign.
int incircle_sign(const Point2& a, const Point2& b, const Point2& c,
                  const Point2& d);

}  // namespace maskpoints
