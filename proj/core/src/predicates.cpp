#include "maskpoints/predicates.hpp"

#include <cmath>
#include <vector>

namespace maskpoints {

namespace {

// Expansion arithmetic after Shewchuk: an exact real is a sum of
// non-overlapping doubles ordered by increasing magnitude. Only the sign of
// the final expansion is consumed, and only when the float filter fails, so
// the quadratic-time simplicity here is fine.
using Expansion = std::vector<double>;

constexpr double kEpsilon = 1.1102230246251565e-16;  // 2^-53
constexpr double kCcwErrBound = (3.0 + 16.0 * kEpsilon) * kEpsilon;
constexpr double kIccErrBound = (10.0 + 96.0 * kEpsilon) * kEpsilon;

struct TwoFloat {
  double hi;
  double lo;
};

TwoFloat two_sum(double a, double b) {
  const double s = a + b;
  const double bv = s - a;
  const double av = s - bv;
  return {s, (a - av) + (b - bv)};
}

TwoFloat two_product(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

// e + scalar, preserving the expansion invariants; zero components dropped.
Expansion grow(const Expansion& e, double b) {
  Expansion out;
  out.reserve(e.size() + 1);
  double q = b;
  for (const double comp : e) {
    const TwoFloat r = two_sum(q, comp);
    if (r.lo != 0.0) out.push_back(r.lo);
    q = r.hi;
  }
  if (q != 0.0 || out.empty()) out.push_back(q);
  return out;
}

Expansion add(const Expansion& e, const Expansion& f) {
  Expansion out = e;
  for (const double comp : f) out = grow(out, comp);
  return out;
}

Expansion scale(const Expansion& e, double b) {
  Expansion out;
  if (b == 0.0) {
    out.push_back(0.0);
    return out;
  }
  for (const double comp : e) {
    const TwoFloat p = two_product(comp, b);
    out = grow(out, p.lo);
    out = grow(out, p.hi);
  }
  return out;
}

Expansion mul(const Expansion& e, const Expansion& f) {
  Expansion out{0.0};
  for (const double comp : f) {
    out = add(out, scale(e, comp));
  }
  return out;
}

Expansion sub(const Expansion& e, const Expansion& f) {
  return add(e, scale(f, -1.0));
}

Expansion from_product(double a, double b) {
  const TwoFloat p = two_product(a, b);
  Expansion out;
  if (p.lo != 0.0) out.push_back(p.lo);
  out.push_back(p.hi);
  return out;
}

Expansion from_difference(double a, double b) {
  const TwoFloat s = two_sum(a, -b);
  Expansion out;
  if (s.lo != 0.0) out.push_back(s.lo);
  out.push_back(s.hi);
  return out;
}

int expansion_sign(const Expansion& e) {
  const double top = e.back();  // largest magnitude
  if (top > 0.0) return 1;
  if (top < 0.0) return -1;
  return 0;
}

int orient2d_exact(const Point2& a, const Point2& b, const Point2& c) {
  // ax(by - cy) + bx(cy - ay) + cx(ay - by), term by term.
  Expansion det = from_product(a.x, b.y);
  det = sub(det, from_product(a.x, c.y));
  det = add(det, from_product(b.x, c.y));
  det = sub(det, from_product(b.x, a.y));
  det = add(det, from_product(c.x, a.y));
  det = sub(det, from_product(c.x, b.y));
  return expansion_sign(det);
}

int incircle_exact(const Point2& a, const Point2& b, const Point2& c,
                   const Point2& d) {
  const Expansion adx = from_difference(a.x, d.x);
  const Expansion ady = from_difference(a.y, d.y);
  const Expansion bdx = from_difference(b.x, d.x);
  const Expansion bdy = from_difference(b.y, d.y);
  const Expansion cdx = from_difference(c.x, d.x);
  const Expansion cdy = from_difference(c.y, d.y);

  const Expansion alift = add(mul(adx, adx), mul(ady, ady));
  const Expansion blift = add(mul(bdx, bdx), mul(bdy, bdy));
  const Expansion clift = add(mul(cdx, cdx), mul(cdy, cdy));

  const Expansion bxcy = sub(mul(bdx, cdy), mul(cdx, bdy));
  const Expansion cxay = sub(mul(cdx, ady), mul(adx, cdy));
  const Expansion axby = sub(mul(adx, bdy), mul(bdx, ady));

  Expansion det = mul(alift, bxcy);
  det = add(det, mul(blift, cxay));
  det = add(det, mul(clift, axby));
  return expansion_sign(det);
}

int sign_of(double v) {
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

}  // namespace

double orient2d_value(const Point2& a, const Point2& b, const Point2& c) {
  return (a.x - c.x) * (b.y - c.y) - (a.y - c.y) * (b.x - c.x);
}

int orient2d_sign(const Point2& a, const Point2& b, const Point2& c) {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;

  double detsum;
  if (detleft > 0.0) {
    if (detright <= 0.0) return sign_of(det);
    detsum = detleft + detright;
  } else if (detleft < 0.0) {
    if (detright >= 0.0) return sign_of(det);
    detsum = -detleft - detright;
  } else {
    return sign_of(det);
  }

  const double errbound = kCcwErrBound * detsum;
  if (det >= errbound || -det >= errbound) return sign_of(det);
  return orient2d_exact(a, b, c);
}

int incircle_sign(const Point2& a, const Point2& b, const Point2& c,
                  const Point2& d) {
  const double adx = a.x - d.x;
  const double bdx = b.x - d.x;
  const double cdx = c.x - d.x;
  const double ady = a.y - d.y;
  const double bdy = b.y - d.y;
  const double cdy = c.y - d.y;

  const double bdxcdy = bdx * cdy;
  const double cdxbdy = cdx * bdy;
  const double alift = adx * adx + ady * ady;

  const double cdxady = cdx * ady;
  const double adxcdy = adx * cdy;
  const double blift = bdx * bdx + bdy * bdy;

  const double adxbdy = adx * bdy;
  const double bdxady = bdx * ady;
  const double clift = cdx * cdx + cdy * cdy;

  const double det = alift * (bdxcdy - cdxbdy) + blift * (cdxady - adxcdy) +
                     clift * (adxbdy - bdxady);

  const double permanent = (std::fabs(bdxcdy) + std::fabs(cdxbdy)) * alift +
                           (std::fabs(cdxady) + std::fabs(adxcdy)) * blift +
                           (std::fabs(adxbdy) + std::fabs(bdxady)) * clift;
  const double errbound = kIccErrBound * permanent;
  if (det > errbound || -det > errbound) return sign_of(det);
  return incircle_exact(a, b, c, d);
}

}  // namespace maskpoints
