#include "mzq/predicates.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>

namespace mzq {

namespace {

using Rational = boost::multiprecision::cpp_rational;

int sign_of(const Rational& r) {
  if (r > 0) return 1;
  if (r < 0) return -1;
  return 0;
}

int orient2d_exact(Point2 a, Point2 b, Point2 c) {
  const Rational ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
  const Rational det = (ax - cx) * (by - cy) - (ay - cy) * (bx - cx);
  return sign_of(det);
}

int incircle_exact(Point2 a, Point2 b, Point2 c, Point2 p) {
  const Rational adx = Rational(a.x) - Rational(p.x);
  const Rational ady = Rational(a.y) - Rational(p.y);
  const Rational bdx = Rational(b.x) - Rational(p.x);
  const Rational bdy = Rational(b.y) - Rational(p.y);
  const Rational cdx = Rational(c.x) - Rational(p.x);
  const Rational cdy = Rational(c.y) - Rational(p.y);
  const Rational alift = adx * adx + ady * ady;
  const Rational blift = bdx * bdx + bdy * bdy;
  const Rational clift = cdx * cdx + cdy * cdy;
  const Rational det = alift * (bdx * cdy - cdx * bdy) +
                       blift * (cdx * ady - adx * cdy) +
                       clift * (adx * bdy - bdx * ady);
  return sign_of(det);
}

} // namespace

int orient2d(Point2 a, Point2 b, Point2 c) {
  const double detleft = (a.x - c.x) * (b.y - c.y);
  const double detright = (a.y - c.y) * (b.x - c.x);
  const double det = detleft - detright;
  // Conservative filter (a few ulps above the tight Shewchuk bound).
  const double errbound = 4.0e-15 * (std::fabs(detleft) + std::fabs(detright));
  if (det > errbound) return 1;
  if (det < -errbound) return -1;
  if (detleft == 0.0 && detright == 0.0) return 0;
  return orient2d_exact(a, b, c);
}

int incircle(Point2 a, Point2 b, Point2 c, Point2 p) {
  const double adx = a.x - p.x, ady = a.y - p.y;
  const double bdx = b.x - p.x, bdy = b.y - p.y;
  const double cdx = c.x - p.x, cdy = c.y - p.y;
  const double alift = adx * adx + ady * ady;
  const double blift = bdx * bdx + bdy * bdy;
  const double clift = cdx * cdx + cdy * cdy;
  const double det = alift * (bdx * cdy - cdx * bdy) +
                     blift * (cdx * ady - adx * cdy) +
                     clift * (adx * bdy - bdx * ady);
  const double permanent = alift * (std::fabs(bdx * cdy) + std::fabs(cdx * bdy)) +
                           blift * (std::fabs(cdx * ady) + std::fabs(adx * cdy)) +
                           clift * (std::fabs(adx * bdy) + std::fabs(bdx * ady));
  const double errbound = 1.2e-14 * permanent;
  if (det > errbound) return 1;
  if (det < -errbound) return -1;
  return incircle_exact(a, b, c, p);
}

bool on_segment(Point2 a, Point2 b, Point2 q) {
  if (orient2d(a, b, q) != 0) return false;
  return std::min(a.x, b.x) <= q.x && q.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= q.y && q.y <= std::max(a.y, b.y);
}

bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d) {
  const int o1 = orient2d(a, b, c);
  const int o2 = orient2d(a, b, d);
  const int o3 = orient2d(c, d, a);
  const int o4 = orient2d(c, d, b);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(a, b, c)) return true;
  if (o2 == 0 && on_segment(a, b, d)) return true;
  if (o3 == 0 && on_segment(c, d, a)) return true;
  if (o4 == 0 && on_segment(c, d, b)) return true;
  return false;
}

} // namespace mzq
