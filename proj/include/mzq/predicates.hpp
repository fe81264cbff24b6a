#ifndef MZQ_PREDICATES_HPP
#define MZQ_PREDICATES_HPP

#include "mzq/geometry.hpp"

namespace mzq {

// Exact-sign geometric predicates. Each first evaluates the determinant in
// double with a forward error bound; if the sign cannot be certified the
// computation is repeated in exact rational arithmetic.

// Sign of the signed area of (a, b, c): +1 counter-clockwise, -1 clockwise,
// 0 collinear.
int orient2d(Point2 a, Point2 b, Point2 c);

// For counter-clockwise (a, b, c): +1 if p is strictly inside their
// circumcircle, -1 strictly outside, 0 cocircular.
int incircle(Point2 a, Point2 b, Point2 c, Point2 p);

// True if q lies on the closed segment [a, b] (collinear and within range).
bool on_segment(Point2 a, Point2 b, Point2 q);

// True if the open segments (a,b) and (c,d) intersect in at least one point,
// including collinear overlap and endpoint touches. Shared endpoints between
// the segments count as an intersection.
bool segments_intersect(Point2 a, Point2 b, Point2 c, Point2 d);

} // namespace mzq

#endif
