#pragma once

#include <vector>

#include "stokesmini/geometry.hpp"

namespace stokesmini {

// Delaunay triangulation of a planar point set (incremental Bowyer-Watson).
// Returns counterclockwise triangles covering the convex hull, indexed into
// `points`.  Near-degenerate incircle ties resolve deterministically towards
// keeping the existing triangulation, so collinear/cocircular inputs yield a
// valid (if not strictly Delaunay) conformal triangulation.
std::vector<Triangle> delaunay_triangulate(const std::vector<Point2>& points);

}  // namespace stokesmini
