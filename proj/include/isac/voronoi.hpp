#pragma once

#include <vector>

#include "isac/rng.hpp"

namespace isac {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

double distance(Point a, Point b);

// Convex polygon, vertices in counter-clockwise order.
using Polygon = std::vector<Point>;

// Voronoi cell of `center` among `sites` (center itself may be included and
// is skipped), clipped to the square of half-width `bound` around center.
Polygon voronoi_cell(Point center, const std::vector<Point>& sites, double bound);

double polygon_area(const Polygon& poly);

// Uniform point in a convex polygon via fan triangulation.
Point sample_in_polygon(const Polygon& poly, Rng& rng);

// True when no site is strictly closer to p than center.
bool in_cell(Point p, Point center, const std::vector<Point>& sites);

}  // namespace isac
