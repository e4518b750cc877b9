#include "isac/voronoi.hpp"

#include <algorithm>
#include <cmath>

#include "isac/errors.hpp"

namespace isac {

namespace {

double cross(Point o, Point a, Point b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Keeps the part of poly with n.p <= c.
Polygon clip(const Polygon& poly, Point n, double c) {
  Polygon out;
  out.reserve(poly.size() + 1);
  const std::size_t k = poly.size();
  for (std::size_t i = 0; i < k; ++i) {
    const Point a = poly[i];
    const Point b = poly[(i + 1) % k];
    const double fa = n.x * a.x + n.y * a.y - c;
    const double fb = n.x * b.x + n.y * b.y - c;
    if (fa <= 0.0) out.push_back(a);
    if ((fa < 0.0 && fb > 0.0) || (fa > 0.0 && fb < 0.0)) {
      const double t = fa / (fa - fb);
      out.push_back({a.x + t * (b.x - a.x), a.y + t * (b.y - a.y)});
    }
  }
  return out;
}

}  // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

Polygon voronoi_cell(Point center, const std::vector<Point>& sites, double bound) {
  if (!(bound > 0.0)) throw DomainError("voronoi_cell: bound must be > 0");
  Polygon cell = {{center.x - bound, center.y - bound},
                  {center.x + bound, center.y - bound},
                  {center.x + bound, center.y + bound},
                  {center.x - bound, center.y + bound}};

  std::vector<std::pair<double, Point>> by_distance;
  by_distance.reserve(sites.size());
  for (const Point& s : sites) {
    const double d = distance(s, center);
    if (d > 0.0) by_distance.emplace_back(d, s);
  }
  std::sort(by_distance.begin(), by_distance.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  double reach = bound * std::sqrt(2.0);
  for (const auto& [d, s] : by_distance) {
    // A site farther than twice the farthest vertex cannot cut the cell.
    if (d > 2.0 * reach) break;
    const Point n{s.x - center.x, s.y - center.y};
    const double c = 0.5 * ((s.x * s.x + s.y * s.y) - (center.x * center.x + center.y * center.y));
    cell = clip(cell, n, c);
    reach = 0.0;
    for (const Point& v : cell) reach = std::max(reach, distance(v, center));
  }
  return cell;
}

double polygon_area(const Polygon& poly) {
  double a = 0.0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) a += cross(poly[0], poly[i], poly[i + 1]);
  return 0.5 * a;
}

Point sample_in_polygon(const Polygon& poly, Rng& rng) {
  if (poly.size() < 3) throw DomainError("sample_in_polygon: degenerate polygon");
  std::vector<double> cumulative;
  cumulative.reserve(poly.size() - 2);
  double total = 0.0;
  for (std::size_t i = 1; i + 1 < poly.size(); ++i) {
    total += 0.5 * cross(poly[0], poly[i], poly[i + 1]);
    cumulative.push_back(total);
  }
  const double pick = uniform_open(rng) * total;
  std::size_t tri = std::lower_bound(cumulative.begin(), cumulative.end(), pick) - cumulative.begin();
  tri = std::min(tri, cumulative.size() - 1);

  const Point a = poly[0], b = poly[tri + 1], c = poly[tri + 2];
  double u = uniform_open(rng);
  double v = uniform_open(rng);
  if (u + v > 1.0) {
    u = 1.0 - u;
    v = 1.0 - v;
  }
  return {a.x + u * (b.x - a.x) + v * (c.x - a.x), a.y + u * (b.y - a.y) + v * (c.y - a.y)};
}

bool in_cell(Point p, Point center, const std::vector<Point>& sites) {
  const double d0 = distance(p, center);
  for (const Point& s : sites) {
    if (distance(p, s) < d0) return false;
  }
  return true;
}

}  // namespace isac
