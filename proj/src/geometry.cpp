// SPDX-License-Identifier: Apache-2.0
#include "tbench/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "tbench/units.hpp"

namespace tbench {

WallSegment make_wall(Point2D center, double length_m, double theta_rad) {
  if (length_m <= 0.0) throw std::invalid_argument("wall length must be positive");
  WallSegment w;
  w.center = center;
  w.length_m = length_m;
  w.theta_rad = wrap_2pi(theta_rad);
  const double hx = 0.5 * length_m * std::cos(w.theta_rad);
  const double hy = 0.5 * length_m * std::sin(w.theta_rad);
  w.a = {center.x - hx, center.y - hy};
  w.b = {center.x + hx, center.y + hy};
  return w;
}

std::vector<Point2D> sample_fhppp(double density_per_km2, const Region& region,
                                  RngStream& rng) {
  if (density_per_km2 < 0.0)
    throw std::invalid_argument("FHPPP density must be >= 0");
  if (region.side_m <= 0.0)
    throw std::invalid_argument("region side must be positive");
  const std::uint64_t n = rng.poisson(density_per_km2 * region.area_km2());
  std::vector<Point2D> pts;
  pts.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double x = rng.uniform(0.0, region.side_m);
    const double y = rng.uniform(0.0, region.side_m);
    pts.push_back({x, y});
  }
  return pts;
}

double wrap_distance(Point2D a, Point2D b, const Region& region) {
  double dx = std::abs(a.x - b.x);
  double dy = std::abs(a.y - b.y);
  if (region.wrap_around) {
    dx = std::min(dx, region.side_m - dx);
    dy = std::min(dy, region.side_m - dy);
  }
  return std::hypot(dx, dy);
}

BlockageField sample_blockages(double density_per_km2, double wall_length_m,
                               const Region& region, RngStream& rng) {
  if (wall_length_m <= 0.0)
    throw std::invalid_argument("wall length must be positive");
  const std::vector<Point2D> centers = sample_fhppp(density_per_km2, region, rng);
  BlockageField field;
  field.walls.reserve(centers.size());
  for (const Point2D& c : centers) {
    const double theta = rng.uniform(0.0, kTwoPi);
    field.walls.push_back(make_wall(c, wall_length_m, theta));
  }
  return field;
}

namespace {

// Sign of the cross product (b-a) x (c-a): which side of line a-b is c on.
int orientation(Point2D a, Point2D b, Point2D c) {
  const double v = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

bool on_segment(Point2D a, Point2D b, Point2D c) {
  return std::min(a.x, b.x) <= c.x && c.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= c.y && c.y <= std::max(a.y, b.y);
}

} // namespace

bool segments_intersect(Point2D p1, Point2D p2, Point2D q1, Point2D q2) {
  const int o1 = orientation(p1, p2, q1);
  const int o2 = orientation(p1, p2, q2);
  const int o3 = orientation(q1, q2, p1);
  const int o4 = orientation(q1, q2, p2);

  if (o1 != o2 && o3 != o4) return true;

  // Collinear touching counts as an intersection.
  if (o1 == 0 && on_segment(p1, p2, q1)) return true;
  if (o2 == 0 && on_segment(p1, p2, q2)) return true;
  if (o3 == 0 && on_segment(q1, q2, p1)) return true;
  if (o4 == 0 && on_segment(q1, q2, p2)) return true;
  return false;
}

bool is_los(Point2D a, Point2D b, const BlockageField& field) {
  for (const WallSegment& w : field.walls) {
    if (segments_intersect(a, b, w.a, w.b)) return false;
  }
  return true;
}

} // namespace tbench
