// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <vector>

#include "tbench/rng.hpp"

namespace tbench {

// Square deployment region. With wrap_around the region is a torus and
// distances use the minimum-image convention.
struct Region {
  double side_m = 1000.0;
  bool wrap_around = false;

  double area_km2() const { return (side_m / 1000.0) * (side_m / 1000.0); }
};

struct Point2D {
  double x = 0.0;
  double y = 0.0;
};

// A wall: straight segment given by center, length and orientation.
struct WallSegment {
  Point2D center;
  double length_m = 0.0;
  double theta_rad = 0.0;
  Point2D a; // endpoints, precomputed at construction
  Point2D b;
};

struct BlockageField {
  std::vector<WallSegment> walls;
};

WallSegment make_wall(Point2D center, double length_m, double theta_rad);

// Finite homogeneous Poisson point process: count ~ Poisson(density * area),
// points i.i.d. uniform over the region. Density is per square kilometer.
std::vector<Point2D> sample_fhppp(double density_per_km2, const Region& region,
                                  RngStream& rng);

// Torus metric (minimum over the 9 translated copies) when the region wraps,
// plain Euclidean distance otherwise.
double wrap_distance(Point2D a, Point2D b, const Region& region);

// Wall centers form an FHPPP; orientations are i.i.d. uniform on [0, 2*pi).
BlockageField sample_blockages(double density_per_km2, double wall_length_m,
                               const Region& region, RngStream& rng);

// Orientation-predicate segment intersection; collinear touching counts as
// an intersection.
bool segments_intersect(Point2D p1, Point2D p2, Point2D q1, Point2D q2);

// True iff the open link a-b crosses no wall of the field.
bool is_los(Point2D a, Point2D b, const BlockageField& field);

} // namespace tbench
