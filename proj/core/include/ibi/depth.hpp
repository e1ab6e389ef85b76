#pragma once

// Planar halfspace (Tukey) depth and convex hulls.

#include <span>
#include <vector>

#include <Eigen/Dense>

namespace ibi {

using Point2 = Eigen::Vector2d;

/// Minimum, over closed halfplanes whose boundary passes through `point`,
/// of the fraction of `cloud` inside the halfplane. Exact; O(n log n) by an
/// angular sweep. Throws InsufficientData on an empty cloud.
double tukey_depth(const Point2& point, std::span<const Point2> cloud);

/// Same as tukey_depth, returned as a count of cloud points.
std::size_t tukey_depth_count(const Point2& point,
                              std::span<const Point2> cloud);

/// Depth of every cloud point with respect to the whole cloud.
std::vector<std::size_t> tukey_depth_counts(std::span<const Point2> cloud,
                                            unsigned threads = 1);

/// Counter-clockwise convex hull without collinear points.
std::vector<Point2> convex_hull(std::span<const Point2> points);

/// Shoelace area of a simple polygon.
double polygon_area(std::span<const Point2> polygon);

/// True when `point` lies inside or on a counter-clockwise convex polygon.
bool hull_contains(std::span<const Point2> hull, const Point2& point,
                   double tolerance = 1e-12);

}  // namespace ibi
