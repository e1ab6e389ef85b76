#include "ibi/depth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ibi/errors.hpp"
#include "ibi/parallel.hpp"

namespace ibi {
namespace {

double cross(const Point2& a, const Point2& b) {
  return a.x() * b.y() - a.y() * b.x();
}

// True when direction b lies in the half-open arc [angle(a), angle(a) + pi).
bool in_half_open_arc(const Point2& a, const Point2& b) {
  const double c = cross(a, b);
  if (c > 0.0) return true;
  if (c < 0.0) return false;
  return a.dot(b) > 0.0;
}

}  // namespace

std::size_t tukey_depth_count(const Point2& point,
                              std::span<const Point2> cloud) {
  if (cloud.empty()) throw InsufficientData("Tukey depth of an empty cloud");

  std::vector<Point2> dirs;
  dirs.reserve(cloud.size());
  std::size_t coincident = 0;
  for (const auto& q : cloud) {
    const Point2 d = q - point;
    if (d.x() == 0.0 && d.y() == 0.0) {
      ++coincident;
    } else {
      dirs.push_back(d);
    }
  }
  const std::size_t m = dirs.size();
  if (m == 0) return coincident;

  std::vector<double> angle(m);
  for (std::size_t i = 0; i < m; ++i) {
    angle[i] = std::atan2(dirs[i].y(), dirs[i].x());
  }
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return angle[a] < angle[b] || (angle[a] == angle[b] && a < b);
  });

  // Largest number of directions inside an open half-plane; the closed
  // half-plane on the other side holds everything else.
  std::size_t best = 0;
  std::size_t j = 0;
  for (std::size_t i = 0; i < m; ++i) {
    j = std::max(j, i + 1);
    const Point2& start = dirs[order[i]];
    while (j < i + m && in_half_open_arc(start, dirs[order[j % m]])) ++j;
    best = std::max(best, j - i);
  }
  return coincident + (m - best);
}

double tukey_depth(const Point2& point, std::span<const Point2> cloud) {
  return static_cast<double>(tukey_depth_count(point, cloud)) /
         static_cast<double>(cloud.size());
}

std::vector<std::size_t> tukey_depth_counts(std::span<const Point2> cloud,
                                            unsigned threads) {
  std::vector<std::size_t> out(cloud.size());
  parallel_for(cloud.size(), threads,
               [&](std::size_t i) { out[i] = tukey_depth_count(cloud[i], cloud); });
  return out;
}

std::vector<Point2> convex_hull(std::span<const Point2> points) {
  std::vector<Point2> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), [](const Point2& a, const Point2& b) {
    return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
  });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  std::vector<Point2> hull(2 * pts.size());
  std::size_t k = 0;
  auto turn = [](const Point2& o, const Point2& a, const Point2& b) {
    return cross(a - o, b - o);
  };
  for (const auto& p : pts) {
    while (k >= 2 && turn(hull[k - 2], hull[k - 1], p) <= 0.0) --k;
    hull[k++] = p;
  }
  const std::size_t lower = k + 1;
  for (auto it = pts.rbegin() + 1; it != pts.rend(); ++it) {
    while (k >= lower && turn(hull[k - 2], hull[k - 1], *it) <= 0.0) --k;
    hull[k++] = *it;
  }
  hull.resize(k - 1);
  return hull;
}

double polygon_area(std::span<const Point2> polygon) {
  if (polygon.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < polygon.size(); ++i) {
    twice += cross(polygon[i], polygon[(i + 1) % polygon.size()]);
  }
  return 0.5 * std::abs(twice);
}

bool hull_contains(std::span<const Point2> hull, const Point2& point,
                   double tolerance) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return (hull[0] - point).norm() <= tolerance;
  if (hull.size() == 2) {
    const Point2 ab = hull[1] - hull[0];
    const Point2 ap = point - hull[0];
    const double t = ap.dot(ab) / ab.squaredNorm();
    return std::abs(cross(ab, ap)) <= tolerance * ab.norm() && t >= -tolerance &&
           t <= 1.0 + tolerance;
  }
  for (std::size_t i = 0; i < hull.size(); ++i) {
    const Point2& a = hull[i];
    const Point2& b = hull[(i + 1) % hull.size()];
    if (cross(b - a, point - a) < -tolerance * (b - a).norm()) return false;
  }
  return true;
}

}  // namespace ibi
