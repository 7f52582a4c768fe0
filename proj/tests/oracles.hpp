#pragma once

// Brute-force test oracles. These deliberately re-derive the geometry from
// scratch so they stay independent of the library code they check.

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "graspkit/geom.hpp"
#include "graspkit/parallel.hpp"

namespace oracles {

inline bool point_in_rect(double px, double py, double rx, double ry,
                          double rw, double rh, double rtheta_deg) {
  const double t = rtheta_deg * M_PI / 180.0;
  const double c = std::cos(t), s = std::sin(t);
  const double dx = px - rx, dy = py - ry;
  const double u = c * dx + s * dy;
  const double v = -s * dx + c * dy;
  return std::abs(u) <= 0.5 * rw && std::abs(v) <= 0.5 * rh;
}

struct Bounds {
  double x0, y0, x1, y1;
};

inline Bounds joint_bounds(const graspkit::geom::RotatedRect& a,
                           const graspkit::geom::RotatedRect& b) {
  Bounds bb{1e300, 1e300, -1e300, -1e300};
  for (const auto* r : {&a, &b}) {
    const double t = r->theta * M_PI / 180.0;
    const double c = std::cos(t), s = std::sin(t);
    for (int sx : {-1, 1}) {
      for (int sy : {-1, 1}) {
        const double lx = sx * 0.5 * r->w, ly = sy * 0.5 * r->h;
        const double x = r->x + c * lx - s * ly;
        const double y = r->y + s * lx + c * ly;
        bb.x0 = std::min(bb.x0, x);
        bb.y0 = std::min(bb.y0, y);
        bb.x1 = std::max(bb.x1, x);
        bb.y1 = std::max(bb.y1, y);
      }
    }
  }
  return bb;
}

/// Intersection area by sampling grid_n x grid_n cell centers over the joint
/// bounding box and counting points inside both rectangles.
inline double raster_intersection(const graspkit::geom::RotatedRect& a,
                                  const graspkit::geom::RotatedRect& b,
                                  int grid_n, int workers = 1) {
  const Bounds bb = joint_bounds(a, b);
  const double sx = (bb.x1 - bb.x0) / grid_n;
  const double sy = (bb.y1 - bb.y0) / grid_n;
  const double ta = a.theta * M_PI / 180.0, tb = b.theta * M_PI / 180.0;
  const double ca = std::cos(ta), sa = std::sin(ta);
  const double cb = std::cos(tb), sb = std::sin(tb);
  const double hwa = 0.5 * a.w, hha = 0.5 * a.h;
  const double hwb = 0.5 * b.w, hhb = 0.5 * b.h;

  std::vector<std::int64_t> row_hits(static_cast<std::size_t>(grid_n), 0);
  graspkit::util::parallel_for(
      static_cast<std::size_t>(grid_n), workers, [&](std::size_t row) {
        const double y = bb.y0 + (static_cast<double>(row) + 0.5) * sy;
        std::int64_t hits = 0;
        for (int col = 0; col < grid_n; ++col) {
          const double x = bb.x0 + (col + 0.5) * sx;
          const double dxa = x - a.x, dya = y - a.y;
          if (std::abs(ca * dxa + sa * dya) > hwa) continue;
          if (std::abs(-sa * dxa + ca * dya) > hha) continue;
          const double dxb = x - b.x, dyb = y - b.y;
          if (std::abs(cb * dxb + sb * dyb) > hwb) continue;
          if (std::abs(-sb * dxb + cb * dyb) > hhb) continue;
          ++hits;
        }
        row_hits[row] = hits;
      });
  std::int64_t total = 0;
  for (const auto h : row_hits) total += h;
  return static_cast<double>(total) * sx * sy;
}

inline double raster_jaccard(const graspkit::geom::RotatedRect& a,
                             const graspkit::geom::RotatedRect& b,
                             int grid_n, int workers = 1) {
  const double inter = raster_intersection(a, b, grid_n, workers);
  const double uni = a.w * a.h + b.w * b.h - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

}  // namespace oracles
