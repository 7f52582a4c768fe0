#include "graspkit/geom.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <string>

namespace graspkit::geom {
namespace {

// Points closer than this (in pixels) to a clip line count as on the line,
// which keeps sliver polygons out of the clipping output.
constexpr double kClipTol = 1e-9;

// Clipping a quad against a quad yields at most 8 vertices.
struct ClipBuf {
  std::array<Vec2, 16> pts;
  int n = 0;

  void push(Vec2 p) { pts[static_cast<std::size_t>(n++)] = p; }
};

void corners_of(const RotatedRect& r, std::array<Vec2, 4>& out) {
  const double c = std::cos(deg2rad(r.theta));
  const double s = std::sin(deg2rad(r.theta));
  const double hw = 0.5 * r.w;
  const double hh = 0.5 * r.h;
  // ccw starting from (+w/2, +h/2) in the rectangle frame
  const std::array<Vec2, 4> local{{{hw, hh}, {-hw, hh}, {-hw, -hh}, {hw, -hh}}};
  for (std::size_t i = 0; i < 4; ++i) {
    out[i] = {r.x + c * local[i].x - s * local[i].y,
              r.y + s * local[i].x + c * local[i].y};
  }
}

double shoelace(const ClipBuf& poly) {
  double twice = 0.0;
  for (int i = 0; i < poly.n; ++i) {
    const Vec2 p = poly.pts[static_cast<std::size_t>(i)];
    const Vec2 q = poly.pts[static_cast<std::size_t>((i + 1) % poly.n)];
    twice += cross(p, q);
  }
  return 0.5 * std::abs(twice);
}

}  // namespace

RotatedRect::RotatedRect(double x_, double y_, double w_, double h_, double theta_deg)
    : x(x_), y(y_), w(w_), h(h_), theta(normalize_angle_deg(theta_deg)) {
  if (!(w > 0.0) || !(h > 0.0)) {
    throw std::invalid_argument("RotatedRect: width and height must be positive (got w=" +
                                std::to_string(w_) + ", h=" + std::to_string(h_) + ")");
  }
  if (!std::isfinite(x) || !std::isfinite(y) || !std::isfinite(theta)) {
    throw std::invalid_argument("RotatedRect: fields must be finite");
  }
}

double Polygon::area() const {
  if (vertices.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    twice += cross(vertices[i], vertices[(i + 1) % vertices.size()]);
  }
  return 0.5 * std::abs(twice);
}

Polygon vertices(const RotatedRect& r) {
  std::array<Vec2, 4> c;
  corners_of(r, c);
  return Polygon{{c.begin(), c.end()}};
}

bool contains(const RotatedRect& r, Vec2 p) {
  const double c = std::cos(deg2rad(r.theta));
  const double s = std::sin(deg2rad(r.theta));
  const double dx = p.x - r.x;
  const double dy = p.y - r.y;
  const double u = c * dx + s * dy;
  const double v = -s * dx + c * dy;
  return std::abs(u) <= 0.5 * r.w && std::abs(v) <= 0.5 * r.h;
}

double intersect_area(const RotatedRect& a, const RotatedRect& b) {
  std::array<Vec2, 4> subject;
  std::array<Vec2, 4> clip;
  corners_of(a, subject);
  corners_of(b, clip);

  ClipBuf poly;
  for (const Vec2& p : subject) poly.push(p);

  ClipBuf next;
  for (std::size_t e = 0; e < 4; ++e) {
    const Vec2 e1 = clip[e];
    const Vec2 e2 = clip[(e + 1) % 4];
    const Vec2 dir = e2 - e1;
    const double len = norm(dir);

    next.n = 0;
    for (int i = 0; i < poly.n; ++i) {
      const Vec2 prev = poly.pts[static_cast<std::size_t>((i + poly.n - 1) % poly.n)];
      const Vec2 curr = poly.pts[static_cast<std::size_t>(i)];
      // signed distance: positive on the interior (left) side of a ccw edge
      const double d_prev = cross(dir, prev - e1) / len;
      const double d_curr = cross(dir, curr - e1) / len;
      const bool in_prev = d_prev >= -kClipTol;
      const bool in_curr = d_curr >= -kClipTol;
      if (in_curr) {
        if (!in_prev) {
          const double t = d_prev / (d_prev - d_curr);
          next.push(prev + t * (curr - prev));
        }
        next.push(curr);
      } else if (in_prev) {
        const double t = d_prev / (d_prev - d_curr);
        next.push(prev + t * (curr - prev));
      }
    }
    poly = next;
    if (poly.n < 3) return 0.0;
  }
  return shoelace(poly);
}

double jaccard(const RotatedRect& a, const RotatedRect& b) {
  const double inter = intersect_area(a, b);
  const double uni = area(a) + area(b) - inter;
  if (uni <= 0.0) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

double angle_diff(double t1_deg, double t2_deg) {
  const double d = std::fmod(std::abs(t1_deg - t2_deg), 180.0);
  return std::min(d, 180.0 - d);
}

}  // namespace graspkit::geom
