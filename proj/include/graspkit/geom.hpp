#pragma once

#include <cmath>
#include <vector>

namespace graspkit::geom {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 v) { return std::hypot(v.x, v.y); }

constexpr double deg2rad(double deg) { return deg * M_PI / 180.0; }
constexpr double rad2deg(double rad) { return rad * 180.0 / M_PI; }

/// Folds an angle into (-90, 90]. Grasp rectangles are invariant under 180
/// degree rotation, so this is the canonical representative.
inline double normalize_angle_deg(double deg) {
  double r = std::fmod(deg, 180.0);
  if (r > 90.0) {
    r -= 180.0;
  } else if (r <= -90.0) {
    r += 180.0;
  }
  return r;
}

/// Oriented grasp rectangle: center (x, y), size (w, h), counterclockwise
/// rotation theta from horizontal in degrees, normalized to (-90, 90].
struct RotatedRect {
  double x;
  double y;
  double w;
  double h;
  double theta;

  RotatedRect(double x_, double y_, double w_, double h_, double theta_deg);
};

/// Convex polygon, vertices in counterclockwise order.
struct Polygon {
  std::vector<Vec2> vertices;

  double area() const;
};

/// The 4 corners of r in counterclockwise order; their centroid is the center.
Polygon vertices(const RotatedRect& r);

inline double area(const RotatedRect& r) { return r.w * r.h; }

/// True when p lies inside r, boundary inclusive.
bool contains(const RotatedRect& r, Vec2 p);

/// Area of the convex intersection polygon of a and b (Sutherland-Hodgman
/// clipping of a against b's half-planes). Symmetric; 0 for touching shapes.
double intersect_area(const RotatedRect& a, const RotatedRect& b);

/// Intersection over union in [0, 1].
double jaccard(const RotatedRect& a, const RotatedRect& b);

/// Period-aware angular distance in degrees, in [0, 90].
double angle_diff(double t1_deg, double t2_deg);

}  // namespace graspkit::geom
