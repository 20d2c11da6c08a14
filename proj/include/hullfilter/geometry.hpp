#pragma once

// Planar point types and the predicates everything else is built on.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hullfilter {

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

inline bool is_finite(const Point2& p) { return std::isfinite(p.x) && std::isfinite(p.y); }

// Lexicographic (x, then y) order used for sorting and canonical rings.
inline bool lex_less(const Point2& a, const Point2& b) {
  return a.x < b.x || (a.x == b.x && a.y < b.y);
}

// Immutable, ordered point collection. Every admitted coordinate is finite;
// duplicates are allowed.
class PointSet {
 public:
  PointSet() = default;

  explicit PointSet(std::vector<Point2> points) : points_(std::move(points)) {
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (!is_finite(points_[i])) {
        throw std::invalid_argument("non-finite coordinate at point index " + std::to_string(i));
      }
    }
  }

  PointSet(std::initializer_list<Point2> points) : PointSet(std::vector<Point2>(points)) {}

  std::size_t size() const noexcept { return points_.size(); }
  bool empty() const noexcept { return points_.empty(); }
  const Point2& operator[](std::size_t i) const noexcept { return points_[i]; }
  std::span<const Point2> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

  friend bool operator==(const PointSet&, const PointSet&) = default;

 private:
  std::vector<Point2> points_;
};

// Counterclockwise vertex ring. Rings of length 0, 1 or 2 stand for the
// degenerate results (nothing, a point, a segment).
class ConvexPolygon {
 public:
  ConvexPolygon() = default;
  explicit ConvexPolygon(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {}

  std::span<const Point2> vertices() const noexcept { return vertices_; }
  std::size_t size() const noexcept { return vertices_.size(); }
  bool degenerate() const noexcept { return vertices_.size() < 3; }

  friend bool operator==(const ConvexPolygon&, const ConvexPolygon&) = default;

 private:
  std::vector<Point2> vertices_;
};

// z-component of (b - a) x (c - a). Positive for a counterclockwise turn,
// zero when collinear.
inline double orientation(const Point2& a, const Point2& b, const Point2& c) noexcept {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

// True when every consecutive triple of the ring turns strictly left.
inline bool is_strictly_convex_ccw(std::span<const Point2> ring) {
  const std::size_t n = ring.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!(orientation(ring[i], ring[(i + 1) % n], ring[(i + 2) % n]) > 0.0)) return false;
  }
  return true;
}

struct UnitDirection {
  double cos = 1.0;
  double sin = 0.0;
};

// cos/sin of an angle given in degrees. The angle is folded into [0, 45] so
// that multiples of 30 and 45 degrees come out symmetric (and exact where
// the value is representable), e.g. cos(45) == sin(45) and sin(90) == 1.
inline UnitDirection unit_direction(double degrees) {
  double r = std::fmod(degrees, 360.0);
  if (r < 0.0) r += 360.0;
  const int quadrant = static_cast<int>(r / 90.0) % 4;
  const double rem = r - 90.0 * quadrant;  // [0, 90)

  auto first_octant = [](double d) -> UnitDirection {
    if (d == 0.0) return {1.0, 0.0};
    if (d == 30.0) return {std::numbers::sqrt3 / 2.0, 0.5};
    if (d == 45.0) return {std::sqrt(0.5), std::sqrt(0.5)};
    const double rad = d * std::numbers::pi / 180.0;
    return {std::cos(rad), std::sin(rad)};
  };

  UnitDirection d;
  if (rem <= 45.0) {
    d = first_octant(rem);
  } else {
    const UnitDirection c = first_octant(90.0 - rem);
    d = {c.sin, c.cos};
  }
  switch (quadrant) {
    // 0.0 - v rather than -v keeps exact zeros positive.
    case 1: return {0.0 - d.sin, d.cos};
    case 2: return {0.0 - d.cos, 0.0 - d.sin};
    case 3: return {d.sin, 0.0 - d.cos};
    default: return d;
  }
}

// Rotates every point counterclockwise about the origin by `degrees`.
inline PointSet rotate_set(const PointSet& s, double degrees) {
  if (!std::isfinite(degrees)) throw std::invalid_argument("rotation angle must be finite");
  if (degrees == 0.0) return s;
  const UnitDirection d = unit_direction(degrees);
  std::vector<Point2> out;
  out.reserve(s.size());
  for (const Point2& p : s) {
    out.push_back({p.x * d.cos - p.y * d.sin, p.x * d.sin + p.y * d.cos});
  }
  return PointSet(std::move(out));
}

enum class Containment { StrictlyInside, BoundaryOrOutside };

// Points on an edge or vertex are never reported as inside, so callers may
// discard StrictlyInside points without touching the hull boundary.
inline Containment point_in_convex_polygon(const Point2& p, const ConvexPolygon& poly) noexcept {
  if (poly.degenerate()) return Containment::BoundaryOrOutside;
  const auto v = poly.vertices();
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = v[i];
    const Point2& b = v[i + 1 == n ? 0 : i + 1];
    if (!(orientation(a, b, p) > 0.0)) return Containment::BoundaryOrOutside;
  }
  return Containment::StrictlyInside;
}

}  // namespace hullfilter
