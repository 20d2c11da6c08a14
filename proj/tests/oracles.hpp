#pragma once

// Test-only reference implementations. These deliberately share no code
// with the library beyond the Point2/PointSet types.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "hullfilter/geometry.hpp"

namespace hullfilter::oracle {

inline double cross(const Point2& o, const Point2& a, const Point2& b) {
  const double ax = a.x - o.x, ay = a.y - o.y;
  const double bx = b.x - o.x, by = b.y - o.y;
  return ax * by - ay * bx;
}

inline double dist2(const Point2& a, const Point2& b) {
  const double dx = a.x - b.x, dy = a.y - b.y;
  return dx * dx + dy * dy;
}

// Jarvis march. Returns the CCW ring starting at the lexicographically
// smallest point, collinear boundary points excluded; 0, 1 or 2 points for
// degenerate input.
inline std::vector<Point2> gift_wrap(std::span<const Point2> input) {
  auto less = [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
  std::set<Point2, decltype(less)> unique(input.begin(), input.end(), less);
  std::vector<Point2> pts(unique.begin(), unique.end());
  if (pts.size() < 3) return pts;

  const Point2 start = pts.front();
  std::vector<Point2> ring{start};
  Point2 current = start;
  for (std::size_t guard = 0; guard <= pts.size(); ++guard) {
    Point2 next = pts[0] == current ? pts[1] : pts[0];
    for (const Point2& r : pts) {
      if (r == current) continue;
      const double o = cross(current, next, r);
      if (o < 0.0 || (o == 0.0 && dist2(current, r) > dist2(current, next))) next = r;
    }
    if (next == start) return ring;
    ring.push_back(next);
    current = next;
  }
  throw std::logic_error("gift wrapping did not close");
}

// Half-plane form of the strict containment test: n . (p - a) > 0 for every
// edge normal n pointing into the polygon.
inline bool strictly_inside(const Point2& p, std::span<const Point2> ring) {
  if (ring.size() < 3) return false;
  for (std::size_t i = 0; i < ring.size(); ++i) {
    const Point2& a = ring[i];
    const Point2& b = ring[(i + 1) % ring.size()];
    const double nx = -(b.y - a.y);
    const double ny = b.x - a.x;
    if (!(nx * (p.x - a.x) + ny * (p.y - a.y) > 0.0)) return false;
  }
  return true;
}

inline std::vector<Point2> sequential_filter(std::span<const Point2> pts, std::span<const Point2> ring) {
  std::vector<Point2> out;
  for (const Point2& p : pts) {
    if (!strictly_inside(p, ring)) out.push_back(p);
  }
  return out;
}

// True when p lies on the closed boundary of the ring (segment case too).
inline bool on_boundary(const Point2& p, std::span<const Point2> ring) {
  const std::size_t n = ring.size();
  if (n == 1) return p == ring[0];
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = ring[i];
    const Point2& b = ring[(i + 1) % n];
    if (cross(a, b, p) != 0.0) continue;
    if (std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
        p.y <= std::max(a.y, b.y)) {
      return true;
    }
  }
  return false;
}

enum class Distribution { Square, Disk, Gaussian, Collinear, Duplicates, Grid };

inline const char* name(Distribution d) {
  switch (d) {
    case Distribution::Square: return "square";
    case Distribution::Disk: return "disk";
    case Distribution::Gaussian: return "gaussian";
    case Distribution::Collinear: return "collinear";
    case Distribution::Duplicates: return "duplicates";
    case Distribution::Grid: return "grid";
  }
  return "?";
}

inline constexpr Distribution kAllDistributions[] = {Distribution::Square,    Distribution::Disk,
                                                     Distribution::Gaussian,  Distribution::Collinear,
                                                     Distribution::Duplicates, Distribution::Grid};

// Collinear and grid sets use small integers so every orientation is exact.
inline std::vector<Point2> sample(Distribution d, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<Point2> pts;
  pts.reserve(n);
  switch (d) {
    case Distribution::Square:
      while (pts.size() < n) pts.push_back({unit(rng), unit(rng)});
      break;
    case Distribution::Disk:
      while (pts.size() < n) {
        const Point2 p{unit(rng), unit(rng)};
        if (p.x * p.x + p.y * p.y <= 1.0) pts.push_back(p);
      }
      break;
    case Distribution::Gaussian: {
      std::normal_distribution<double> g(0.0, 3.0);
      while (pts.size() < n) pts.push_back({g(rng), g(rng)});
      break;
    }
    case Distribution::Collinear: {
      std::uniform_int_distribution<int> small(-5, 5);
      std::uniform_int_distribution<int> step(-1000, 1000);
      const double ox = small(rng), oy = small(rng);
      double dx = small(rng), dy = small(rng);
      if (dx == 0.0 && dy == 0.0) dx = 1.0;
      while (pts.size() < n) {
        const double k = step(rng);
        pts.push_back({ox + k * dx, oy + k * dy});
      }
      break;
    }
    case Distribution::Duplicates: {
      const Point2 p{unit(rng), unit(rng)};
      pts.assign(n, p);
      break;
    }
    case Distribution::Grid: {
      std::uniform_int_distribution<int> coord(0, 20);
      while (pts.size() < n) pts.push_back({static_cast<double>(coord(rng)), static_cast<double>(coord(rng))});
      break;
    }
  }
  return pts;
}

}  // namespace hullfilter::oracle
