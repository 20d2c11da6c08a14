#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <vector>

#include "hullfilter/geometry.hpp"

namespace hullfilter {

struct HullResult {
  // Canonical ring: starts at the lexicographically smallest vertex and runs
  // counterclockwise. Degenerate inputs give a ring of 0, 1 or 2 points.
  ConvexPolygon polygon;
  // Index into the input of each ring vertex. Among duplicates, the lowest.
  std::vector<std::size_t> vertex_indices;
  std::chrono::nanoseconds elapsed{0};
};

// Andrew's monotone chain. Collinear points on hull edges are not part of
// the ring.
inline HullResult monotone_chain(std::span<const Point2> pts) {
  const auto start = std::chrono::steady_clock::now();

  struct Entry {
    Point2 p;
    std::size_t index;
  };
  std::vector<Entry> sorted(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) sorted[i] = {pts[i], i};
  std::sort(sorted.begin(), sorted.end(), [](const Entry& a, const Entry& b) {
    if (a.p.x != b.p.x) return a.p.x < b.p.x;
    if (a.p.y != b.p.y) return a.p.y < b.p.y;
    return a.index < b.index;
  });
  sorted.erase(std::unique(sorted.begin(), sorted.end(), [](const Entry& a, const Entry& b) { return a.p == b.p; }),
               sorted.end());

  HullResult result;
  const std::size_t n = sorted.size();
  if (n < 3) {
    std::vector<Point2> ring;
    for (const Entry& e : sorted) {
      ring.push_back(e.p);
      result.vertex_indices.push_back(e.index);
    }
    result.polygon = ConvexPolygon(std::move(ring));
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
  }

  // Lower chain left to right, then upper chain right to left. The last
  // point pushed is sorted[0] again and gets dropped.
  std::vector<std::size_t> chain(2 * n);
  std::size_t k = 0;
  auto turn = [&](std::size_t i) {
    return orientation(sorted[chain[k - 2]].p, sorted[chain[k - 1]].p, sorted[i].p);
  };
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && turn(i) <= 0.0) --k;
    chain[k++] = i;
  }
  const std::size_t lower_size = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower_size && turn(i) <= 0.0) --k;
    chain[k++] = i;
  }
  chain.resize(k - 1);

  std::vector<Point2> ring;
  if (chain.size() < 3) {
    // All collinear: the chains collapse onto the two extreme points.
    chain = {0, n - 1};
  }
  ring.reserve(chain.size());
  result.vertex_indices.reserve(chain.size());
  for (std::size_t i : chain) {
    ring.push_back(sorted[i].p);
    result.vertex_indices.push_back(sorted[i].index);
  }
  result.polygon = ConvexPolygon(std::move(ring));
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

inline HullResult monotone_chain(const PointSet& s) { return monotone_chain(s.points()); }

}  // namespace hullfilter
