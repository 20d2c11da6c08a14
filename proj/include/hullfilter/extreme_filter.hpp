#pragma once

// Interior-point prefilter for planar convex hulls.
//
// For each angle, the four points with minimal/maximal coordinate in the
// frame rotated by that angle are extreme points of the set. Up to sixteen
// of them (four angles) span a convex polygon whose strict interior holds no
// hull vertex, so every point strictly inside it can be dropped before the
// real hull computation.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstddef>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "hullfilter/geometry.hpp"
#include "hullfilter/monotone_chain.hpp"
#include "hullfilter/parallel.hpp"

namespace hullfilter {

inline constexpr std::size_t kMaxAngles = 4;

inline const std::vector<double>& default_angles() {
  static const std::vector<double> angles{0.0, 30.0, 45.0, 60.0};
  return angles;
}

// Indices into the source set of the points extremizing the rotated-frame
// coordinates u = x cos t + y sin t and v = -x sin t + y cos t.
struct AngleExtremes {
  std::size_t min_x = 0;
  std::size_t max_x = 0;
  std::size_t min_y = 0;
  std::size_t max_y = 0;

  std::array<std::size_t, 4> as_array() const { return {min_x, max_x, min_y, max_y}; }
  friend bool operator==(const AngleExtremes&, const AngleExtremes&) = default;
};

struct ExtremeSet {
  std::vector<Point2> candidates;  // distinct, first-seen order
  std::vector<double> angles_used;
  std::vector<AngleExtremes> per_angle_indices;
};

struct FilterReport {
  std::size_t input_size = 0;
  std::size_t extreme_count = 0;
  std::size_t survivor_count = 0;
  double remaining_fraction = 1.0;
  bool skipped = true;
  ConvexPolygon polygon;
  std::chrono::nanoseconds t_extremes{0};
  std::chrono::nanoseconds t_polygon{0};
  std::chrono::nanoseconds t_discard{0};

  std::chrono::nanoseconds total() const { return t_extremes + t_polygon + t_discard; }
};

struct FilterOutcome {
  PointSet survivors;
  FilterReport report;
};

namespace detail {

struct ArgExtreme {
  double value;
  std::size_t index;
};

// Both combiners are associative and commutative: the lower index wins ties.
inline ArgExtreme take_min(ArgExtreme a, ArgExtreme b) {
  if (b.value < a.value || (b.value == a.value && b.index < a.index)) return b;
  return a;
}
inline ArgExtreme take_max(ArgExtreme a, ArgExtreme b) {
  if (b.value > a.value || (b.value == a.value && b.index < a.index)) return b;
  return a;
}

struct FrameAccumulator {
  ArgExtreme min_u{std::numeric_limits<double>::infinity(), std::numeric_limits<std::size_t>::max()};
  ArgExtreme max_u{-std::numeric_limits<double>::infinity(), std::numeric_limits<std::size_t>::max()};
  ArgExtreme min_v{std::numeric_limits<double>::infinity(), std::numeric_limits<std::size_t>::max()};
  ArgExtreme max_v{-std::numeric_limits<double>::infinity(), std::numeric_limits<std::size_t>::max()};

  void add(double u, double v, std::size_t i) {
    // Ascending scan: strict comparison keeps the first index on ties.
    if (u < min_u.value) min_u = {u, i};
    if (u > max_u.value) max_u = {u, i};
    if (v < min_v.value) min_v = {v, i};
    if (v > max_v.value) max_v = {v, i};
  }

  static FrameAccumulator combine(const FrameAccumulator& a, const FrameAccumulator& b) {
    return {take_min(a.min_u, b.min_u), take_max(a.max_u, b.max_u), take_min(a.min_v, b.min_v),
            take_max(a.max_v, b.max_v)};
  }
};

// One pass over the points computing the extremes for every angle at once.
inline std::vector<AngleExtremes> reduce_extremes(std::span<const Point2> pts, std::span<const double> angles,
                                                  const Executor& exec) {
  if (pts.empty()) throw std::invalid_argument("empty input");
  std::vector<UnitDirection> dirs;
  dirs.reserve(angles.size());
  for (double a : angles) {
    if (!std::isfinite(a)) throw std::invalid_argument("rotation angle must be finite");
    dirs.push_back(unit_direction(a));
  }

  using Partial = std::vector<FrameAccumulator>;
  Partial reduced = exec.map_reduce(
      pts.size(), Partial(dirs.size()),
      [&](std::size_t begin, std::size_t end) {
        Partial acc(dirs.size());
        for (std::size_t i = begin; i < end; ++i) {
          const Point2& p = pts[i];
          for (std::size_t k = 0; k < dirs.size(); ++k) {
            const UnitDirection& d = dirs[k];
            acc[k].add(p.x * d.cos + p.y * d.sin, -p.x * d.sin + p.y * d.cos, i);
          }
        }
        return acc;
      },
      [](Partial a, Partial b) {
        for (std::size_t k = 0; k < a.size(); ++k) a[k] = FrameAccumulator::combine(a[k], b[k]);
        return a;
      });

  std::vector<AngleExtremes> out;
  out.reserve(reduced.size());
  for (const FrameAccumulator& f : reduced) {
    out.push_back({f.min_u.index, f.max_u.index, f.min_v.index, f.max_v.index});
  }
  return out;
}

}  // namespace detail

// Extremes of the set in the frame rotated by `degrees`, computed from
// projections without building a rotated copy.
inline AngleExtremes find_extremes_at_angle(const PointSet& s, double degrees, const Executor& exec = Executor(1)) {
  const double angles[] = {degrees};
  return detail::reduce_extremes(s.points(), angles, exec).front();
}

inline ExtremeSet collect_extremes(const PointSet& s, std::span<const double> angles,
                                   const Executor& exec = Executor(1)) {
  if (angles.empty()) throw std::invalid_argument("angle list must not be empty");
  if (angles.size() > kMaxAngles) throw std::invalid_argument("at most 4 angles are supported");
  ExtremeSet e;
  e.angles_used.assign(angles.begin(), angles.end());
  e.per_angle_indices = detail::reduce_extremes(s.points(), angles, exec);
  for (const AngleExtremes& ax : e.per_angle_indices) {
    for (std::size_t idx : ax.as_array()) {
      const Point2& p = s[idx];
      if (std::find(e.candidates.begin(), e.candidates.end(), p) == e.candidates.end()) e.candidates.push_back(p);
    }
  }
  return e;
}

// Convex hull of the candidates; degenerate (ring size < 3) when they are
// fewer than three distinct points or all collinear.
inline ConvexPolygon build_filter_polygon(const ExtremeSet& e) {
  if (e.candidates.empty()) throw std::invalid_argument("extreme set has no candidates");
  return monotone_chain(std::span<const Point2>(e.candidates)).polygon;
}

// Keeps every point that is not strictly inside `poly`, in input order.
// Chunks are tested independently and concatenated in chunk order.
inline PointSet discard_interior(const PointSet& s, const ConvexPolygon& poly, const Executor& exec = Executor(1)) {
  if (poly.degenerate()) return s;
  const auto pts = s.points();
  std::vector<std::vector<Point2>> kept(exec.chunk_count(pts.size()));
  exec.for_each_chunk(pts.size(), [&](std::size_t c, std::size_t begin, std::size_t end) {
    auto& out = kept[c];
    for (std::size_t i = begin; i < end; ++i) {
      if (point_in_convex_polygon(pts[i], poly) != Containment::StrictlyInside) out.push_back(pts[i]);
    }
  });
  std::size_t total = 0;
  for (const auto& k : kept) total += k.size();
  std::vector<Point2> survivors;
  survivors.reserve(total);
  for (const auto& k : kept) survivors.insert(survivors.end(), k.begin(), k.end());
  return PointSet(std::move(survivors));
}

// Full prefilter: extremes, filter polygon, interior discard. Degenerate
// configurations pass the input through with report.skipped set.
inline FilterOutcome prefilter(const PointSet& s, std::span<const double> angles = default_angles(),
                               const Executor& exec = Executor(1)) {
  using clock = std::chrono::steady_clock;
  FilterOutcome out;
  FilterReport& r = out.report;
  r.input_size = s.size();

  auto pass_through = [&] {
    out.survivors = s;
    r.survivor_count = s.size();
    r.remaining_fraction = 1.0;
    r.skipped = true;
    return out;
  };
  if (s.size() < 3) return pass_through();

  auto t0 = clock::now();
  const ExtremeSet e = collect_extremes(s, angles, exec);
  auto t1 = clock::now();
  r.extreme_count = e.candidates.size();
  r.polygon = build_filter_polygon(e);
  auto t2 = clock::now();
  r.t_extremes = t1 - t0;
  r.t_polygon = t2 - t1;
  if (r.polygon.degenerate()) return pass_through();

  out.survivors = discard_interior(s, r.polygon, exec);
  r.t_discard = clock::now() - t2;
  r.skipped = false;
  r.survivor_count = out.survivors.size();
  r.remaining_fraction = static_cast<double>(r.survivor_count) / static_cast<double>(r.input_size);
  return out;
}

}  // namespace hullfilter
