#pragma once

// Benchmark harness: hull with and without the prefilter on each dataset,
// median timings, and CSV / JSON reports. The two pipelines must agree on
// the hull before any timing is reported.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hullfilter/datasets.hpp"
#include "hullfilter/extreme_filter.hpp"
#include "hullfilter/monotone_chain.hpp"
#include "hullfilter/parallel.hpp"

namespace hullfilter {

struct BenchRecord {
  std::string dataset;
  std::size_t n = 0;
  double t_hull_direct_ms = 0.0;
  double t_filter_ms = 0.0;
  double t_hull_filtered_ms = 0.0;
  double remaining_pct = 100.0;
  double speedup = 0.0;
  bool hulls_match = true;
  std::size_t survivors = 0;
  std::size_t extreme_count = 0;
  std::size_t hull_vertices = 0;
};

struct BenchOptions {
  std::size_t repetitions = 3;
  std::vector<double> angles = default_angles();
  std::size_t threads = Executor::default_workers();
  bool warmup = true;
};

// Thrown when the filtered and unfiltered hulls differ.
class HullMismatch : public std::runtime_error {
 public:
  HullMismatch(std::string dataset, ConvexPolygon direct, ConvexPolygon filtered)
      : std::runtime_error("hull mismatch on " + dataset),
        dataset_(std::move(dataset)),
        direct_(std::move(direct)),
        filtered_(std::move(filtered)) {}

  const std::string& dataset() const noexcept { return dataset_; }
  const ConvexPolygon& direct() const noexcept { return direct_; }
  const ConvexPolygon& filtered() const noexcept { return filtered_; }

 private:
  std::string dataset_;
  ConvexPolygon direct_;
  ConvexPolygon filtered_;
};

template <class T>
T median(std::vector<T> v) {
  if (v.empty()) throw std::invalid_argument("median of empty sample");
  std::sort(v.begin(), v.end());
  const std::size_t mid = v.size() / 2;
  if (v.size() % 2 == 1) return v[mid];
  return (v[mid - 1] + v[mid]) / 2;
}

namespace detail {

inline double to_ms(std::chrono::nanoseconds d) { return std::chrono::duration<double, std::milli>(d).count(); }

struct BenchSample {
  double direct_ms;
  double filter_ms;
  double filtered_ms;
  FilterReport report;
  HullResult hull;
};

inline BenchSample run_once(const std::string& name, const PointSet& points, const BenchOptions& opt,
                            const Executor& exec) {
  HullResult direct = monotone_chain(points);
  FilterOutcome filtered = prefilter(points, opt.angles, exec);
  HullResult after = monotone_chain(filtered.survivors);
  if (!(direct.polygon == after.polygon)) throw HullMismatch(name, direct.polygon, after.polygon);
  return {to_ms(direct.elapsed), to_ms(filtered.report.total()), to_ms(after.elapsed), std::move(filtered.report),
          std::move(direct)};
}

}  // namespace detail

inline BenchRecord bench_points(const std::string& name, const PointSet& points, const BenchOptions& opt) {
  if (opt.repetitions < 1) throw std::invalid_argument("repetitions must be at least 1");
  const Executor exec(opt.threads);
  if (opt.warmup) detail::run_once(name, points, opt, exec);

  std::vector<double> direct, filter, filtered;
  detail::BenchSample last{};
  for (std::size_t r = 0; r < opt.repetitions; ++r) {
    last = detail::run_once(name, points, opt, exec);
    direct.push_back(last.direct_ms);
    filter.push_back(last.filter_ms);
    filtered.push_back(last.filtered_ms);
  }

  BenchRecord rec;
  rec.dataset = name;
  rec.n = points.size();
  rec.t_hull_direct_ms = median(direct);
  rec.t_filter_ms = median(filter);
  rec.t_hull_filtered_ms = median(filtered);
  rec.remaining_pct = 100.0 * last.report.remaining_fraction;
  const double pipeline = rec.t_filter_ms + rec.t_hull_filtered_ms;
  rec.speedup = pipeline > 0.0 ? rec.t_hull_direct_ms / pipeline : 0.0;
  rec.hulls_match = true;
  rec.survivors = last.report.survivor_count;
  rec.extreme_count = last.report.extreme_count;
  rec.hull_vertices = last.hull.polygon.size();
  return rec;
}

inline std::vector<BenchRecord> run_bench(std::span<const DatasetSpec> specs, const BenchOptions& opt) {
  std::vector<BenchRecord> out;
  out.reserve(specs.size());
  for (const DatasetSpec& spec : specs) out.push_back(bench_points(spec.summary(), load_dataset(spec), opt));
  return out;
}

inline constexpr std::string_view kCsvHeader =
    "dataset,n,t_hull_direct_ms,t_filter_ms,t_hull_filtered_ms,remaining_pct,speedup";

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + '"';
}

inline std::string fixed(double v, int digits) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

}  // namespace detail

inline void write_csv(std::ostream& out, std::span<const BenchRecord> records) {
  out << kCsvHeader << '\n';
  for (const BenchRecord& r : records) {
    out << detail::csv_field(r.dataset) << ',' << r.n << ',' << detail::fixed(r.t_hull_direct_ms, 3) << ','
        << detail::fixed(r.t_filter_ms, 3) << ',' << detail::fixed(r.t_hull_filtered_ms, 3) << ','
        << detail::fixed(r.remaining_pct, 4) << ',' << detail::fixed(r.speedup, 3) << '\n';
  }
}

inline nlohmann::json to_json(const BenchRecord& r) {
  return {{"dataset", r.dataset},
          {"n", r.n},
          {"t_hull_direct_ms", r.t_hull_direct_ms},
          {"t_filter_ms", r.t_filter_ms},
          {"t_hull_filtered_ms", r.t_hull_filtered_ms},
          {"remaining_pct", r.remaining_pct},
          {"speedup", r.speedup},
          {"hulls_match", r.hulls_match},
          {"survivors", r.survivors},
          {"extreme_count", r.extreme_count},
          {"hull_vertices", r.hull_vertices}};
}

inline void write_json(std::ostream& out, std::span<const BenchRecord> records) {
  nlohmann::json arr = nlohmann::json::array();
  for (const BenchRecord& r : records) arr.push_back(to_json(r));
  out << arr.dump(2) << '\n';
}

}  // namespace hullfilter
