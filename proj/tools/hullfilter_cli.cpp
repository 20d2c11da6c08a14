// hullfilter: generate point sets, compute hulls with or without the
// interior-point prefilter, and benchmark the two pipelines.
//
// Exit codes: 0 success, 1 usage error, 2 I/O or parse error,
// 3 filtered and unfiltered hulls disagree.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <system_error>
#include <vector>

#include "CLI11.hpp"
#include "hullfilter/bench.hpp"
#include "hullfilter/datasets.hpp"
#include "hullfilter/extreme_filter.hpp"
#include "hullfilter/monotone_chain.hpp"

namespace {

using namespace hullfilter;

enum ExitCode : int { kOk = 0, kUsage = 1, kIo = 2, kMismatch = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "-" or empty means stdout.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::system_error(errno, std::generic_category(), "cannot write " + path);
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string ring_header(const ConvexPolygon& poly) { return "hull vertices=" + std::to_string(poly.size()); }

void dump_ring(std::ostream& err, const char* label, const ConvexPolygon& poly) {
  err << label << ":\n";
  write_xy(err, poly.vertices(), ring_header(poly));
}

void check_angles(const std::vector<double>& angles) {
  if (angles.empty() || angles.size() > kMaxAngles) throw UsageError("--angles takes between 1 and 4 values");
}

PointSet load_input(const std::string& path, const std::string& format) {
  std::string fmt = format;
  if (fmt == "auto") {
    const auto ext = std::filesystem::path(path).extension().string();
    fmt = (ext == ".obj" || ext == ".OBJ") ? "obj" : "xy";
  }
  if (fmt == "obj") {
    std::vector<std::string> warnings;
    PointSet s = load_obj_projected(path, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    return s;
  }
  return load_xy(path);
}

void print_report(std::ostream& err, const FilterReport& r) {
  err << "filter: input=" << r.input_size << " extremes=" << r.extreme_count << " survivors=" << r.survivor_count
      << " remaining_pct=" << 100.0 * r.remaining_fraction << " skipped=" << (r.skipped ? "yes" : "no")
      << " t_extremes_ms=" << detail::to_ms(r.t_extremes) << " t_polygon_ms=" << detail::to_ms(r.t_polygon)
      << " t_discard_ms=" << detail::to_ms(r.t_discard) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convex hulls with an extreme-point interior prefilter"};
  app.require_subcommand(1);

  // generate
  std::string gen_family = "uniform-square";
  std::size_t gen_size = 1000;
  std::uint64_t gen_seed = 1;
  std::string gen_out = "-";
  auto* gen = app.add_subcommand("generate", "Write a synthetic point set as XY text");
  gen->add_option("--family", gen_family, "uniform-square | uniform-disk")->capture_default_str();
  gen->add_option("--size", gen_size, "Number of points")->capture_default_str();
  gen->add_option("--seed", gen_seed, "64-bit generator seed")->capture_default_str();
  gen->add_option("-o,--out", gen_out, "Output path, - for stdout")->capture_default_str();

  // hull
  std::string hull_input;
  std::string hull_format = "auto";
  bool hull_filter = false;
  std::vector<double> hull_angles = default_angles();
  std::size_t hull_threads = Executor::default_workers();
  std::string hull_out = "-";
  auto* hull = app.add_subcommand("hull", "Print the canonical convex hull ring of a point file");
  hull->add_option("input", hull_input, "XY text or OBJ file")->required();
  hull->add_option("--input-format", hull_format, "auto | xy | obj")
      ->check(CLI::IsMember({"auto", "xy", "obj"}))
      ->capture_default_str();
  hull->add_flag("--filter", hull_filter, "Run the interior prefilter before the hull");
  hull->add_option("--angles", hull_angles, "Rotation angles in degrees")->delimiter(',')->capture_default_str();
  hull->add_option("--threads", hull_threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  hull->add_option("-o,--out", hull_out, "Output path, - for stdout")->capture_default_str();

  // bench
  std::vector<std::string> bench_families{"uniform-square"};
  std::vector<std::size_t> bench_sizes{1000000};
  std::vector<std::string> bench_inputs;
  std::uint64_t bench_seed = 1;
  BenchOptions bench_opt;
  std::string bench_format = "csv";
  std::string bench_out = "-";
  auto* bench = app.add_subcommand("bench", "Time hull computation with and without the prefilter");
  bench->add_option("--family", bench_families, "Generator families")->delimiter(',')->capture_default_str();
  bench->add_option("--size", bench_sizes, "Point counts")->delimiter(',')->capture_default_str();
  bench->add_option("--seed", bench_seed, "64-bit generator seed")->capture_default_str();
  bench->add_option("--input", bench_inputs, "Point files (.obj or XY text), benchmarked after generated sets");
  bench->add_option("--reps", bench_opt.repetitions, "Timed repetitions (median reported)")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--angles", bench_opt.angles, "Rotation angles in degrees")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--threads", bench_opt.threads, "Worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  bench->add_option("--format", bench_format, "csv | json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  bench->add_option("-o,--out", bench_out, "Output path, - for stdout")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (gen->parsed()) {
      DatasetSpec spec;
      try {
        spec.family = parse_family(gen_family);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      if (!spec.is_generated()) throw UsageError("generate needs a generator family");
      spec.size = gen_size;
      spec.seed = gen_seed;
      const PointSet s = load_dataset(spec);
      Output out(gen_out);
      write_xy(out.stream(), s.points(), spec.summary());
      return kOk;
    }

    if (hull->parsed()) {
      check_angles(hull_angles);
      const PointSet input = load_input(hull_input, hull_format);
      HullResult result;
      if (hull_filter) {
        const FilterOutcome f = prefilter(input, hull_angles, Executor(hull_threads));
        print_report(std::cerr, f.report);
        result = monotone_chain(f.survivors);
      } else {
        result = monotone_chain(input);
      }
      Output out(hull_out);
      write_xy(out.stream(), result.polygon.vertices(), ring_header(result.polygon));
      return kOk;
    }

    if (bench->parsed()) {
      check_angles(bench_opt.angles);
      std::vector<DatasetSpec> specs;
      for (const auto& fam : bench_families) {
        DatasetSpec spec;
        try {
          spec.family = parse_family(fam);
        } catch (const std::invalid_argument& e) {
          throw UsageError(e.what());
        }
        if (!spec.is_generated()) throw UsageError("--family takes generator families; use --input for files");
        for (std::size_t n : bench_sizes) {
          spec.size = n;
          spec.seed = bench_seed;
          specs.push_back(spec);
        }
      }
      for (const auto& path : bench_inputs) {
        DatasetSpec spec;
        const auto ext = std::filesystem::path(path).extension().string();
        spec.family = (ext == ".obj" || ext == ".OBJ") ? Family::FileObjProjected : Family::FileXY;
        spec.path = path;
        specs.push_back(spec);
      }
      const auto records = run_bench(specs, bench_opt);
      Output out(bench_out);
      if (bench_format == "json") {
        write_json(out.stream(), records);
      } else {
        write_csv(out.stream(), records);
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const HullMismatch& e) {
    std::cerr << "error: " << e.what() << '\n';
    dump_ring(std::cerr, "direct", e.direct());
    dump_ring(std::cerr, "filtered", e.filtered());
    return kMismatch;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  }
  return kUsage;
}
