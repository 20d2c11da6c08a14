#pragma once

// Synthetic point sets and the two text formats the tools read.
//
// Generators draw from std::mt19937_64 seeded directly with the 64-bit seed.
// Its output sequence is fixed by the C++ standard; each 64-bit draw is
// turned into a double in [0, 1) from its top 53 bits, and then mapped to
// [-1, 1) as 2u - 1. No std::*_distribution is involved, so a (family,
// size, seed) triple yields the same points on every conforming platform.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "hullfilter/geometry.hpp"

namespace hullfilter {

enum class Family { UniformSquare, UniformDisk, FileXY, FileObjProjected };

inline std::string_view family_name(Family f) {
  switch (f) {
    case Family::UniformSquare: return "uniform-square";
    case Family::UniformDisk: return "uniform-disk";
    case Family::FileXY: return "file-xy";
    case Family::FileObjProjected: return "file-obj-projected";
  }
  return "unknown";
}

inline Family parse_family(std::string_view name) {
  for (Family f : {Family::UniformSquare, Family::UniformDisk, Family::FileXY, Family::FileObjProjected}) {
    if (family_name(f) == name) return f;
  }
  // Short aliases for the generator families.
  if (name == "square") return Family::UniformSquare;
  if (name == "disk") return Family::UniformDisk;
  throw std::invalid_argument("unknown dataset family: " + std::string(name));
}

struct DatasetSpec {
  Family family = Family::UniformSquare;
  std::size_t size = 0;
  std::uint64_t seed = 1;
  std::filesystem::path path;

  bool is_generated() const { return family == Family::UniformSquare || family == Family::UniformDisk; }

  std::string summary() const {
    if (is_generated()) {
      return std::string(family_name(family)) + ":" + std::to_string(size) + ":seed=" + std::to_string(seed);
    }
    return std::string(family_name(family)) + ":" + path.string();
  }
};

// Raised by the loaders; carries the 1-based line number of the bad record.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& source, std::size_t line, const std::string& what)
      : std::runtime_error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class SymmetricUnitSource {
 public:
  explicit SymmetricUnitSource(std::uint64_t seed) : engine_(seed) {}

  // Uniform in [-1, 1).
  double next() {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return 2.0 * u - 1.0;
  }

 private:
  std::mt19937_64 engine_;
};

inline PointSet gen_uniform_square(std::size_t size, std::uint64_t seed) {
  SymmetricUnitSource rng(seed);
  std::vector<Point2> pts(size);
  for (Point2& p : pts) {
    p.x = rng.next();
    p.y = rng.next();
  }
  return PointSet(std::move(pts));
}

// Rejection sampling from the enclosing square.
inline PointSet gen_uniform_disk(std::size_t size, std::uint64_t seed) {
  SymmetricUnitSource rng(seed);
  std::vector<Point2> pts;
  pts.reserve(size);
  while (pts.size() < size) {
    const double x = rng.next();
    const double y = rng.next();
    if (x * x + y * y <= 1.0) pts.push_back({x, y});
  }
  return PointSet(std::move(pts));
}

namespace detail {

inline std::string_view trim_left(std::string_view s) {
  const auto pos = s.find_first_not_of(" \t\r\n\v\f");
  return pos == std::string_view::npos ? std::string_view{} : s.substr(pos);
}

// Splits off the next whitespace-delimited token.
inline std::string_view next_token(std::string_view& s) {
  s = trim_left(s);
  const auto end = s.find_first_of(" \t\r\n\v\f");
  std::string_view tok = s.substr(0, end);
  s = end == std::string_view::npos ? std::string_view{} : s.substr(end);
  return tok;
}

inline bool parse_double(std::string_view tok, double& out) {
  if (tok.empty()) return false;
  if (tok.front() == '+') tok.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc() && ptr == tok.data() + tok.size();
}

inline std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::system_error(errno, std::generic_category(), "cannot open " + path.string());
  return in;
}

}  // namespace detail

// Whitespace-separated "x y" per line; further columns are ignored. Blank
// lines and lines starting with '#' are skipped.
inline PointSet parse_xy(std::istream& in, const std::string& source = "<stream>") {
  std::vector<Point2> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view rest = detail::trim_left(line);
    if (rest.empty() || rest.front() == '#') continue;
    const std::string_view xs = detail::next_token(rest);
    const std::string_view ys = detail::next_token(rest);
    Point2 p;
    if (!detail::parse_double(xs, p.x) || !detail::parse_double(ys, p.y)) {
      throw ParseError(source, lineno, "expected two numbers, got '" + line + "'");
    }
    if (!is_finite(p)) throw ParseError(source, lineno, "non-finite coordinate");
    pts.push_back(p);
  }
  return PointSet(std::move(pts));
}

inline PointSet load_xy(const std::filesystem::path& path) {
  auto in = detail::open_input(path);
  return parse_xy(in, path.string());
}

// Vertex records ("v x y z [w]") projected onto the XY plane. Every other
// record type is ignored. Projected duplicates are kept.
inline PointSet parse_obj_projected(std::istream& in, const std::string& source = "<stream>",
                                    std::vector<std::string>* warnings = nullptr) {
  std::vector<Point2> pts;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view rest = line;
    if (detail::next_token(rest) != "v") continue;
    double coords[3];
    for (double& c : coords) {
      if (!detail::parse_double(detail::next_token(rest), c) || !std::isfinite(c)) {
        throw ParseError(source, lineno, "malformed vertex record '" + line + "'");
      }
    }
    pts.push_back({coords[0], coords[1]});
  }
  if (pts.empty() && warnings) warnings->push_back(source + ": no vertex records found");
  return PointSet(std::move(pts));
}

inline PointSet load_obj_projected(const std::filesystem::path& path, std::vector<std::string>* warnings = nullptr) {
  auto in = detail::open_input(path);
  return parse_obj_projected(in, path.string(), warnings);
}

inline PointSet load_dataset(const DatasetSpec& spec, std::vector<std::string>* warnings = nullptr) {
  switch (spec.family) {
    case Family::UniformSquare: return gen_uniform_square(spec.size, spec.seed);
    case Family::UniformDisk: return gen_uniform_disk(spec.size, spec.seed);
    case Family::FileXY: return load_xy(spec.path);
    case Family::FileObjProjected: return load_obj_projected(spec.path, warnings);
  }
  throw std::invalid_argument("unknown dataset family");
}

inline void append_number(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

// Shortest round-trip representation, so reloading gives identical doubles.
inline void write_xy(std::ostream& out, std::span<const Point2> pts, std::string_view header) {
  std::string buf;
  buf.reserve(pts.size() * 40 + header.size() + 4);
  buf += "# ";
  buf += header;
  buf += '\n';
  for (const Point2& p : pts) {
    append_number(buf, p.x);
    buf += ' ';
    append_number(buf, p.y);
    buf += '\n';
  }
  out << buf;
}

inline void save_xy(const std::filesystem::path& path, std::span<const Point2> pts, std::string_view header) {
  std::ofstream out(path);
  if (!out) throw std::system_error(errno, std::generic_category(), "cannot write " + path.string());
  write_xy(out, pts, header);
  if (!out) throw std::system_error(errno, std::generic_category(), "write failed for " + path.string());
}

}  // namespace hullfilter
