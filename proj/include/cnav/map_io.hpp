#pragma once

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cnav/geometry.hpp"

namespace cnav {

struct MapParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MapValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

namespace detail {

// Returns true iff the four map edges are fully covered by wall segments
// lying on them. Collinear pieces may be split; coverage is checked by
// interval union per edge.
inline bool boundary_covered(const MapSpec& map, std::string* missing) {
  struct Edge {
    bool vertical;
    double fixed;    // x for vertical edges, y for horizontal ones
    double extent;   // full length to cover
    const char* name;
  };
  const Edge edges[4] = {
      {false, 0.0, map.width, "bottom (y=0)"},
      {false, map.height, map.width, "top (y=height)"},
      {true, 0.0, map.height, "left (x=0)"},
      {true, map.width, map.height, "right (x=width)"},
  };
  const double tol = 1e-9;
  for (const Edge& e : edges) {
    std::vector<std::pair<double, double>> spans;
    for (const Segment& s : map.segments) {
      const double a1 = e.vertical ? s.x1 : s.y1;
      const double a2 = e.vertical ? s.x2 : s.y2;
      if (std::abs(a1 - e.fixed) > tol || std::abs(a2 - e.fixed) > tol) continue;
      double lo = e.vertical ? s.y1 : s.x1;
      double hi = e.vertical ? s.y2 : s.x2;
      if (lo > hi) std::swap(lo, hi);
      spans.emplace_back(lo, hi);
    }
    std::sort(spans.begin(), spans.end());
    double covered_to = 0.0;
    for (const auto& [lo, hi] : spans) {
      if (lo > covered_to + tol) break;
      covered_to = std::max(covered_to, hi);
    }
    if (covered_to < e.extent - tol) {
      if (missing) *missing = e.name;
      return false;
    }
  }
  return true;
}

}  // namespace detail

// Checks the MapSpec invariants: positive bounds, all endpoints within
// [0,width]x[0,height], and the four boundary walls present.
inline void validate_map(const MapSpec& map) {
  if (!(map.width > 0.0) || !(map.height > 0.0)) {
    throw MapValidationError(map.name + ": bounds must be positive (got " +
                             std::to_string(map.width) + " x " +
                             std::to_string(map.height) + ")");
  }
  const double tol = 1e-9;
  for (std::size_t i = 0; i < map.segments.size(); ++i) {
    const Segment& s = map.segments[i];
    for (double v : {s.x1, s.x2}) {
      if (v < -tol || v > map.width + tol) {
        throw MapValidationError(map.name + ": segment " + std::to_string(i) +
                                 " endpoint x=" + std::to_string(v) +
                                 " outside [0," + std::to_string(map.width) + "]");
      }
    }
    for (double v : {s.y1, s.y2}) {
      if (v < -tol || v > map.height + tol) {
        throw MapValidationError(map.name + ": segment " + std::to_string(i) +
                                 " endpoint y=" + std::to_string(v) +
                                 " outside [0," + std::to_string(map.height) + "]");
      }
    }
  }
  std::string missing;
  if (!detail::boundary_covered(map, &missing)) {
    throw MapValidationError(map.name + ": boundary wall missing on the " +
                             missing + " edge");
  }
}

inline void add_boundary_walls(MapSpec& map) {
  map.segments.push_back({0.0, 0.0, map.width, 0.0});
  map.segments.push_back({map.width, 0.0, map.width, map.height});
  map.segments.push_back({map.width, map.height, 0.0, map.height});
  map.segments.push_back({0.0, map.height, 0.0, 0.0});
}

// Parses the plain-text map format:
//   bounds <width> <height> [closed]    -- header; `closed` adds boundary walls
//   wall <x1> <y1> <x2> <y2>            -- zero or more
//   clearance <meters>                  -- optional spawn clearance override
// `#` starts a comment; blank lines are ignored. Numbers are decimal meters.
inline MapSpec parse_map(std::istream& in, const std::string& name) {
  MapSpec map;
  map.name = name;
  bool have_bounds = false;
  bool closed = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string kw;
    if (!(ls >> kw)) continue;
    const auto fail = [&](const std::string& what) -> MapParseError {
      return MapParseError(name + ":" + std::to_string(line_no) + ": " + what);
    };
    if (kw == "bounds") {
      if (have_bounds) throw fail("duplicate bounds line");
      if (!(ls >> map.width >> map.height)) {
        throw fail("bounds needs `<width> <height>`");
      }
      std::string flag;
      if (ls >> flag) {
        if (flag != "closed") throw fail("unknown bounds flag `" + flag + "`");
        closed = true;
      }
      have_bounds = true;
    } else if (kw == "wall") {
      if (!have_bounds) throw fail("wall before bounds line");
      Segment s;
      if (!(ls >> s.x1 >> s.y1 >> s.x2 >> s.y2)) {
        throw fail("wall needs `<x1> <y1> <x2> <y2>`");
      }
      map.segments.push_back(s);
    } else if (kw == "clearance") {
      if (!(ls >> map.spawn_clearance)) throw fail("clearance needs a value");
    } else {
      throw fail("unknown directive `" + kw + "`");
    }
    std::string extra;
    if (ls >> extra) throw fail("trailing tokens after `" + kw + "` line");
  }
  if (!have_bounds) throw MapParseError(name + ": missing bounds line");
  if (closed) add_boundary_walls(map);
  validate_map(map);
  return map;
}

inline MapSpec load_map(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MapParseError("cannot open map file: " + path.string());
  return parse_map(in, path.stem().string());
}

}  // namespace cnav
