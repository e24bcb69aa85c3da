#pragma once

#include <string>
#include <utility>
#include <vector>

#include "geomtype/geometric_type.hpp"

namespace geomtype {

/// Parses the line-oriented .gt format. Syntax errors throw ParseError with
/// line/column; semantic problems (out-of-range refs, count mismatches) are
/// representable and left to validate().
GeometricType parse_gt(const std::string& text);

/// Canonical serialization: rect lines in order, map lines sorted by (i, j).
std::string serialize_gt(const GeometricType& g);

/// Like parse_gt but hands back trailing "cycle:" lines for the .gtc format.
struct GtWithTail {
  GeometricType g;
  std::vector<std::pair<int, std::string>> cycle_lines;  // (line number, content)
};
GtWithTail parse_gt_with_tail(const std::string& text);

}  // namespace geomtype
