// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Integer point-line configurations in the plane.

#ifndef JOINTS_PLANAR_H_
#define JOINTS_PLANAR_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace joints {

struct IntPoint {
  std::int64_t a = 0;
  std::int64_t b = 0;

  friend auto operator<=>(const IntPoint&, const IntPoint&) = default;
};

// The line {(x, y) : A x + B y = C}. Always primitive (gcd of |A|, |B|, |C|
// is 1) with A > 0, or A = 0 and B > 0.
class IntLine {
 public:
  // Canonicalizes; throws DomainError when A = B = 0.
  IntLine(std::int64_t A, std::int64_t B, std::int64_t C);

  static IntLine Horizontal(std::int64_t b) { return IntLine(0, 1, b); }
  static IntLine Vertical(std::int64_t a) { return IntLine(1, 0, a); }
  static IntLine Diagonal(std::int64_t c) { return IntLine(1, -1, c); }

  std::int64_t A() const { return A_; }
  std::int64_t B() const { return B_; }
  std::int64_t C() const { return C_; }
  std::string ToString() const;

  friend auto operator<=>(const IntLine&, const IntLine&) = default;

 private:
  std::int64_t A_, B_, C_;
};

bool Incident(const IntLine& l, const IntPoint& p);

// The common point of two distinct lines when it exists and is integral.
// Throws DomainError for identical lines.
std::optional<IntPoint> Intersect(const IntLine& l1, const IntLine& l2);

// Three points (ascending indices) and the lines joining them pairwise:
// lines[0] joins points 0 and 1, lines[1] joins 1 and 2, lines[2] joins 0 and 2.
struct Triangle {
  std::array<std::size_t, 3> points;
  std::array<std::size_t, 3> lines;
};

class Configuration {
 public:
  Configuration() = default;
  // Throws DomainError on duplicate points or lines.
  Configuration(std::vector<IntPoint> points, std::vector<IntLine> lines);

  const std::vector<IntPoint>& points() const { return points_; }
  const std::vector<IntLine>& lines() const { return lines_; }
  // Sorted point indices on line i.
  const std::vector<std::size_t>& PointsOn(std::size_t line) const {
    return points_on_.at(line);
  }
  // Sorted line indices through point i.
  const std::vector<std::size_t>& LinesThrough(std::size_t point) const {
    return lines_through_.at(point);
  }
  // The configuration line through both points, if any.
  std::optional<std::size_t> LineJoining(std::size_t p, std::size_t q) const;

 private:
  std::vector<IntPoint> points_;
  std::vector<IntLine> lines_;
  std::vector<std::vector<std::size_t>> points_on_;
  std::vector<std::vector<std::size_t>> lines_through_;
};

// Up to `limit` triangles, ordered lexicographically by sorted point indices.
std::vector<Triangle> FindTriangles(const Configuration& cfg,
                                    std::size_t limit);
// Triangles with smallest point index in [first, last), same order.
std::vector<Triangle> FindTrianglesFrom(const Configuration& cfg,
                                        std::size_t first, std::size_t last,
                                        std::size_t limit);
bool IsTriangleFree(const Configuration& cfg);
// True when each line of t holds exactly two of its points.
bool SatisfiesTriangleIncidence(const Configuration& cfg, const Triangle& t);

std::vector<std::size_t> TriplePoints(const Configuration& cfg);

// Keeps the lines holding at least two points.
Configuration PruneLines(const Configuration& cfg);

}  // namespace joints

#endif  // JOINTS_PLANAR_H_
