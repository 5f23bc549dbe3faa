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

#include "joints/planar.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

#include "joints/errors.h"

namespace joints {

namespace {

std::int64_t Abs(std::int64_t v) { return v < 0 ? -v : v; }

}  // namespace

IntLine::IntLine(std::int64_t A, std::int64_t B, std::int64_t C)
    : A_(A), B_(B), C_(C) {
  if (A_ == 0 && B_ == 0) throw DomainError("line with A = B = 0");
  const std::int64_t g = std::gcd(std::gcd(Abs(A_), Abs(B_)), Abs(C_));
  A_ /= g;
  B_ /= g;
  C_ /= g;
  if (A_ < 0 || (A_ == 0 && B_ < 0)) {
    A_ = -A_;
    B_ = -B_;
    C_ = -C_;
  }
}

std::string IntLine::ToString() const {
  return std::to_string(A_) + "x + " + std::to_string(B_) +
         "y = " + std::to_string(C_);
}

bool Incident(const IntLine& l, const IntPoint& p) {
  const __int128 lhs = static_cast<__int128>(l.A()) * p.a +
                       static_cast<__int128>(l.B()) * p.b;
  return lhs == l.C();
}

std::optional<IntPoint> Intersect(const IntLine& l1, const IntLine& l2) {
  if (l1 == l2) throw DomainError("intersect of identical lines");
  using Wide = __int128;
  const Wide det = Wide{l1.A()} * l2.B() - Wide{l2.A()} * l1.B();
  if (det == 0) return std::nullopt;
  const Wide xn = Wide{l1.C()} * l2.B() - Wide{l2.C()} * l1.B();
  const Wide yn = Wide{l1.A()} * l2.C() - Wide{l2.A()} * l1.C();
  if (xn % det != 0 || yn % det != 0) return std::nullopt;
  return IntPoint{static_cast<std::int64_t>(xn / det),
                  static_cast<std::int64_t>(yn / det)};
}

Configuration::Configuration(std::vector<IntPoint> points,
                             std::vector<IntLine> lines)
    : points_(std::move(points)), lines_(std::move(lines)) {
  if (std::set<IntPoint>(points_.begin(), points_.end()).size() !=
      points_.size()) {
    throw DomainError("configuration has duplicate points");
  }
  if (std::set<IntLine>(lines_.begin(), lines_.end()).size() != lines_.size()) {
    throw DomainError("configuration has duplicate lines");
  }
  points_on_.resize(lines_.size());
  lines_through_.resize(points_.size());
  for (std::size_t l = 0; l < lines_.size(); ++l) {
    for (std::size_t p = 0; p < points_.size(); ++p) {
      if (Incident(lines_[l], points_[p])) {
        points_on_[l].push_back(p);
        lines_through_[p].push_back(l);
      }
    }
  }
}

std::optional<std::size_t> Configuration::LineJoining(std::size_t p,
                                                      std::size_t q) const {
  const auto& lp = LinesThrough(p);
  const auto& lq = LinesThrough(q);
  auto i = lp.begin();
  auto j = lq.begin();
  while (i != lp.end() && j != lq.end()) {
    if (*i == *j) return *i;
    if (*i < *j) {
      ++i;
    } else {
      ++j;
    }
  }
  return std::nullopt;
}

// Two points joined by configuration lines through a common third point are
// never on one of those lines again (distinct lines share at most one point),
// so the three joining lines are distinct and each holds exactly two points.
std::vector<Triangle> FindTrianglesFrom(const Configuration& cfg,
                                        std::size_t first, std::size_t last,
                                        std::size_t limit) {
  std::vector<Triangle> out;
  last = std::min(last, cfg.points().size());
  for (std::size_t i = first; i < last && out.size() < limit; ++i) {
    // (neighbour, line joining it to i), neighbours above i only
    std::vector<std::pair<std::size_t, std::size_t>> nbrs;
    for (std::size_t l : cfg.LinesThrough(i)) {
      for (std::size_t q : cfg.PointsOn(l)) {
        if (q > i) nbrs.emplace_back(q, l);
      }
    }
    std::sort(nbrs.begin(), nbrs.end());
    for (std::size_t u = 0; u < nbrs.size() && out.size() < limit; ++u) {
      for (std::size_t v = u + 1; v < nbrs.size() && out.size() < limit; ++v) {
        const auto [q1, l1] = nbrs[u];
        const auto [q2, l2] = nbrs[v];
        if (l1 == l2) continue;
        if (auto l12 = cfg.LineJoining(q1, q2)) {
          out.push_back(Triangle{{i, q1, q2}, {l1, *l12, l2}});
        }
      }
    }
  }
  return out;
}

std::vector<Triangle> FindTriangles(const Configuration& cfg,
                                    std::size_t limit) {
  return FindTrianglesFrom(cfg, 0, cfg.points().size(), limit);
}

bool IsTriangleFree(const Configuration& cfg) {
  return FindTriangles(cfg, 1).empty();
}

bool SatisfiesTriangleIncidence(const Configuration& cfg, const Triangle& t) {
  const auto& [p0, p1, p2] = t.points;
  if (p0 == p1 || p1 == p2 || p0 == p2) return false;
  const auto& [l0, l1, l2] = t.lines;
  if (l0 == l1 || l1 == l2 || l0 == l2) return false;
  const std::array<std::array<std::size_t, 2>, 3> expected{
      {{p0, p1}, {p1, p2}, {p0, p2}}};
  for (std::size_t k = 0; k < 3; ++k) {
    const IntLine& line = cfg.lines()[t.lines[k]];
    std::size_t on = 0;
    for (std::size_t p : t.points) on += Incident(line, cfg.points()[p]);
    if (on != 2) return false;
    for (std::size_t p : expected[k]) {
      if (!Incident(line, cfg.points()[p])) return false;
    }
  }
  return true;
}

std::vector<std::size_t> TriplePoints(const Configuration& cfg) {
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < cfg.points().size(); ++p) {
    if (cfg.LinesThrough(p).size() >= 3) out.push_back(p);
  }
  return out;
}

Configuration PruneLines(const Configuration& cfg) {
  std::vector<IntLine> kept;
  for (std::size_t l = 0; l < cfg.lines().size(); ++l) {
    if (cfg.PointsOn(l).size() >= 2) kept.push_back(cfg.lines()[l]);
  }
  return Configuration(cfg.points(), std::move(kept));
}

}  // namespace joints
