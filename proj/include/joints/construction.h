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

// A simple rank-4 matroid on a triangle-free planar configuration (E, L),
// and the grid-plus-Behrend configuration that has many triple points.
//
// Independence on E:
//   * at most two points: independent;
//   * three points: dependent iff one line of L holds all three;
//   * four points: dependent iff a line of L holds three of them, or they lie
//     in an angle l u l' (two lines of L meeting at a point of E);
//   * five or more: dependent.
// Triangle-freeness is what makes this satisfy the exchange axiom. Each line
// of L becomes a matroid line, and a point on three lines of L is a joint.

#ifndef JOINTS_CONSTRUCTION_H_
#define JOINTS_CONSTRUCTION_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "joints/behrend.h"
#include "joints/checks.h"
#include "joints/matroid.h"
#include "joints/planar.h"

namespace joints {

// Horizontals y = b and verticals x = a for 1 <= a, b <= N, then diagonals
// x - y = c for -N <= c <= N: 4N + 1 lines.
struct GridFamily {
  std::uint64_t N = 0;
  std::vector<IntLine> lines;
};

GridFamily MakeGridLines(std::uint64_t N);

// {(a, b) : 1 <= a, b <= N, a + b in B}, a-major order.
std::vector<IntPoint> BehrendPoints(std::uint64_t N,
                                    std::span<const std::uint64_t> B);

enum class TriangleGate { kExhaustive, kSampled, kNone };

struct GateOptions {
  TriangleGate gate = TriangleGate::kExhaustive;
  std::uint64_t samples = 5000;  // leading points tried by kSampled
  std::uint64_t seed = 0;
};

class TriangleFreeMatroid {
 public:
  // Throws DomainError if a line holds fewer than two points and
  // VerificationError if the gate finds a triangle.
  static TriangleFreeMatroid Create(Configuration cfg, GateOptions gate = {});

  const Configuration& config() const { return config_; }
  std::size_t size() const { return config_.points().size(); }

  // Throws DomainError on an unknown point index. Expects sorted input.
  bool IsIndependent(std::span<const Element> x) const;
  bool HasCollinearTriple(std::span<const Element> x) const;
  // x lies in l u l' for lines meeting at a point of E.
  bool CoveredByAngle(std::span<const Element> x) const;

  // Witness point of the angle formed by lines l1 and l2, if they meet in E.
  std::optional<std::size_t> AngleWitness(std::size_t l1,
                                          std::size_t l2) const;
  const std::map<std::pair<std::size_t, std::size_t>, std::size_t>& angles()
      const {
    return angles_;
  }

 private:
  explicit TriangleFreeMatroid(Configuration cfg);
  bool OnLine(std::size_t line, std::size_t point) const;

  Configuration config_;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> angles_;
};

// Ground labels are "(a,b)". The oracle shares ownership of `tf`.
Matroid AsMatroid(std::shared_ptr<const TriangleFreeMatroid> tf);

// closure({p, q}) for the first two points of each configuration line.
std::vector<Flat> MatroidLines(const Matroid& m, const Configuration& cfg);

struct ConstructionOptions {
  bool force_exhaustive_triangle_check = false;
  std::uint64_t exhaustive_limit_N = 200;
  std::uint64_t triangle_samples = 5000;
  std::uint64_t seed = 0;
};

struct Construction {
  std::uint64_t N = 0;
  std::vector<std::uint64_t> B;
  GridFamily grid;
  Configuration unpruned;  // (E, L0)
  std::shared_ptr<const TriangleFreeMatroid> tf;  // (E, L) after pruning
  std::shared_ptr<const Matroid> matroid;
  std::vector<Flat> lines;  // matroid lines, one per retained line
  bool triangle_check_exhaustive = false;
  bool degenerate = false;  // no retained lines
  std::vector<std::string> warnings;

  const Configuration& config() const { return tf->config(); }
};

// behrend set -> points -> grid lines -> prune -> triangle gate -> matroid.
// Throws DomainError for N < 4 and VerificationError if a triangle is found.
Construction BuildConstruction(std::uint64_t N,
                               const ConstructionOptions& options = {});

// Rebuilds from a pruned configuration (for instance a reloaded dump). The
// unpruned configuration is the points with the full grid family.
Construction BuildFromConfiguration(std::uint64_t N,
                                    std::vector<std::uint64_t> B,
                                    Configuration pruned,
                                    const ConstructionOptions& options = {});

struct PropertiesReport {
  CheckResult line_closure;    // closure of two points of l is l n E
  CheckResult joint_span;      // {x, a1, a2, a3} independent, rank 4
  CheckResult rank_at_most_4;
  std::uint64_t lines_total = 0;
  std::uint64_t lines_covered = 0;
  std::uint64_t triple_points_total = 0;
  std::uint64_t triple_points_covered = 0;

  CheckStatus overall() const;
};

// Each unit of budget is one closure or rank computation. Coverage is
// reported; running out of budget yields kInconclusive, never a pass.
PropertiesReport VerifyConstructionProperties(const TriangleFreeMatroid& tf,
                                              const Matroid& m,
                                              std::uint64_t budget);

}  // namespace joints

#endif  // JOINTS_CONSTRUCTION_H_
