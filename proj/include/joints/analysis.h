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

// Measurement harness for the upper-bound argument on joints in simple
// matroids: heavy-plane pruning, the d(x) >= 4/eps split, the graph on lines
// meeting at low-degree joints, and its triangle statistics.
//
// The removal-lemma constant is not computed anywhere. Where the argument
// picks two lines in many non-degenerate triangles, the report carries the
// maximum such count over all edges instead.

#ifndef JOINTS_ANALYSIS_H_
#define JOINTS_ANALYSIS_H_

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "joints/matroid.h"

namespace joints {

// Parses "p/q" or "p" into a positive rational; throws DomainError otherwise.
mpq_class ParseEpsilon(const std::string& text);
std::string EpsilonString(const mpq_class& eps);

struct PlaneRemoval {
  Subset plane;
  std::vector<std::size_t> removed;  // indices into the input line list
};

struct PruneResult {
  std::vector<std::size_t> surviving;  // indices into the input line list
  std::vector<PlaneRemoval> trace;
};

// Repeatedly drops every line of the heaviest plane holding >= 2/eps current
// lines. Candidate planes are closures of pairs of meeting lines; ties go to
// the lexicographically smaller plane. Throws DomainError for eps <= 0.
PruneResult HeavyPlanePrune(const Matroid& m, std::span<const Flat> lines,
                            const mpq_class& eps);

// Most lines of `lines` inside a single plane spanned by two meeting lines
// (0 when no two lines meet).
std::size_t MaxLinesInPlane(const Matroid& m, std::span<const Flat> lines);

struct DegreePartition {
  std::vector<std::size_t> degree;  // per ground element
  Subset E1;                        // d(x) >= 4/eps
  Subset E2;                        // 3 <= d(x) < 4/eps
};

DegreePartition PartitionByDegree(const Matroid& m, std::span<const Flat> lines,
                                  const mpq_class& eps);

struct IntersectionGraph {
  struct Edge {
    std::size_t u = 0;  // u < v, vertex = line index
    std::size_t v = 0;
    Element witness = 0;
  };
  std::size_t vertices = 0;
  std::vector<Edge> edges;                      // sorted by (u, v)
  std::vector<std::vector<std::size_t>> adjacency;  // sorted
  std::map<std::pair<std::size_t, std::size_t>, Element> witness;
};

// One vertex per line; u ~ v when the lines meet at a point of E2. Throws
// DomainError if two lines share more than one point.
IntersectionGraph BuildIntersectionGraph(const Matroid& m,
                                         std::span<const Flat> lines,
                                         const Subset& E2);

struct TriangleStats {
  std::uint64_t total = 0;
  std::uint64_t degenerate = 0;  // all three edges share one witness
  std::map<Element, std::uint64_t> per_witness;
  // Largest number of non-degenerate triangles through one edge.
  std::uint64_t max_pair_nondegenerate = 0;
  // Triangles whose witnesses are neither all equal nor all distinct.
  std::uint64_t mixed = 0;
};

TriangleStats CountTriangles(const IntersectionGraph& g);

// True iff no edge lies in degenerate triangles of two different witnesses.
bool WitnessTrianglesEdgeDisjoint(const IntersectionGraph& g);

struct AnalysisReport {
  mpq_class epsilon;
  std::size_t L_initial = 0;
  std::size_t L_after_prune = 0;
  std::size_t planes_pruned = 0;
  std::size_t joints_initial = 0;
  std::size_t joints_after_prune = 0;
  std::size_t E1_size = 0;
  std::size_t E2_size = 0;
  std::size_t graph_vertices = 0;
  std::size_t graph_edges = 0;
  std::uint64_t triangles = 0;
  std::uint64_t degenerate_triples = 0;
  // Distinct E2 witnesses give edge-disjoint triangles: |E2|.
  std::uint64_t edge_disjoint_lower_bound = 0;
  std::uint64_t max_pair_nondegenerate = 0;
  std::uint64_t degree_sum_E1 = 0;
  std::uint64_t degenerate_bound = 0;  // sum over E2 of C(d(x), 3)
  std::size_t max_lines_in_plane_after = 0;
  bool witness_edge_disjoint = true;
  PruneResult prune;
};

AnalysisReport Analyze(const Matroid& m, std::span<const Flat> lines,
                       const mpq_class& eps);

struct SweepRow {
  std::uint64_t N = 0;
  std::size_t B_size = 0;
  std::size_t E_size = 0;
  std::size_t L0 = 0;
  std::size_t L = 0;
  std::size_t joints = 0;
  std::size_t triple_points = 0;
  std::optional<double> joints_over_L2;
  std::optional<double> joints_over_L18;
  bool triangle_free = false;
  std::optional<AnalysisReport> analysis;
  std::optional<std::string> warning;
  std::optional<std::string> error;
};

// One row per N, in input order; a failing N becomes an error row.
std::vector<SweepRow> JointsSweep(std::span<const std::uint64_t> Ns,
                                  const mpq_class& eps);

}  // namespace joints

#endif  // JOINTS_ANALYSIS_H_
