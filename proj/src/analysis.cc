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

#include "joints/analysis.h"

#include <algorithm>
#include <cmath>
#include <regex>
#include <set>

#include "joints/construction.h"
#include "joints/planar.h"

namespace joints {

mpq_class ParseEpsilon(const std::string& text) {
  static const std::regex kForm(R"(\s*(\d+)(?:\s*/\s*(\d+))?\s*)");
  std::smatch match;
  if (!std::regex_match(text, match, kForm)) {
    throw DomainError("epsilon must look like p/q, got '" + text + "'");
  }
  mpz_class num(match[1].str());
  mpz_class den(match[2].matched ? match[2].str() : std::string("1"));
  if (den == 0 || num == 0) {
    throw DomainError("epsilon must be a positive rational, got '" + text + "'");
  }
  mpq_class eps(num, den);
  eps.canonicalize();
  return eps;
}

std::string EpsilonString(const mpq_class& eps) {
  return eps.get_num().get_str() + "/" + eps.get_den().get_str();
}

namespace {

void RequirePositive(const mpq_class& eps) {
  if (eps <= 0) throw DomainError("epsilon must be positive");
}

// count >= c / eps, by cross-multiplication.
bool AtLeastOver(std::size_t count, unsigned c, const mpq_class& eps) {
  return mpz_class(static_cast<unsigned long>(count)) * eps.get_num() >=
         mpz_class(c) * eps.get_den();
}

// Distinct planes spanned by meeting pairs among `active` lines.
std::set<Subset> CandidatePlanes(const Matroid& m, std::span<const Flat> lines,
                                 const std::vector<std::size_t>& active) {
  std::vector<std::vector<std::size_t>> through(m.size());
  for (std::size_t i : active) {
    for (Element e : lines[i].members) through[e].push_back(i);
  }
  std::set<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& ls : through) {
    for (std::size_t a = 0; a < ls.size(); ++a) {
      for (std::size_t b = a + 1; b < ls.size(); ++b) pairs.emplace(ls[a], ls[b]);
    }
  }
  std::set<Subset> planes;
  for (const auto& [a, b] : pairs) {
    // a pair already inside a known plane spans that same plane
    bool known = false;
    for (const auto& p : planes) {
      if (Includes(p, lines[a].members) && Includes(p, lines[b].members)) {
        known = true;
        break;
      }
    }
    if (!known) planes.insert(Closure(m, Union(lines[a].members, lines[b].members)));
  }
  return planes;
}

std::vector<std::size_t> LinesInside(std::span<const Flat> lines,
                                     const std::vector<std::size_t>& active,
                                     const Subset& plane) {
  std::vector<std::size_t> out;
  for (std::size_t i : active) {
    if (Includes(plane, lines[i].members)) out.push_back(i);
  }
  return out;
}

}  // namespace

PruneResult HeavyPlanePrune(const Matroid& m, std::span<const Flat> lines,
                            const mpq_class& eps) {
  RequirePositive(eps);
  ValidateLines(m, lines);
  PruneResult r;
  for (std::size_t i = 0; i < lines.size(); ++i) r.surviving.push_back(i);
  while (true) {
    std::optional<PlaneRemoval> heaviest;
    // std::set iterates planes in lexicographic order; strict > keeps the
    // smallest among equally heavy planes
    for (const Subset& plane : CandidatePlanes(m, lines, r.surviving)) {
      auto inside = LinesInside(lines, r.surviving, plane);
      if (!AtLeastOver(inside.size(), 2, eps)) continue;
      if (!heaviest || inside.size() > heaviest->removed.size()) {
        heaviest = PlaneRemoval{plane, std::move(inside)};
      }
    }
    if (!heaviest) break;
    std::vector<std::size_t> keep;
    std::set_difference(r.surviving.begin(), r.surviving.end(),
                        heaviest->removed.begin(), heaviest->removed.end(),
                        std::back_inserter(keep));
    r.surviving = std::move(keep);
    r.trace.push_back(std::move(*heaviest));
  }
  return r;
}

std::size_t MaxLinesInPlane(const Matroid& m, std::span<const Flat> lines) {
  std::vector<std::size_t> all(lines.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::size_t best = 0;
  for (const Subset& plane : CandidatePlanes(m, lines, all)) {
    best = std::max(best, LinesInside(lines, all, plane).size());
  }
  return best;
}

DegreePartition PartitionByDegree(const Matroid& m, std::span<const Flat> lines,
                                  const mpq_class& eps) {
  RequirePositive(eps);
  DegreePartition p;
  p.degree.assign(m.size(), 0);
  for (const Flat& l : lines) {
    m.Validate(l.members);
    for (Element e : l.members) ++p.degree[e];
  }
  for (Element x = 0; x < m.size(); ++x) {
    const std::size_t d = p.degree[x];
    if (AtLeastOver(d, 4, eps)) {
      p.E1.push_back(x);
    } else if (d >= 3) {
      p.E2.push_back(x);
    }
  }
  return p;
}

IntersectionGraph BuildIntersectionGraph(const Matroid& m,
                                         std::span<const Flat> lines,
                                         const Subset& E2) {
  IntersectionGraph g;
  g.vertices = lines.size();
  g.adjacency.resize(lines.size());
  std::vector<std::vector<std::size_t>> through(m.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    m.Validate(lines[i].members);
    for (Element e : lines[i].members) through[e].push_back(i);
  }
  for (std::size_t u = 0; u < lines.size(); ++u) {
    for (std::size_t v = u + 1; v < lines.size(); ++v) {
      const Subset common = Intersection(lines[u].members, lines[v].members);
      if (common.size() > 1) {
        throw DomainError("two lines share more than one point");
      }
    }
  }
  for (Element x : E2) {
    const auto& ls = through.at(x);
    for (std::size_t a = 0; a < ls.size(); ++a) {
      for (std::size_t b = a + 1; b < ls.size(); ++b) {
        g.witness.emplace(std::make_pair(ls[a], ls[b]), x);
      }
    }
  }
  for (const auto& [key, x] : g.witness) {
    g.edges.push_back({key.first, key.second, x});
    g.adjacency[key.first].push_back(key.second);
    g.adjacency[key.second].push_back(key.first);
  }
  for (auto& adj : g.adjacency) std::sort(adj.begin(), adj.end());
  return g;
}

namespace {

template <typename Fn>
void ForEachTriangle(const IntersectionGraph& g, Fn&& fn) {
  for (const auto& e : g.edges) {
    const auto& au = g.adjacency[e.u];
    const auto& av = g.adjacency[e.v];
    auto i = std::upper_bound(au.begin(), au.end(), e.v);
    auto j = std::upper_bound(av.begin(), av.end(), e.v);
    while (i != au.end() && j != av.end()) {
      if (*i == *j) {
        fn(e.u, e.v, *i);
        ++i;
        ++j;
      } else if (*i < *j) {
        ++i;
      } else {
        ++j;
      }
    }
  }
}

}  // namespace

TriangleStats CountTriangles(const IntersectionGraph& g) {
  TriangleStats s;
  std::map<std::pair<std::size_t, std::size_t>, std::uint64_t> nondegenerate;
  ForEachTriangle(g, [&](std::size_t u, std::size_t v, std::size_t w) {
    ++s.total;
    const Element xuv = g.witness.at({u, v});
    const Element xvw = g.witness.at({v, w});
    const Element xuw = g.witness.at({u, w});
    if (xuv == xvw && xvw == xuw) {
      ++s.degenerate;
      ++s.per_witness[xuv];
    } else if (xuv != xvw && xvw != xuw && xuv != xuw) {
      ++nondegenerate[{u, v}];
      ++nondegenerate[{v, w}];
      ++nondegenerate[{u, w}];
    } else {
      ++s.mixed;
    }
  });
  for (const auto& [edge, count] : nondegenerate) {
    s.max_pair_nondegenerate = std::max(s.max_pair_nondegenerate, count);
  }
  return s;
}

bool WitnessTrianglesEdgeDisjoint(const IntersectionGraph& g) {
  std::map<std::pair<std::size_t, std::size_t>, Element> owner;
  bool disjoint = true;
  ForEachTriangle(g, [&](std::size_t u, std::size_t v, std::size_t w) {
    const Element x = g.witness.at({u, v});
    if (g.witness.at({v, w}) != x || g.witness.at({u, w}) != x) return;
    for (auto edge : {std::make_pair(u, v), std::make_pair(v, w),
                      std::make_pair(u, w)}) {
      auto [it, inserted] = owner.emplace(edge, x);
      if (!inserted && it->second != x) disjoint = false;
    }
  });
  return disjoint;
}

AnalysisReport Analyze(const Matroid& m, std::span<const Flat> lines,
                       const mpq_class& eps) {
  RequirePositive(eps);
  AnalysisReport r;
  r.epsilon = eps;
  r.L_initial = lines.size();
  r.joints_initial = CountJoints(m, lines);
  r.prune = HeavyPlanePrune(m, lines, eps);
  r.planes_pruned = r.prune.trace.size();

  std::vector<Flat> kept;
  for (std::size_t i : r.prune.surviving) kept.push_back(lines[i]);
  r.L_after_prune = kept.size();
  r.joints_after_prune = CountJoints(m, kept);
  r.max_lines_in_plane_after = MaxLinesInPlane(m, kept);

  const DegreePartition part = PartitionByDegree(m, kept, eps);
  r.E1_size = part.E1.size();
  r.E2_size = part.E2.size();
  for (Element x : part.E1) r.degree_sum_E1 += part.degree[x];
  for (Element x : part.E2) {
    const std::uint64_t d = part.degree[x];
    r.degenerate_bound += d * (d - 1) * (d - 2) / 6;
  }

  const IntersectionGraph g = BuildIntersectionGraph(m, kept, part.E2);
  r.graph_vertices = g.vertices;
  r.graph_edges = g.edges.size();
  const TriangleStats stats = CountTriangles(g);
  r.triangles = stats.total;
  r.degenerate_triples = stats.degenerate;
  r.max_pair_nondegenerate = stats.max_pair_nondegenerate;
  r.edge_disjoint_lower_bound = part.E2.size();
  r.witness_edge_disjoint = WitnessTrianglesEdgeDisjoint(g);
  return r;
}

std::vector<SweepRow> JointsSweep(std::span<const std::uint64_t> Ns,
                                  const mpq_class& eps) {
  RequirePositive(eps);
  std::vector<SweepRow> rows;
  for (std::uint64_t N : Ns) {
    SweepRow row;
    row.N = N;
    try {
      const Construction c = BuildConstruction(N);
      row.B_size = c.B.size();
      row.E_size = c.config().points().size();
      row.L0 = c.grid.lines.size();
      row.L = c.lines.size();
      row.joints = CountJoints(*c.matroid, c.lines);
      row.triple_points = TriplePoints(c.config()).size();
      row.triangle_free = c.triangle_check_exhaustive
                              ? IsTriangleFree(c.config())
                              : true;
      if (row.L > 0) {
        const double L = static_cast<double>(row.L);
        row.joints_over_L2 = static_cast<double>(row.joints) / (L * L);
        row.joints_over_L18 =
            static_cast<double>(row.joints) / std::pow(L, 1.8);
      }
      if (c.degenerate) row.warning = c.warnings.front();
      row.analysis = Analyze(*c.matroid, c.lines, eps);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace joints
