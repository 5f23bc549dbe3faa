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

#include "joints/serialize.h"

#include <cstdio>
#include <sstream>

#include "joints/errors.h"

namespace joints {

namespace {

std::string FormatRatio(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

Json OptionalRatio(const std::optional<double>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <typename T>
T Field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) {
    throw DomainError(std::string("dump is missing \"") + key + "\"");
  }
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("dump field \"") + key + "\": " + e.what());
  }
}

}  // namespace

Json ToJson(const BehrendSet& b) {
  Json j;
  j["N"] = b.params.N;
  if (b.oracle_fallback) {
    j["n"] = nullptr;
    j["s"] = nullptr;
    j["k"] = nullptr;
  } else {
    j["n"] = b.params.n;
    j["s"] = b.params.s;
    j["k"] = b.params.k;
  }
  j["B_size"] = b.members.size();
  j["members"] = b.members;
  j["fallback"] = b.oracle_fallback;
  return j;
}

Json ToJson(const CheckResult& r) {
  Json j;
  j["name"] = r.name;
  j["status"] = ToString(r.status);
  j["checked"] = r.checked;
  j["violations"] = r.violations;
  if (r.counterexample) {
    j["counterexample"] = {{"first", r.counterexample->first},
                           {"second", r.counterexample->second},
                           {"note", r.counterexample->note}};
  }
  if (!r.detail.empty()) j["detail"] = r.detail;
  return j;
}

Json ToJson(const AxiomsReport& r) {
  Json j;
  j["mode"] = r.mode == CheckMode::kExhaustive ? "exhaustive" : "sampled";
  j["status"] = ToString(r.overall());
  j["independent_sets"] = r.independent_sets;
  j["axioms"] = Json::array();
  for (const auto& a : r.axioms) j["axioms"].push_back(ToJson(a));
  return j;
}

Json ToJson(const PropertiesReport& r) {
  Json j;
  j["status"] = ToString(r.overall());
  j["lines_total"] = r.lines_total;
  j["lines_covered"] = r.lines_covered;
  j["triple_points_total"] = r.triple_points_total;
  j["triple_points_covered"] = r.triple_points_covered;
  j["checks"] = Json::array({ToJson(r.line_closure), ToJson(r.joint_span),
                             ToJson(r.rank_at_most_4)});
  return j;
}

Json ToJson(const IncidenceReport& r) {
  Json j;
  j["passed"] = r.passed();
  j["exhaustive"] = r.exhaustive;
  j["properties"] = Json::array();
  for (const auto& p : r.properties) j["properties"].push_back(ToJson(p));
  return j;
}

Json ToJson(const AnalysisReport& r) {
  Json j;
  j["epsilon"] = EpsilonString(r.epsilon);
  j["L_initial"] = r.L_initial;
  j["L_after_prune"] = r.L_after_prune;
  j["planes_pruned"] = r.planes_pruned;
  j["joints_initial"] = r.joints_initial;
  j["joints_after_prune"] = r.joints_after_prune;
  j["E1_size"] = r.E1_size;
  j["E2_size"] = r.E2_size;
  j["graph_vertices"] = r.graph_vertices;
  j["graph_edges"] = r.graph_edges;
  j["triangles"] = r.triangles;
  j["degenerate_triples"] = r.degenerate_triples;
  j["edge_disjoint_lower_bound"] = r.edge_disjoint_lower_bound;
  j["max_pair_nondegenerate"] = r.max_pair_nondegenerate;
  j["witness_edge_disjoint"] = r.witness_edge_disjoint;
  return j;
}

Json ConstructionDump(const Construction& c) {
  const Configuration& cfg = c.config();
  Json j;
  j["N"] = c.N;
  j["B"] = c.B;
  j["points"] = Json::array();
  for (const auto& p : cfg.points()) j["points"].push_back({p.a, p.b});
  j["lines"] = Json::array();
  for (const auto& l : cfg.lines()) {
    j["lines"].push_back({{"A", l.A()}, {"B", l.B()}, {"C", l.C()}});
  }
  j["pruned_lines"] = cfg.lines().size();
  j["triple_points"] = TriplePoints(cfg).size();
  return j;
}

LoadedDump LoadDump(const Json& j) {
  LoadedDump d;
  d.N = Field<std::uint64_t>(j, "N");
  d.B = Field<std::vector<std::uint64_t>>(j, "B");
  std::vector<IntPoint> points;
  for (const auto& p : Field<std::vector<std::vector<std::int64_t>>>(j, "points")) {
    if (p.size() != 2) throw DomainError("dump point must be [a, b]");
    points.push_back({p[0], p[1]});
  }
  std::vector<IntLine> lines;
  for (const auto& l : Field<Json>(j, "lines")) {
    lines.emplace_back(Field<std::int64_t>(l, "A"), Field<std::int64_t>(l, "B"),
                       Field<std::int64_t>(l, "C"));
  }
  d.config = Configuration(std::move(points), std::move(lines));
  d.pruned_lines = Field<std::uint64_t>(j, "pruned_lines");
  d.triple_points = Field<std::uint64_t>(j, "triple_points");
  return d;
}

Json Grid3dJson(const Grid3d& grid, std::size_t joints, bool full) {
  Json j;
  j["k"] = grid.k;
  j["points"] = grid.ground.size();
  j["lines"] = grid.lines.size();
  j["joints"] = joints;
  if (full) {
    Json pts = Json::array();
    for (const auto& p : grid.ground.points()) {
      Json coords = Json::array();
      for (const auto& c : p.coords()) coords.push_back(c.get_num().get_si());
      pts.push_back(coords);
    }
    Json ls = Json::array();
    for (const auto& l : grid.lines) ls.push_back(l.members);
    j["point_list"] = pts;
    j["line_list"] = ls;
  }
  return j;
}

std::string SweepCsv(std::span<const SweepRow> rows) {
  std::ostringstream out;
  bool first = true;
  for (const char* col : kSweepColumns) {
    out << (first ? "" : ",") << col;
    first = false;
  }
  out << "\r\n";
  for (const auto& r : rows) {
    // error rows keep N and leave the measurements empty
    if (r.error) {
      out << r.N << std::string(std::size(kSweepColumns) - 1, ',') << "\r\n";
      continue;
    }
    const AnalysisReport& a = *r.analysis;
    out << r.N << ',' << r.B_size << ',' << r.E_size << ',' << r.L0 << ','
        << r.L << ',' << r.joints << ','
        << (r.joints_over_L2 ? FormatRatio(*r.joints_over_L2) : "") << ','
        << (r.joints_over_L18 ? FormatRatio(*r.joints_over_L18) : "") << ','
        << a.planes_pruned << ',' << a.E1_size << ',' << a.E2_size << ','
        << a.triangles << ',' << a.degenerate_triples << "\r\n";
  }
  return out.str();
}

Json SweepJson(std::span<const SweepRow> rows, const mpq_class& eps) {
  Json j;
  j["epsilon"] = EpsilonString(eps);
  j["rows"] = Json::array();
  for (const auto& r : rows) {
    Json row;
    row["N"] = r.N;
    if (r.error) {
      row["error"] = *r.error;
      j["rows"].push_back(row);
      continue;
    }
    const AnalysisReport& a = *r.analysis;
    row["B_size"] = r.B_size;
    row["E_size"] = r.E_size;
    row["L0"] = r.L0;
    row["L"] = r.L;
    row["joints"] = r.joints;
    row["joints_over_L2"] = OptionalRatio(r.joints_over_L2);
    row["joints_over_L18"] = OptionalRatio(r.joints_over_L18);
    row["planes_pruned"] = a.planes_pruned;
    row["E1"] = a.E1_size;
    row["E2"] = a.E2_size;
    row["triangles"] = a.triangles;
    row["degenerate"] = a.degenerate_triples;
    row["triple_points"] = r.triple_points;
    row["triangle_free"] = r.triangle_free;
    if (r.warning) row["warning"] = *r.warning;
    row["analysis"] = ToJson(a);
    j["rows"].push_back(row);
  }
  return j;
}

}  // namespace joints
