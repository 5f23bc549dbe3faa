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

#include "joints/construction.h"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace joints {

GridFamily MakeGridLines(std::uint64_t N) {
  if (N == 0) throw DomainError("grid_lines needs N >= 1");
  GridFamily g;
  g.N = N;
  const auto n = static_cast<std::int64_t>(N);
  for (std::int64_t b = 1; b <= n; ++b) g.lines.push_back(IntLine::Horizontal(b));
  for (std::int64_t a = 1; a <= n; ++a) g.lines.push_back(IntLine::Vertical(a));
  for (std::int64_t c = -n; c <= n; ++c) g.lines.push_back(IntLine::Diagonal(c));
  return g;
}

std::vector<IntPoint> BehrendPoints(std::uint64_t N,
                                    std::span<const std::uint64_t> B) {
  const std::unordered_set<std::uint64_t> sums(B.begin(), B.end());
  std::vector<IntPoint> out;
  const auto n = static_cast<std::int64_t>(N);
  for (std::int64_t a = 1; a <= n; ++a) {
    for (std::int64_t b = 1; b <= n; ++b) {
      if (sums.count(static_cast<std::uint64_t>(a + b))) out.push_back({a, b});
    }
  }
  return out;
}

TriangleFreeMatroid::TriangleFreeMatroid(Configuration cfg)
    : config_(std::move(cfg)) {
  for (std::size_t p = 0; p < config_.points().size(); ++p) {
    const auto& ls = config_.LinesThrough(p);
    for (std::size_t i = 0; i < ls.size(); ++i) {
      for (std::size_t j = i + 1; j < ls.size(); ++j) {
        angles_.emplace(std::make_pair(ls[i], ls[j]), p);
      }
    }
  }
}

TriangleFreeMatroid TriangleFreeMatroid::Create(Configuration cfg,
                                                GateOptions gate) {
  for (std::size_t l = 0; l < cfg.lines().size(); ++l) {
    if (cfg.PointsOn(l).size() < 2) {
      throw DomainError("line " + cfg.lines()[l].ToString() +
                        " holds fewer than two points");
    }
  }
  std::vector<Triangle> found;
  switch (gate.gate) {
    case TriangleGate::kExhaustive:
      found = FindTriangles(cfg, 1);
      break;
    case TriangleGate::kSampled: {
      const std::size_t n = cfg.points().size();
      if (n == 0) break;
      std::mt19937_64 rng(gate.seed);
      std::uniform_int_distribution<std::size_t> pick(0, n - 1);
      for (std::uint64_t i = 0; i < gate.samples && found.empty(); ++i) {
        const std::size_t p = pick(rng);
        found = FindTrianglesFrom(cfg, p, p + 1, 1);
      }
      break;
    }
    case TriangleGate::kNone:
      break;
  }
  if (!found.empty()) {
    const auto& t = found.front();
    throw VerificationError(
        "configuration has a triangle at points " +
        std::to_string(t.points[0]) + "," + std::to_string(t.points[1]) + "," +
        std::to_string(t.points[2]));
  }
  return TriangleFreeMatroid(std::move(cfg));
}

bool TriangleFreeMatroid::OnLine(std::size_t line, std::size_t point) const {
  const auto& ls = config_.LinesThrough(point);
  return std::binary_search(ls.begin(), ls.end(), line);
}

std::optional<std::size_t> TriangleFreeMatroid::AngleWitness(
    std::size_t l1, std::size_t l2) const {
  if (l1 > l2) std::swap(l1, l2);
  auto it = angles_.find({l1, l2});
  if (it == angles_.end()) return std::nullopt;
  return it->second;
}

bool TriangleFreeMatroid::HasCollinearTriple(
    std::span<const Element> x) const {
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const auto l = config_.LineJoining(x[i], x[j]);
      if (!l) continue;
      for (std::size_t k = j + 1; k < x.size(); ++k) {
        if (OnLine(*l, x[k])) return true;
      }
    }
  }
  return false;
}

bool TriangleFreeMatroid::CoveredByAngle(std::span<const Element> x) const {
  // One of the two lines holds at least two points of x.
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const auto l = config_.LineJoining(x[i], x[j]);
      if (!l) continue;
      std::vector<Element> rest;
      for (Element e : x) {
        if (!OnLine(*l, e)) rest.push_back(e);
      }
      if (rest.empty()) {
        for (const auto& [key, point] : angles_) {
          if (key.first == *l || key.second == *l) return true;
        }
        continue;
      }
      std::vector<std::size_t> candidates;
      if (rest.size() == 1) {
        candidates = config_.LinesThrough(rest[0]);
      } else if (auto other = config_.LineJoining(rest[0], rest[1])) {
        candidates.push_back(*other);
      }
      for (std::size_t other : candidates) {
        if (other == *l) continue;
        bool holds_rest = std::all_of(rest.begin(), rest.end(),
                                      [&](Element e) { return OnLine(other, e); });
        if (holds_rest && AngleWitness(*l, other)) return true;
      }
    }
  }
  return false;
}

bool TriangleFreeMatroid::IsIndependent(std::span<const Element> x) const {
  for (Element e : x) {
    if (e >= size()) {
      throw DomainError("unknown point index " + std::to_string(e));
    }
  }
  switch (x.size()) {
    case 0:
    case 1:
    case 2:
      return true;
    case 3:
      return !HasCollinearTriple(x);
    case 4:
      return !HasCollinearTriple(x) && !CoveredByAngle(x);
    default:
      return false;
  }
}

Matroid AsMatroid(std::shared_ptr<const TriangleFreeMatroid> tf) {
  std::vector<std::string> labels;
  labels.reserve(tf->size());
  for (const auto& p : tf->config().points()) {
    labels.push_back("(" + std::to_string(p.a) + "," + std::to_string(p.b) +
                     ")");
  }
  return Matroid(GroundSet(std::move(labels)),
                 [tf = std::move(tf)](std::span<const Element> x) {
                   return tf->IsIndependent(x);
                 });
}

std::vector<Flat> MatroidLines(const Matroid& m, const Configuration& cfg) {
  std::vector<Flat> out;
  out.reserve(cfg.lines().size());
  for (std::size_t l = 0; l < cfg.lines().size(); ++l) {
    const auto& pts = cfg.PointsOn(l);
    if (pts.size() < 2) {
      throw DomainError("line " + cfg.lines()[l].ToString() +
                        " holds fewer than two points");
    }
    out.push_back(MakeFlat(m, Subset{pts[0], pts[1]}));
  }
  return out;
}

Construction BuildFromConfiguration(std::uint64_t N,
                                    std::vector<std::uint64_t> B,
                                    Configuration pruned,
                                    const ConstructionOptions& options) {
  Construction c;
  c.N = N;
  c.B = std::move(B);
  c.grid = MakeGridLines(N);
  c.unpruned = Configuration(pruned.points(), c.grid.lines);

  GateOptions gate;
  c.triangle_check_exhaustive =
      options.force_exhaustive_triangle_check || N <= options.exhaustive_limit_N;
  gate.gate = c.triangle_check_exhaustive ? TriangleGate::kExhaustive
                                          : TriangleGate::kSampled;
  gate.samples = options.triangle_samples;
  gate.seed = options.seed;
  c.tf = std::make_shared<const TriangleFreeMatroid>(
      TriangleFreeMatroid::Create(std::move(pruned), gate));
  c.matroid = std::make_shared<const Matroid>(AsMatroid(c.tf));
  c.lines = MatroidLines(*c.matroid, c.tf->config());
  if (c.tf->config().lines().empty()) {
    c.degenerate = true;
    c.warnings.push_back("degenerate configuration: no line holds two points");
  }
  if (!c.triangle_check_exhaustive) {
    c.warnings.push_back("triangle check sampled, not exhaustive");
  }
  return c;
}

Construction BuildConstruction(std::uint64_t N,
                               const ConstructionOptions& options) {
  if (N < 4) throw DomainError("build_construction needs N >= 4");
  BehrendSet b = MakeBehrendSet(N);
  Configuration full(BehrendPoints(N, b.members), MakeGridLines(N).lines);
  return BuildFromConfiguration(N, std::move(b.members), PruneLines(full),
                                options);
}

CheckStatus PropertiesReport::overall() const {
  bool inconclusive = false;
  for (const auto* c : {&line_closure, &joint_span, &rank_at_most_4}) {
    if (c->status == CheckStatus::kFail) return CheckStatus::kFail;
    if (c->status == CheckStatus::kInconclusive) inconclusive = true;
  }
  return inconclusive ? CheckStatus::kInconclusive : CheckStatus::kPass;
}

PropertiesReport VerifyConstructionProperties(const TriangleFreeMatroid& tf,
                                              const Matroid& m,
                                              std::uint64_t budget) {
  PropertiesReport r;
  r.line_closure.name = "line_closure_is_configuration_line";
  r.joint_span.name = "triple_point_lines_span_rank_4";
  r.rank_at_most_4.name = "rank_at_most_4";
  const Configuration& cfg = tf.config();
  std::uint64_t spent = 0;
  bool exhausted = false;
  auto spend = [&]() {
    if (spent >= budget) {
      exhausted = true;
      return false;
    }
    ++spent;
    return true;
  };

  r.lines_total = cfg.lines().size();
  for (std::size_t l = 0; l < cfg.lines().size() && !exhausted; ++l) {
    const Subset on_line = cfg.PointsOn(l);
    bool complete = true;
    for (std::size_t i = 0; i < on_line.size() && complete; ++i) {
      for (std::size_t j = i + 1; j < on_line.size(); ++j) {
        if (!spend()) {
          complete = false;
          break;
        }
        ++r.line_closure.checked;
        const Subset pair{on_line[i], on_line[j]};
        const Subset cl = Closure(m, pair);
        if (cl != on_line || Rank(m, cl) != 2) {
          r.line_closure.Violate({pair, cl, "closure differs from l n E"});
        }
      }
    }
    if (complete) ++r.lines_covered;
  }

  const auto triples = TriplePoints(cfg);
  r.triple_points_total = triples.size();
  for (std::size_t x : triples) {
    if (exhausted) break;
    const auto& ls = cfg.LinesThrough(x);
    bool complete = true;
    for (std::size_t a = 0; a < ls.size() && complete; ++a) {
      for (std::size_t b = a + 1; b < ls.size() && complete; ++b) {
        for (std::size_t c = b + 1; c < ls.size(); ++c) {
          if (!spend()) {
            complete = false;
            break;
          }
          ++r.joint_span.checked;
          Subset probe{x};
          Subset all;
          for (std::size_t l : {ls[a], ls[b], ls[c]}) {
            const auto& pts = cfg.PointsOn(l);
            probe.push_back(pts[0] == x ? pts[1] : pts[0]);
            all = Union(all, Subset(pts.begin(), pts.end()));
          }
          probe = Canonical(std::move(probe));
          if (probe.size() != 4 || !m.IsIndependent(probe)) {
            r.joint_span.Violate({probe, Subset{x}, "{x,a1,a2,a3} dependent"});
          } else if (Rank(m, all) != 4) {
            r.joint_span.Violate({all, Subset{x}, "three lines span rank != 4"});
          }
        }
      }
    }
    if (complete) ++r.triple_points_covered;
  }

  if (spend()) {
    r.rank_at_most_4.checked = 1;
    const std::size_t full = Rank(m, m.ground().All());
    if (full > 4) {
      r.rank_at_most_4.Violate({m.ground().All(), {}, "full rank exceeds 4"});
    }
  }

  if (exhausted) {
    for (auto* c : {&r.line_closure, &r.joint_span, &r.rank_at_most_4}) {
      if (c->status == CheckStatus::kPass) {
        c->status = CheckStatus::kInconclusive;
        c->detail = "budget exhausted";
      }
    }
  }
  return r;
}

}  // namespace joints
