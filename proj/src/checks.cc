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

#include "joints/checks.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <unordered_set>
#include <utility>

namespace joints {

std::string ToString(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kInconclusive:
      return "inconclusive";
  }
  return "unknown";
}

void CheckResult::Violate(Counterexample c) {
  ++violations;
  status = CheckStatus::kFail;
  if (!counterexample) counterexample = std::move(c);
}

CheckStatus AxiomsReport::overall() const {
  bool inconclusive = false;
  for (const auto& a : axioms) {
    if (a.status == CheckStatus::kFail) return CheckStatus::kFail;
    if (a.status == CheckStatus::kInconclusive) inconclusive = true;
  }
  return inconclusive ? CheckStatus::kInconclusive : CheckStatus::kPass;
}

namespace {

using Mask = std::uint64_t;

Subset FromMask(Mask mask) {
  Subset s;
  while (mask) {
    s.push_back(static_cast<Element>(std::countr_zero(mask)));
    mask &= mask - 1;
  }
  return s;
}

// Levels of independent sets, each sorted lexicographically by member list.
struct Enumeration {
  std::vector<std::vector<Mask>> levels;
  std::unordered_set<Mask> independent;
  bool complete = true;
};

inline constexpr std::size_t kFullEnumerationLimit = 16;

bool LexLess(Mask a, Mask b) { return FromMask(a) < FromMask(b); }

void SortLevel(std::vector<Mask>& level) {
  std::sort(level.begin(), level.end(), LexLess);
}

// Small ground sets are enumerated completely; larger ones are reached by
// one-element extensions of the previous level.
Enumeration EnumerateIndependent(const Matroid& m, std::uint64_t& spent,
                                 std::uint64_t budget) {
  Enumeration out;
  const std::size_t n = m.size();
  if (n <= kFullEnumerationLimit) {
    const Mask total = Mask{1} << n;
    out.levels.resize(n + 1);
    for (Mask mask = 0; mask < total; ++mask) {
      if (++spent > budget) {
        out.complete = false;
        return out;
      }
      Subset s = FromMask(mask);
      if (m.IsIndependent(s)) {
        out.levels[s.size()].push_back(mask);
        out.independent.insert(mask);
      }
    }
    while (!out.levels.empty() && out.levels.back().empty()) {
      out.levels.pop_back();
    }
    for (auto& level : out.levels) SortLevel(level);
    return out;
  }

  std::vector<Mask> current;
  if (m.IsIndependent(Subset{})) {
    current.push_back(0);
    out.independent.insert(0);
  }
  ++spent;
  out.levels.push_back(current);
  while (!current.empty()) {
    std::unordered_set<Mask> next_set;
    for (Mask base : current) {
      for (std::size_t e = 0; e < n; ++e) {
        const Mask ext = base | (Mask{1} << e);
        if (ext == base || next_set.count(ext)) continue;
        if (++spent > budget) {
          out.complete = false;
          return out;
        }
        if (m.IsIndependent(FromMask(ext))) next_set.insert(ext);
      }
    }
    current.assign(next_set.begin(), next_set.end());
    SortLevel(current);
    for (Mask x : current) out.independent.insert(x);
    if (!current.empty()) out.levels.push_back(current);
  }
  return out;
}

AxiomsReport CheckAxiomsExhaustive(const Matroid& m, std::uint64_t budget) {
  AxiomsReport report;
  report.mode = CheckMode::kExhaustive;
  auto& [a1, a2, a3] = report.axioms;
  a1.name = "axiom1_empty_independent";
  a2.name = "axiom2_downward_closed";
  a3.name = "axiom3_exchange";

  a1.checked = 1;
  if (!m.IsIndependent(Subset{})) {
    a1.Violate({{}, {}, "the empty set is dependent"});
  }

  if (m.size() > 64) {
    for (auto* a : {&a2, &a3}) {
      a->status = CheckStatus::kInconclusive;
      a->detail = "exhaustive mode supports at most 64 elements";
    }
    return report;
  }

  std::uint64_t spent = 0;
  Enumeration en = EnumerateIndependent(m, spent, budget);
  report.independent_sets = en.independent.size();
  if (!en.complete) {
    for (auto* a : {&a2, &a3}) {
      a->status = CheckStatus::kInconclusive;
      a->detail = "budget exhausted while enumerating independent sets";
    }
    return report;
  }

  for (const auto& level : en.levels) {
    for (Mask x : level) {
      // Deleting larger elements first yields lex-smaller subsets.
      const Subset members = FromMask(x);
      for (auto it = members.rbegin(); it != members.rend(); ++it) {
        const Mask sub = x & ~(Mask{1} << *it);
        ++a2.checked;
        bool ok = en.independent.count(sub) > 0;
        if (!ok && m.size() > kFullEnumerationLimit) {
          ok = m.IsIndependent(FromMask(sub));
        }
        if (!ok) {
          a2.Violate({FromMask(sub), members,
                      "dependent subset of an independent set"});
        }
      }
    }
  }

  for (std::size_t s1 = 0; s1 < en.levels.size(); ++s1) {
    for (Mask x1 : en.levels[s1]) {
      for (std::size_t s2 = s1 + 1; s2 < en.levels.size(); ++s2) {
        for (Mask x2 : en.levels[s2]) {
          if (++spent > budget) {
            a3.status = CheckStatus::kInconclusive;
            a3.detail = "budget exhausted during exchange pairs";
            return report;
          }
          ++a3.checked;
          Mask candidates = x2 & ~x1;
          bool found = false;
          while (candidates && !found) {
            const Mask bit = candidates & (~candidates + 1);
            found = en.independent.count(x1 | bit) > 0;
            candidates &= candidates - 1;
          }
          if (!found) {
            a3.Violate({FromMask(x1), FromMask(x2),
                        "no element of X2 \\ X1 extends X1"});
          }
        }
      }
    }
  }
  return report;
}

Subset RandomSubset(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  Subset s;
  for (Element e = 0; e < n; ++e) {
    if (coin(rng)) s.push_back(e);
  }
  return s;
}

// Random independent set grown greedily over a shuffled ground set.
Subset RandomIndependent(const Matroid& m, std::mt19937_64& rng,
                         std::size_t target) {
  std::vector<Element> order(m.size());
  std::iota(order.begin(), order.end(), Element{0});
  std::shuffle(order.begin(), order.end(), rng);
  Subset current;
  for (Element e : order) {
    if (current.size() >= target) break;
    Subset trial = current;
    trial.insert(std::upper_bound(trial.begin(), trial.end(), e), e);
    if (m.IsIndependent(trial)) current = std::move(trial);
  }
  return current;
}

AxiomsReport CheckAxiomsSampled(const Matroid& m, std::uint64_t samples,
                                std::uint64_t seed) {
  AxiomsReport report;
  report.mode = CheckMode::kSampled;
  auto& [a1, a2, a3] = report.axioms;
  a1.name = "axiom1_empty_independent";
  a2.name = "axiom2_downward_closed";
  a3.name = "axiom3_exchange";
  a1.checked = 1;
  if (!m.IsIndependent(Subset{})) {
    a1.Violate({{}, {}, "the empty set is dependent"});
  }
  if (m.size() == 0) return report;

  std::mt19937_64 rng(seed);
  const std::size_t full = m.FullRank();
  std::uniform_real_distribution<double> density(0.05, 0.6);
  for (std::uint64_t i = 0; i < samples; ++i) {
    // Axiom 2 on random subsets of a random set that the oracle accepts.
    Subset x = RandomSubset(rng, m.size(), density(rng));
    if (x.size() > full + 1) x.resize(full + 1);
    if (!x.empty() && m.IsIndependent(x)) {
      for (std::size_t skip = 0; skip < x.size(); ++skip) {
        Subset sub = x;
        sub.erase(sub.begin() + static_cast<std::ptrdiff_t>(skip));
        ++a2.checked;
        if (!m.IsIndependent(sub)) {
          a2.Violate({sub, x, "dependent subset of an independent set"});
        }
      }
    }
    // Axiom 3 on two greedily grown independent sets of different sizes.
    std::uniform_int_distribution<std::size_t> size_pick(0, full);
    std::size_t s1 = size_pick(rng);
    std::size_t s2 = size_pick(rng);
    if (s1 == s2) continue;
    if (s1 > s2) std::swap(s1, s2);
    Subset x1 = RandomIndependent(m, rng, s1);
    Subset x2 = RandomIndependent(m, rng, s2);
    if (x1.size() >= x2.size()) continue;
    ++a3.checked;
    bool found = false;
    for (Element e : Difference(x2, x1)) {
      Subset trial = x1;
      trial.insert(std::upper_bound(trial.begin(), trial.end(), e), e);
      if (m.IsIndependent(trial)) {
        found = true;
        break;
      }
    }
    if (!found) {
      a3.Violate({x1, x2, "no element of X2 \\ X1 extends X1"});
    }
  }
  a2.detail = a3.detail = "sampled";
  return report;
}

}  // namespace

AxiomsReport CheckAxioms(const Matroid& m, CheckMode mode,
                         std::uint64_t budget, std::uint64_t seed) {
  if (mode == CheckMode::kExhaustive) return CheckAxiomsExhaustive(m, budget);
  return CheckAxiomsSampled(m, budget, seed);
}

CheckResult CheckSubmodularity(const Matroid& m, std::uint64_t pairs,
                               std::uint64_t seed) {
  CheckResult r;
  r.name = "submodularity";
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> density(0.02, 0.5);
  for (std::uint64_t i = 0; i < pairs; ++i) {
    Subset x = RandomSubset(rng, m.size(), density(rng));
    Subset y = RandomSubset(rng, m.size(), density(rng));
    ++r.checked;
    const std::size_t lhs =
        Rank(m, Union(x, y)) + Rank(m, Intersection(x, y));
    const std::size_t rhs = Rank(m, x) + Rank(m, y);
    if (lhs > rhs) {
      r.Violate({x, y, "rank(X u Y) + rank(X n Y) > rank(X) + rank(Y)"});
    }
  }
  return r;
}

namespace {

// A small random subset: most interesting closures come from few elements.
Subset SmallRandomSubset(std::mt19937_64& rng, std::size_t n,
                         std::size_t max_size) {
  if (n == 0) return {};
  std::uniform_int_distribution<std::size_t> count(0, max_size);
  std::uniform_int_distribution<Element> pick(0, n - 1);
  Subset s;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) s.push_back(pick(rng));
  return Canonical(std::move(s));
}

Subset RandomSubsetOf(std::mt19937_64& rng, const Subset& pool, double p) {
  std::bernoulli_distribution coin(p);
  Subset s;
  for (Element e : pool) {
    if (coin(rng)) s.push_back(e);
  }
  return s;
}

}  // namespace

CheckResult CheckClosureLaws(const Matroid& m, std::uint64_t samples,
                             std::uint64_t seed) {
  CheckResult r;
  r.name = "closure_laws";
  std::mt19937_64 rng(seed);
  const std::size_t small = std::min<std::size_t>(5, m.size());
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Subset x = SmallRandomSubset(rng, m.size(), small);
    const Subset cl = Closure(m, x);
    const std::size_t rx = Rank(m, x);
    ++r.checked;
    if (!Includes(cl, x)) r.Violate({x, cl, "X not inside Cl(X)"});
    if (Rank(m, cl) != rx) r.Violate({x, cl, "rank(Cl X) != rank X"});
    if (Closure(m, cl) != cl) r.Violate({x, cl, "Cl(Cl X) != Cl X"});

    // Monotonicity against a random superset.
    const Subset y = Union(x, SmallRandomSubset(rng, m.size(), small));
    const Subset cly = Closure(m, y);
    if (!Includes(cly, cl)) r.Violate({x, y, "X <= Y but Cl X not <= Cl Y"});
    if (Rank(m, y) == rx && !Includes(cl, y)) {
      r.Violate({x, y, "rank Y = rank X but Y not <= Cl X"});
    }

    // Supersets of X drawn from Cl(X) keep its rank and so does their union.
    const Subset y1 = Union(x, RandomSubsetOf(rng, cl, 0.5));
    const Subset y2 = Union(x, RandomSubsetOf(rng, cl, 0.5));
    if (Rank(m, y1) != rx || Rank(m, y2) != rx) {
      r.Violate({x, Union(y1, y2), "subset of Cl(X) changed the rank"});
    } else if (Rank(m, Union(y1, y2)) != rx) {
      r.Violate({y1, y2, "rank(Y1 u Y2) != rank X"});
    }
  }
  return r;
}

CheckResult CheckFlatIntersection(const Matroid& m, std::uint64_t samples,
                                  std::uint64_t seed) {
  CheckResult r;
  r.name = "flat_intersection";
  std::mt19937_64 rng(seed);
  const std::size_t small = std::min<std::size_t>(4, m.size());
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Subset f1 = Closure(m, SmallRandomSubset(rng, m.size(), small));
    Subset seed2 = SmallRandomSubset(rng, m.size(), small);
    // Bias half the samples toward overlapping flats.
    if (i % 2 == 0 && !f1.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, f1.size() - 1);
      seed2 = Canonical(Union(seed2, Subset{f1[pick(rng)]}));
    }
    const Subset f2 = Closure(m, seed2);
    const Subset both = Intersection(f1, f2);
    ++r.checked;
    if (!IsFlat(m, both)) r.Violate({f1, f2, "F1 n F2 is not a flat"});
    if (Includes(f2, f1) && f1 != f2 && Rank(m, f1) == Rank(m, f2)) {
      r.Violate({f1, f2, "nested distinct flats of equal rank"});
    }
  }
  return r;
}

std::optional<Subset> FindNonSimpleWitness(const Matroid& m) {
  for (Element a = 0; a < m.size(); ++a) {
    if (!m.IsIndependent(Subset{a})) return Subset{a};
  }
  for (Element a = 0; a < m.size(); ++a) {
    for (Element b = a + 1; b < m.size(); ++b) {
      if (!m.IsIndependent(Subset{a, b})) return Subset{a, b};
    }
  }
  return std::nullopt;
}

bool IncidenceReport::passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const CheckResult& c) { return c.passed(); });
}

namespace {

class IncidenceChecker {
 public:
  IncidenceChecker(const Matroid& m, IncidenceReport& report)
      : m_(m), r_(report) {}

  // (1): the closure of {a,b} is a line, and any two of its points span it.
  void LineThrough(Element a, Element b, std::size_t max_others) {
    auto& c = r_.properties[0];
    ++c.checked;
    const Subset pair{a, b};
    const Subset line = Closure(m_, pair);
    if (Rank(m_, line) != 2) {
      c.Violate({pair, line, "closure of two points is not rank 2"});
      return;
    }
    std::size_t seen = 0;
    for (Element o : Difference(line, pair)) {
      if (seen++ >= max_others) break;
      if (Closure(m_, Canonical({a, o})) != line ||
          Closure(m_, Canonical({b, o})) != line) {
        c.Violate({pair, Subset{o}, "two lines through the same two points"});
      }
    }
  }

  // (2): non-collinear triples span a unique plane.
  void PlaneThrough(const Subset& triple, std::size_t max_others) {
    if (Rank(m_, triple) != 3) return;
    auto& c = r_.properties[1];
    ++c.checked;
    const Subset plane = Closure(m_, triple);
    if (Rank(m_, plane) != 3) {
      c.Violate({triple, plane, "closure of a triple is not rank 3"});
      return;
    }
    std::size_t seen = 0;
    for (Element o : Difference(plane, triple)) {
      if (seen >= max_others) break;
      const Subset alt = Canonical({triple[0], triple[1], o});
      if (Rank(m_, alt) != 3) continue;
      ++seen;
      if (Closure(m_, alt) != plane) {
        c.Violate({triple, alt, "two planes through three points"});
      }
    }
  }

  // (3)
  void LineInPlane(const Subset& line, const Subset& plane) {
    auto& c = r_.properties[2];
    ++c.checked;
    if (Intersection(line, plane).size() >= 2 && !Includes(plane, line)) {
      c.Violate({line, plane, "line meets plane twice but is not inside"});
    }
  }

  // (4) and (5) for two distinct lines.
  void LinePair(const Subset& l1, const Subset& l2) {
    if (l1 == l2) return;
    const Subset common = Intersection(l1, l2);
    auto& c5 = r_.properties[4];
    ++c5.checked;
    if (common.size() > 1) {
      c5.Violate({l1, l2, "distinct lines share two points"});
      return;
    }
    if (common.size() != 1) return;
    auto& c4 = r_.properties[3];
    ++c4.checked;
    const Subset both = Union(l1, l2);
    if (Rank(m_, both) != 3) {
      c4.Violate({l1, l2, "meeting lines do not span rank 3"});
      return;
    }
    const Subset plane = Closure(m_, both);
    const Element x = common[0];
    for (Element y : Difference(l1, common)) {
      for (Element z : Difference(l2, common)) {
        if (Closure(m_, Canonical({x, y, z})) != plane) {
          c4.Violate({l1, l2, "meeting lines lie in two planes"});
          return;
        }
      }
    }
  }

 private:
  const Matroid& m_;
  IncidenceReport& r_;
};

}  // namespace

IncidenceReport CheckIncidenceProperties(const Matroid& m, std::uint64_t seed,
                                         std::uint64_t samples) {
  if (auto witness = FindNonSimpleWitness(m)) {
    throw DomainError("matroid is not simple: dependent subset " +
                      ToString(*witness));
  }
  IncidenceReport report;
  report.properties[0].name = "unique_line_through_two_points";
  report.properties[1].name = "unique_plane_through_three_points";
  report.properties[2].name = "line_meeting_plane_twice_lies_in_it";
  report.properties[3].name = "meeting_lines_span_unique_plane";
  report.properties[4].name = "lines_share_at_most_one_point";
  IncidenceChecker check(m, report);
  const std::size_t n = m.size();

  if (n <= kExhaustiveIncidenceLimit) {
    report.exhaustive = true;
    for (Element a = 0; a < n; ++a) {
      for (Element b = a + 1; b < n; ++b) {
        check.LineThrough(a, b, n);
        for (Element c = b + 1; c < n; ++c) check.PlaneThrough({a, b, c}, n);
      }
    }
    const auto lines = FlatsOfRank(m, 2);
    const auto planes = n >= 3 ? FlatsOfRank(m, 3) : std::vector<Flat>{};
    for (const auto& l : lines) {
      for (const auto& h : planes) check.LineInPlane(l.members, h.members);
    }
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        check.LinePair(lines[i].members, lines[j].members);
      }
    }
    return report;
  }

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Element> pick(0, n - 1);
  auto distinct = [&](std::size_t k) {
    Subset s;
    while (s.size() < k) s = Canonical(Union(s, Subset{pick(rng)}));
    return s;
  };
  constexpr std::size_t kOthers = 8;
  for (std::uint64_t i = 0; i < samples; ++i) {
    const Subset p = distinct(2);
    check.LineThrough(p[0], p[1], kOthers);
    check.PlaneThrough(distinct(3), kOthers);

    const Subset line = Closure(m, distinct(2));
    Subset triple = distinct(3);
    // Anchor half the planes on the sampled line so property (3) is not vacuous.
    if (i % 2 == 0 && line.size() >= 2) {
      triple = Canonical({line[0], line[1], pick(rng)});
    }
    if (triple.size() == 3 && Rank(m, triple) == 3) {
      check.LineInPlane(line, Closure(m, triple));
    }

    // A second line through a point of the first.
    const Element x = line[std::uniform_int_distribution<std::size_t>(
        0, line.size() - 1)(rng)];
    Element y = pick(rng);
    if (y != x) {
      check.LinePair(line, Closure(m, Canonical({x, y})));
    }
  }
  return report;
}

}  // namespace joints
