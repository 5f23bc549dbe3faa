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

#include "joints/matroid.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>
#include <utility>

namespace joints {

Subset Canonical(Subset s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

Subset Union(const Subset& a, const Subset& b) {
  Subset out;
  out.reserve(a.size() + b.size());
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::back_inserter(out));
  return out;
}

Subset Intersection(const Subset& a, const Subset& b) {
  Subset out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

Subset Difference(const Subset& a, const Subset& b) {
  Subset out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool Includes(const Subset& super, const Subset& sub) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

bool Contains(const Subset& s, Element e) {
  return std::binary_search(s.begin(), s.end(), e);
}

std::string ToString(const Subset& s) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << '}';
  return os.str();
}

GroundSet::GroundSet(std::vector<std::string> labels)
    : labels_(std::move(labels)) {
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) {
      throw DomainError("duplicate ground set label: " + l);
    }
  }
}

GroundSet GroundSet::Indexed(std::size_t m) {
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) labels.push_back(std::to_string(i));
  return GroundSet(std::move(labels));
}

Subset GroundSet::All() const {
  Subset all(labels_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

Matroid::Matroid(GroundSet ground, IndependenceOracle oracle)
    : ground_(std::move(ground)), oracle_(std::move(oracle)) {
  if (!oracle_) throw DomainError("matroid needs an independence oracle");
}

std::size_t Matroid::FullRank() const {
  if (!cached_full_rank_) cached_full_rank_ = Rank(*this, ground_.All());
  return *cached_full_rank_;
}

void Matroid::Validate(const Subset& s) const {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] >= ground_.size()) {
      throw DomainError("element " + std::to_string(s[i]) +
                        " is not in the ground set");
    }
    if (i > 0 && s[i - 1] >= s[i]) {
      throw DomainError("subset is not canonical: " + ToString(s));
    }
  }
}

namespace {

// Inserts e into sorted s, keeping it sorted. e must not be present.
Subset With(Subset s, Element e) {
  s.insert(std::upper_bound(s.begin(), s.end(), e), e);
  return s;
}

// Greedy scan; stops early once `stop_at` elements have been accepted.
Subset GreedyBasis(const Matroid& m, const Subset& x, std::size_t stop_at) {
  Subset current;
  for (Element e : x) {
    if (current.size() >= stop_at) break;
    current.push_back(e);
    if (!m.IsIndependent(current)) current.pop_back();
  }
  return current;
}

}  // namespace

Subset Basis(const Matroid& m, const Subset& x) {
  m.Validate(x);
  return GreedyBasis(m, x, x.size());
}

std::size_t Rank(const Matroid& m, const Subset& x) {
  return Basis(m, x).size();
}

bool RankAtLeast(const Matroid& m, const Subset& x, std::size_t target) {
  m.Validate(x);
  if (target == 0) return true;
  return GreedyBasis(m, x, target).size() >= target;
}

// In a matroid rank(X + e) = rank(X) iff basis(X) + e is dependent, so only
// the basis is carried into each membership test.
Subset Closure(const Matroid& m, const Subset& x) {
  const Subset basis = Basis(m, x);
  Subset out;
  for (Element e = 0; e < m.size(); ++e) {
    if (Contains(x, e) || Contains(basis, e)) {
      out.push_back(e);
      continue;
    }
    if (!m.IsIndependent(With(basis, e))) out.push_back(e);
  }
  return out;
}

bool IsFlat(const Matroid& m, const Subset& x) { return Closure(m, x) == x; }

Flat MakeFlat(const Matroid& m, const Subset& x) {
  Subset members = Closure(m, x);
  std::size_t r = Rank(m, members);
  return Flat{std::move(members), r};
}

std::vector<Flat> FlatsOfRank(const Matroid& m, std::size_t k,
                              bool allow_high_rank) {
  if (k == 0) throw DomainError("flats_of_rank needs k >= 1");
  if (k > kMaxEnumeratedFlatRank && !allow_high_rank) {
    throw DomainError("flats_of_rank: k > 3 requires allow_high_rank");
  }
  const std::size_t n = m.size();
  std::vector<Flat> found;
  std::set<Subset> seen;
  // indices of found flats containing each element
  std::vector<std::vector<std::size_t>> flats_with(n);
  if (k > n) return found;

  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  Subset s(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) s[i] = idx[i];
    bool covered = false;
    for (std::size_t f : flats_with[s[0]]) {
      if (Includes(found[f].members, s)) {
        covered = true;
        break;
      }
    }
    if (!covered && m.IsIndependent(s)) {
      Subset members = Closure(m, s);
      if (seen.insert(members).second) {
        for (Element e : members) flats_with[e].push_back(found.size());
        found.push_back(Flat{std::move(members), k});
      }
    }
    // next combination
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  std::sort(found.begin(), found.end());
  return found;
}

void ValidateLines(const Matroid& m, std::span<const Flat> lines) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const Flat& l = lines[i];
    m.Validate(l.members);
    if (l.rank != 2 || Rank(m, l.members) != 2 || !IsFlat(m, l.members)) {
      throw DomainError("entry " + std::to_string(i) +
                        " is not a rank-2 flat: " + ToString(l.members));
    }
  }
}

bool Coplanar(const Matroid& m, std::span<const Flat> lines) {
  ValidateLines(m, lines);
  Subset all;
  for (const Flat& l : lines) all = Union(all, l.members);
  return !RankAtLeast(m, all, 4);
}

namespace {

std::vector<std::size_t> LinesThrough(std::span<const Flat> lines, Element x) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (Contains(lines[i].members, x)) out.push_back(i);
  }
  return out;
}

// Looks for `n` of the candidate lines whose union has rank >= n + 1.
std::optional<std::vector<std::size_t>> FindSpanningChoice(
    const Matroid& m, std::span<const Flat> lines,
    const std::vector<std::size_t>& candidates, std::size_t n) {
  if (candidates.size() < n) return std::nullopt;
  std::vector<std::size_t> pick(n);
  for (std::size_t i = 0; i < n; ++i) pick[i] = i;
  const std::size_t c = candidates.size();
  while (true) {
    Subset all;
    for (std::size_t p : pick) all = Union(all, lines[candidates[p]].members);
    if (RankAtLeast(m, all, n + 1)) {
      std::vector<std::size_t> chosen;
      for (std::size_t p : pick) chosen.push_back(candidates[p]);
      return chosen;
    }
    std::size_t i = n;
    while (i > 0 && pick[i - 1] == c - n + (i - 1)) --i;
    if (i == 0) return std::nullopt;
    ++pick[i - 1];
    for (std::size_t j = i; j < n; ++j) pick[j] = pick[j - 1] + 1;
  }
}

void CheckElement(const Matroid& m, Element x) {
  if (x >= m.size()) {
    throw DomainError("element " + std::to_string(x) +
                      " is not in the ground set");
  }
}

}  // namespace

std::optional<std::vector<std::size_t>> JointWitness(
    const Matroid& m, Element x, std::span<const Flat> lines) {
  CheckElement(m, x);
  ValidateLines(m, lines);
  return FindSpanningChoice(m, lines, LinesThrough(lines, x), 3);
}

bool IsJoint(const Matroid& m, Element x, std::span<const Flat> lines) {
  return JointWitness(m, x, lines).has_value();
}

bool IsNJoint(const Matroid& m, Element x, std::span<const Flat> lines,
              std::size_t n) {
  if (n < 2) throw DomainError("is_n_joint needs n >= 2");
  CheckElement(m, x);
  ValidateLines(m, lines);
  return FindSpanningChoice(m, lines, LinesThrough(lines, x), n).has_value();
}

std::size_t CountJoints(const Matroid& m, std::span<const Flat> lines) {
  ValidateLines(m, lines);
  std::vector<std::vector<std::size_t>> through(m.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (Element e : lines[i].members) through[e].push_back(i);
  }
  std::size_t joints = 0;
  for (Element x = 0; x < m.size(); ++x) {
    if (through[x].size() < 3) continue;
    if (FindSpanningChoice(m, lines, through[x], 3)) ++joints;
  }
  return joints;
}

}  // namespace joints
