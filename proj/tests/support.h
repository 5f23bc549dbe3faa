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

// Generators and brute-force oracles shared by the tests. Nothing here calls
// into the library's rank or closure code.

#ifndef JOINTS_TESTS_SUPPORT_H_
#define JOINTS_TESTS_SUPPORT_H_

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "joints/affine.h"
#include "joints/matroid.h"

namespace joints::testing {

inline Subset RandomSubset(std::mt19937_64& rng, std::size_t m, double p) {
  std::bernoulli_distribution keep(p);
  Subset s;
  for (Element e = 0; e < m; ++e) {
    if (keep(rng)) s.push_back(e);
  }
  return s;
}

inline Subset Members(std::uint64_t mask) {
  Subset s;
  for (Element e = 0; mask; ++e, mask >>= 1) {
    if (mask & 1) s.push_back(e);
  }
  return s;
}

// Largest independent subset of x by trying every subset (|x| <= 20).
inline std::size_t BruteRank(const Matroid& m, const Subset& x) {
  std::size_t best = 0;
  const std::uint64_t n = x.size();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    const auto bits = static_cast<std::size_t>(std::popcount(mask));
    if (bits <= best) continue;
    Subset s;
    for (std::uint64_t i = 0; i < n; ++i) {
      if (mask >> i & 1) s.push_back(x[i]);
    }
    if (m.IsIndependent(s)) best = bits;
  }
  return best;
}

// {e : rank(x + e) = rank(x)} via BruteRank.
inline Subset BruteClosure(const Matroid& m, const Subset& x) {
  const std::size_t r = BruteRank(m, x);
  Subset out;
  for (Element e = 0; e < m.size(); ++e) {
    Subset y = x;
    if (!std::binary_search(y.begin(), y.end(), e)) {
      y.insert(std::upper_bound(y.begin(), y.end(), e), e);
    }
    if (BruteRank(m, y) == r) out.push_back(e);
  }
  return out;
}

// Rank of a rational matrix by plain Gaussian elimination over mpq_class.
inline std::size_t RationalRank(std::vector<std::vector<mpq_class>> rows) {
  std::size_t rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Affine independence from the definition: rank of (p_i - p_0) is k - 1.
inline bool OracleAffineIndependent(const std::vector<RationalPoint>& pts) {
  if (pts.size() <= 1) return true;
  std::vector<std::vector<mpq_class>> rows;
  for (std::size_t i = 1; i < pts.size(); ++i) {
    std::vector<mpq_class> row;
    for (std::size_t c = 0; c < pts[i].dim(); ++c) {
      row.push_back(pts[i].coords()[c] - pts[0].coords()[c]);
    }
    rows.push_back(row);
  }
  return RationalRank(rows) == pts.size() - 1;
}

// Distinct integer points of dimension d with coordinates in [lo, hi].
inline std::vector<RationalPoint> RandomLatticePoints(std::mt19937_64& rng,
                                                      std::size_t count,
                                                      std::size_t d,
                                                      std::int64_t lo,
                                                      std::int64_t hi) {
  std::uniform_int_distribution<std::int64_t> coord(lo, hi);
  std::set<std::vector<std::int64_t>> seen;
  std::vector<RationalPoint> out;
  while (out.size() < count) {
    std::vector<std::int64_t> c(d);
    for (auto& v : c) v = coord(rng);
    if (seen.insert(c).second) out.push_back(RationalPoint::FromIntegers(c));
  }
  return out;
}

}  // namespace joints::testing

#endif  // JOINTS_TESTS_SUPPORT_H_
