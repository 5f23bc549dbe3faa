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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <bit>
#include <cmath>
#include <random>
#include <set>

#include "joints/behrend.h"
#include "joints/errors.h"

namespace joints {
namespace {

using Values = std::vector<std::uint64_t>;

// x < y < z with x + z = 2y, by trying every triple.
bool CubicHasAp(const Values& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    for (std::size_t j = 0; j < v.size(); ++j) {
      for (std::size_t k = 0; k < v.size(); ++k) {
        if (v[i] < v[j] && v[j] < v[k] && v[i] + v[k] == 2 * v[j]) return true;
      }
    }
  }
  return false;
}

// Size of the largest 3-AP-free subset of 1..N over all 2^N masks.
std::size_t BruteOptimalSize(std::uint32_t N) {
  std::size_t best = 0;
  for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
    const auto size = static_cast<std::size_t>(std::popcount(mask));
    if (size <= best) continue;
    bool ok = true;
    for (std::uint32_t y = 1; y <= N && ok; ++y) {
      if (!(mask >> (y - 1) & 1)) continue;
      for (std::uint32_t d = 1; y > d && y + d <= N && ok; ++d) {
        if ((mask >> (y - d - 1) & 1) && (mask >> (y + d - 1) & 1)) ok = false;
      }
    }
    if (ok) best = size;
  }
  return best;
}

// Parameters recomputed with floating point from the formulas.
std::pair<std::uint32_t, std::uint32_t> FormulaParams(std::uint64_t N) {
  auto n = static_cast<std::uint32_t>(std::floor(std::sqrt(std::log2(double(N)))));
  n = std::max<std::uint32_t>(n, 1);
  std::uint32_t s = 0;
  while (std::pow(2.0 * (s + 1), n) <= double(N)) ++s;
  return {n, s};
}

TEST_CASE("has_3ap") {
  CHECK(HasThreeTermAp(Values{1, 2, 3}));
  CHECK_FALSE(HasThreeTermAp(Values{1, 2, 4, 8}));
  CHECK_FALSE(HasThreeTermAp(Values{}));
  CHECK_FALSE(HasThreeTermAp(Values{5, 7}));
  CHECK(HasThreeTermAp(Values{9, 1, 5}));
}

TEST_CASE("property: has_3ap agrees with the cubic scan") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 500; ++trial) {
    Values v;
    const std::size_t n = rng() % 9;
    std::set<std::uint64_t> s;
    while (s.size() < n) s.insert(1 + rng() % 40);
    v.assign(s.begin(), s.end());
    std::shuffle(v.begin(), v.end(), rng);
    CHECK(HasThreeTermAp(v) == CubicHasAp(v));
  }
}

TEST_CASE("params") {
  const BehrendParams p16 = MakeBehrendParams(16);
  CHECK(p16.n == 2);
  CHECK(p16.s == 2);
  const BehrendParams big = MakeBehrendParams(std::uint64_t{1} << 25);
  CHECK(big.n == 5);
  CHECK(big.s == 16);
  CHECK_THROWS_AS(MakeBehrendParams(3), DomainError);
  const BehrendParams forced = MakeBehrendParams(1000, 3);
  CHECK(forced.n == 3);
  CHECK(forced.s == 5);
}

TEST_CASE("property: params satisfy their defining inequalities") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 300; ++trial) {
    const std::uint64_t N = 4 + rng() % 5'000'000;
    const BehrendParams p = MakeBehrendParams(N);
    const auto [n, s] = FormulaParams(N);
    CHECK(p.n == n);
    CHECK(p.s == s);
    CHECK(std::pow(2.0 * p.s, p.n) <= double(N));
    CHECK(std::pow(2.0 * (p.s + 1), p.n) > double(N));
    CHECK(p.k >= 1);
    CHECK(p.k <= std::uint64_t{p.n} * (p.s - 1) * (p.s - 1));
    const auto sizes = ShellSizes(p.n, p.s);
    for (std::uint64_t k = 1; k < sizes.size(); ++k) {
      CHECK(sizes[k] <= p.shell_size);
      if (sizes[k] == p.shell_size) {
        CHECK(k >= p.k);
      }
    }
    if (p.n >= 3 && p.s >= 2) {
      CHECK(double(p.shell_size) >= std::pow(double(p.s), p.n - 2) / p.n);
    }
  }
}

TEST_CASE("sphere shells") {
  const auto shells = SphereShells(2, 2);
  REQUIRE(shells.size() == 3);
  CHECK(shells.at(0) == std::vector<Digits>{{0, 0}});
  CHECK(shells.at(1) == std::vector<Digits>{{0, 1}, {1, 0}});
  CHECK(shells.at(2) == std::vector<Digits>{{1, 1}});
  for (const auto& [k, pts] : SphereShells(1, 6)) CHECK(pts.size() == 1);
  CHECK_THROWS_AS(SphereShells(10, 10, 1000), DomainError);
}

TEST_CASE("property: shells partition the digit cube and agree with Shell") {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint32_t s = 1; s <= 6; ++s) {
      const auto shells = SphereShells(n, s);
      const auto sizes = ShellSizes(n, s);
      std::uint64_t total = 0;
      for (const auto& [k, pts] : shells) {
        total += pts.size();
        CHECK(sizes.at(k) == pts.size());
        CHECK(Shell(n, s, k) == pts);
      }
      CHECK(total == static_cast<std::uint64_t>(std::pow(s, n)));
    }
  }
}

TEST_CASE("no three points of a shell are collinear") {
  for (const auto& [k, pts] : SphereShells(3, 5)) {
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        for (std::size_t c = b + 1; c < pts.size(); ++c) {
          // collinear iff (b - a) x (c - a) = 0
          std::int64_t u[3], v[3];
          for (int i = 0; i < 3; ++i) {
            u[i] = std::int64_t(pts[b][i]) - pts[a][i];
            v[i] = std::int64_t(pts[c][i]) - pts[a][i];
          }
          const bool collinear = u[1] * v[2] == u[2] * v[1] &&
                                 u[2] * v[0] == u[0] * v[2] &&
                                 u[0] * v[1] == u[1] * v[0];
          CHECK_FALSE(collinear);
        }
      }
    }
  }
}

TEST_CASE("encoding round trip and carry-free sums") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::uint32_t n = 1 + rng() % 5;
    const std::uint32_t s = 1 + rng() % 9;
    Digits x(n), z(n);
    for (auto& d : x) d = rng() % s;
    for (auto& d : z) d = rng() % s;
    const std::uint64_t r = 2 * s;
    const std::uint64_t ex = EncodeDigits(x, r);
    CHECK(DecodeDigits(ex, n, r) == x);
    // the sum decodes digit by digit
    Digits sum = DecodeDigits(ex + EncodeDigits(z, r), n, r);
    for (std::uint32_t i = 0; i < n; ++i) CHECK(sum[i] == x[i] + z[i]);
  }
  CHECK(EncodeDigits({1, 0}, 4) == 1);
  CHECK(EncodeDigits({0, 1}, 4) == 4);
}

TEST_CASE("behrend_set examples") {
  const BehrendSet b16 = MakeBehrendSet(16);
  CHECK(b16.members == Values{1, 4});
  CHECK_FALSE(b16.oracle_fallback);
  CHECK(MakeBehrendSet(200).members == Values{5, 46, 59, 70});
  CHECK(MakeBehrendSet(5).oracle_fallback);
  CHECK(MakeBehrendSet(5).members == Values{1, 2, 4, 5});
  CHECK(MakeBehrendSet(3).members == Values{1, 2});
  CHECK_THROWS_AS(MakeBehrendSet(0), DomainError);
}

TEST_CASE("property: behrend sets are AP-free shells inside 1..N") {
  std::mt19937_64 rng(67);
  for (int trial = 0; trial < 60; ++trial) {
    const std::uint64_t N = 4 + rng() % 200'000;
    const BehrendSet b = MakeBehrendSet(N);
    if (b.members.size() <= 60) CHECK_FALSE(CubicHasAp(b.members));
    CHECK_FALSE(HasThreeTermAp(b.members));
    CHECK(std::is_sorted(b.members.begin(), b.members.end()));
    for (auto x : b.members) {
      CHECK(x >= 1);
      CHECK(x <= N);
    }
    if (!b.oracle_fallback) {
      CHECK(b.members.size() == b.params.shell_size);
      for (auto x : b.members) {
        const Digits d = DecodeDigits(x, b.params.n, b.params.radix());
        std::uint64_t norm = 0;
        for (auto v : d) {
          CHECK(v < b.params.s);
          norm += std::uint64_t{v} * v;
        }
        CHECK(norm == b.params.k);
        CHECK(EncodeDigits(d, b.params.radix()) == x);
      }
    }
  }
}

TEST_CASE("optimal 3-AP-free sets against brute force") {
  CHECK(OptimalThreeApFree(3).size() == 2);
  CHECK(OptimalThreeApFree(8).size() == 4);
  CHECK(OptimalThreeApFree(8) == Values{1, 2, 4, 5});
  CHECK(OptimalThreeApFree(0).empty());
  for (std::uint32_t N = 1; N <= 18; ++N) {
    const Values opt = OptimalThreeApFree(N);
    CHECK(opt.size() == BruteOptimalSize(N));
    CHECK_FALSE(CubicHasAp(opt));
  }
  CHECK_THROWS_AS(OptimalThreeApFree(31), DomainError);
}

TEST_CASE("optimal set is the lexicographically smallest maximum") {
  for (std::uint32_t N = 1; N <= 14; ++N) {
    const Values opt = OptimalThreeApFree(N);
    Values best;
    for (std::uint32_t mask = 0; mask < (1u << N); ++mask) {
      Values v;
      for (std::uint32_t i = 0; i < N; ++i) {
        if (mask >> i & 1) v.push_back(i + 1);
      }
      if (v.size() < best.size() || CubicHasAp(v)) continue;
      if (v.size() > best.size() || v < best) best = v;
    }
    CHECK(opt == best);
  }
}

TEST_CASE("behrend never beats the optimum") {
  for (std::uint64_t N = 1; N <= 30; ++N) {
    CHECK(MakeBehrendSet(N).members.size() <= OptimalThreeApFree(N).size());
  }
}

TEST_CASE("behrend sets grow past N^0.6 from 2^16 on") {
  std::size_t prev = 0;
  for (int e = 16; e <= 20; ++e) {
    const double N = std::ldexp(1.0, e);
    const std::size_t size = MakeBehrendSet(std::uint64_t{1} << e).members.size();
    INFO("N = 2^", e, ", |B| = ", size, ", N^0.6 = ", std::pow(N, 0.6));
    CHECK(size >= prev);
    CHECK(double(size) > std::pow(N, 0.6));
    prev = size;
  }
}

}  // namespace
}  // namespace joints
