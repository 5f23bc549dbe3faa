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

#include <random>

#include "joints/affine.h"
#include "joints/checks.h"
#include "support.h"

namespace joints {
namespace {

using P = RationalPoint;

TEST_CASE("rational points are canonical") {
  const P p({mpq_class(2, 4), mpq_class(-3, -6)});
  CHECK(p.coords()[0] == mpq_class(1, 2));
  CHECK(p.coords()[0].get_den() == 2);
  CHECK(p.ToString() == "(1/2,1/2)");
  CHECK(P::FromIntegers({1, 2, 3}).ToString() == "(1,2,3)");
}

TEST_CASE("affine independence basics") {
  CHECK(AffineIndependent(std::vector<P>{}));
  CHECK(AffineIndependent(std::vector<P>{P::FromIntegers({4, 4})}));
  CHECK_FALSE(AffineIndependent(std::vector<P>{
      P::FromIntegers({0, 0}), P::FromIntegers({1, 1}), P::FromIntegers({2, 2})}));
  CHECK(AffineIndependent(std::vector<P>{
      P::FromIntegers({0, 0}), P::FromIntegers({1, 1}), P::FromIntegers({2, 3})}));
  std::vector<P> five;
  for (int i = 0; i < 5; ++i) five.push_back(P::FromIntegers({i, i * i, i * i * i}));
  CHECK_FALSE(AffineIndependent(five));
  CHECK_THROWS_AS(AffineIndependent(std::vector<P>{P::FromIntegers({1}),
                                                   P::FromIntegers({1, 2})}),
                  DomainError);
}

TEST_CASE("integer matrix rank") {
  CHECK(IntegerMatrixRank({}) == 0);
  CHECK(IntegerMatrixRank({{1, 2}, {2, 4}}) == 1);
  CHECK(IntegerMatrixRank({{0, 1, 2}, {1, 0, 3}, {1, 1, 5}}) == 2);
  CHECK(IntegerMatrixRank({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}) == 3);
}

TEST_CASE("property: affine independence matches Gaussian elimination") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t d = 1 + rng() % 3;
    const std::size_t k = rng() % 6;
    const auto base = testing::RandomLatticePoints(rng, k, d, -2, 2);
    // rescale some coordinates to non-integral rationals
    std::vector<P> pts;
    for (const auto& p : base) {
      std::vector<mpq_class> c = p.coords();
      for (auto& v : c) v /= den(rng);
      pts.emplace_back(c);
    }
    CHECK(AffineIndependent(pts) == testing::OracleAffineIndependent(pts));
  }
}

TEST_CASE("property: permutation and translation invariance") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    auto pts = testing::RandomLatticePoints(rng, 1 + rng() % 4, 3, -2, 2);
    const bool base = AffineIndependent(pts);
    std::shuffle(pts.begin(), pts.end(), rng);
    CHECK(AffineIndependent(pts) == base);
    const mpq_class shift(static_cast<long>(rng() % 7) - 3, 2);
    std::vector<P> moved;
    for (const auto& p : pts) {
      std::vector<mpq_class> c = p.coords();
      for (auto& v : c) v += shift;
      moved.emplace_back(c);
    }
    CHECK(AffineIndependent(moved) == base);
  }
}

TEST_CASE("affine ground rejects duplicates and mixed dimensions") {
  CHECK_THROWS_AS(AffineGround({P::FromIntegers({1, 1}), P::FromIntegers({1, 1})}),
                  DomainError);
  CHECK_THROWS_AS(AffineGround({P::FromIntegers({1, 1}), P::FromIntegers({1})}),
                  DomainError);
}

TEST_CASE("affine matroid is simple with rank d + 1") {
  std::mt19937_64 rng(3);
  const Matroid m = MakeAffineMatroid(
      AffineGround(testing::RandomLatticePoints(rng, 9, 3, 0, 5)));
  CHECK_FALSE(FindNonSimpleWitness(m).has_value());
  CHECK(m.FullRank() == 4);
  CHECK(m.ground().label(0).front() == '(');
}

TEST_CASE("grid3d shapes") {
  CHECK_THROWS_AS(MakeGrid3d(1), DomainError);
  const Grid3d g = MakeGrid3d(2);
  CHECK(g.ground.size() == 8);
  CHECK(g.lines.size() == 12);
  CHECK(g.ground.points()[1].ToString() == "(1,1,2)");
  for (const auto& l : g.lines) CHECK(l.members.size() == 2);
}

TEST_CASE("grid3d: joints equal k^3 with an independent rank oracle") {
  for (std::size_t k = 2; k <= 3; ++k) {
    const Grid3d g = MakeGrid3d(k);
    const Matroid m = MakeAffineMatroid(g.ground);
    const auto lines = GridMatroidLines(m, g);
    CHECK(lines.size() == 3 * k * k);
    // each point is on one line per axis; the union has affine rank 4
    std::size_t oracle_joints = 0;
    for (Element x = 0; x < m.size(); ++x) {
      std::vector<P> pts;
      for (const auto& l : g.lines) {
        if (std::find(l.members.begin(), l.members.end(), x) == l.members.end()) {
          continue;
        }
        for (Element e : l.members) pts.push_back(g.ground.points()[e]);
      }
      std::vector<std::vector<mpq_class>> rows;
      for (const auto& p : pts) {
        std::vector<mpq_class> row;
        for (std::size_t c = 0; c < 3; ++c) {
          row.push_back(p.coords()[c] - pts[0].coords()[c]);
        }
        rows.push_back(row);
      }
      if (testing::RationalRank(rows) + 1 >= 4) ++oracle_joints;
    }
    CHECK(oracle_joints == k * k * k);
    const std::size_t joints = CountJoints(m, lines);
    CHECK(joints == oracle_joints);
    CHECK(joints * joints * 27 == lines.size() * lines.size() * lines.size());
  }
}

TEST_CASE("grid3d matroid lines are the descriptors") {
  const Grid3d g = MakeGrid3d(3);
  const Matroid m = MakeAffineMatroid(g.ground);
  const auto lines = GridMatroidLines(m, g);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    CHECK(lines[i].members == Canonical(g.lines[i].members));
    CHECK(lines[i].rank == 2);
  }
}

TEST_CASE("exhaustive axioms on six points in the plane") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 5; ++trial) {
    const Matroid m = MakeAffineMatroid(
        AffineGround(testing::RandomLatticePoints(rng, 6, 2, 0, 2)));
    CHECK(CheckAxioms(m, CheckMode::kExhaustive, 1'000'000).overall() ==
          CheckStatus::kPass);
  }
}

}  // namespace
}  // namespace joints
