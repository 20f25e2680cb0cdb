// Copyright 2026 The boadd Authors
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

#include <gtest/gtest.h>

#include <map>
#include <set>

#include "boadd/cayley.hpp"
#include "boadd/error.hpp"
#include "fixtures.hpp"

using namespace boadd;

namespace {

// Edge multiplicities (vertex, label) counted directly from the vertex list.
std::map<std::pair<Vec, Vec>, std::size_t> edge_counts(const FiniteField& f,
                                                       const std::vector<Vec>& v) {
  std::map<std::pair<Vec, Vec>, std::size_t> out;
  for (std::size_t j = 0; j < v.size(); ++j) {
    const Vec& a = v[j];
    const Vec& b = v[(j + 1) % v.size()];
    Vec s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = f.sub(b[i], a[i]);
    ++out[{a, s}];
  }
  return out;
}

}  // namespace

TEST(Cayley, StandardGenerators) {
  auto f2 = FiniteField::create(2, 1);
  auto s = standard_generators(f2, 3);
  EXPECT_EQ(s.elements, (std::vector<Vec>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  auto f4 = FiniteField::create(2, 2);
  auto s4 = standard_generators(f4, 2);
  EXPECT_EQ(s4.elements, (std::vector<Vec>{{1, 0}, {2, 0}, {0, 1}, {0, 2}}));
  auto f9 = FiniteField::create(3, 2);
  EXPECT_EQ(standard_generators(f9, 1).elements, (std::vector<Vec>{{1}, {3}}));
}

TEST(Cayley, GenerationIsOverPrimeField) {
  auto f4 = FiniteField::create(2, 2);
  EXPECT_FALSE(generates(*f4, 1, {{1}}));
  EXPECT_TRUE(generates(*f4, 1, {{1}, {2}}));
  EXPECT_TRUE(generates(*f4, 1, {{2}, {3}}));
  auto f2 = FiniteField::create(2, 1);
  EXPECT_FALSE(generates(*f2, 2, {{1, 1}}));
  EXPECT_TRUE(generates(*f2, 2, {{0, 1}, {1, 1}}));
  EXPECT_FALSE(generates(*f2, 2, {{1, 1}, {1, 1}}));
}

TEST(Cayley, TrivialCycle) {
  auto f2 = FiniteField::create(2, 1);
  auto c = eulerian_cycle(standard_generators(f2, 1));
  EXPECT_EQ(c.vertices, (std::vector<Vec>{{0}, {1}}));
  EXPECT_EQ(c.transitions(), (std::vector<Vec>{{1}, {1}}));
}

TEST(Cayley, EulerianCyclesAreEulerian) {
  for (auto [q, k] : std::vector<std::pair<Elem, std::size_t>>{
           {2, 1}, {2, 2}, {2, 3}, {2, 6}, {3, 1}, {3, 3}, {4, 1}, {4, 2}, {4, 3},
           {5, 2}, {7, 2}, {8, 2}, {9, 1}, {9, 2}, {16, 1}, {16, 2}}) {
    auto f = FiniteField::of_order(q);
    auto s = standard_generators(f, k);
    auto c = eulerian_cycle(s);
    std::uint64_t qk = 1;
    for (std::size_t i = 0; i < k; ++i) qk *= q;
    ASSERT_EQ(c.length(), qk * s.elements.size()) << q << "^" << k;
    EXPECT_EQ(c.vertices.front(), Vec(k, 0));
    auto counts = edge_counts(*f, c.vertices);
    const std::set<Vec> labels(s.elements.begin(), s.elements.end());
    EXPECT_EQ(counts.size(), c.length());  // no edge twice
    for (const auto& [edge, cnt] : counts) {
      EXPECT_EQ(cnt, 1u);
      EXPECT_TRUE(labels.count(edge.second));
    }
    auto r = check_balanced(*f, k, c.vertices);
    EXPECT_TRUE(r.balanced);
    EXPECT_TRUE(r.covers_all);
    EXPECT_TRUE(r.generating);
    for (const auto& [lab, mu] : r.mu) EXPECT_EQ(mu, 1u);
    // deterministic
    EXPECT_EQ(eulerian_cycle(s).vertices, c.vertices);
  }
}

TEST(Cayley, ListedCycleIsEulerian) {
  auto c = fixtures::listed_cycle();
  auto f = c.field;
  auto r = check_balanced(*f, 3, c.vertices);
  EXPECT_TRUE(r.balanced);
  EXPECT_EQ(r.mu.size(), 3u);
  for (const auto& [lab, mu] : r.mu) EXPECT_EQ(mu, 1u);
}

TEST(Cayley, HourglassSubcycle) {
  auto a = fixtures::listed_boa();
  auto v = fixtures::rows_of(a, {4, 6});
  auto r = check_balanced(*a.field, 2, v);
  EXPECT_TRUE(r.balanced);
  EXPECT_TRUE(r.starts_at_zero);
  EXPECT_EQ(r.mu, (std::map<Vec, std::size_t>{{{0, 1}, 2}, {{1, 1}, 4}}));
}

TEST(Cayley, Violations) {
  auto f2 = FiniteField::create(2, 1);
  // dropping the last vertex unbalances
  auto c = fixtures::listed_cycle();
  auto v = c.vertices;
  v.pop_back();
  auto r = check_balanced(*f2, 3, v);
  EXPECT_FALSE(r.balanced);
  EXPECT_GT(r.violation_count, 0u);
  EXPECT_LE(r.violations.size(), BalanceReport::kMaxViolations);

  // oscillation along one axis: does not cover, does not generate
  auto r2 = check_balanced(*f2, 2, {{0, 0}, {1, 0}});
  EXPECT_FALSE(r2.balanced);
  EXPECT_FALSE(r2.covers_all);
  EXPECT_FALSE(r2.generating);

  // not starting at zero
  auto r3 = check_balanced(*f2, 1, {{1}, {0}});
  EXPECT_FALSE(r3.starts_at_zero);
  EXPECT_FALSE(r3.balanced);
}

TEST(Cayley, ViolationListIsCapped) {
  auto f = FiniteField::of_order(16);
  auto c = eulerian_cycle(standard_generators(f, 2));
  auto v = c.vertices;
  v.resize(v.size() / 2);
  auto r = check_balanced(*f, 2, v);
  EXPECT_FALSE(r.balanced);
  EXPECT_GT(r.violation_count, BalanceReport::kMaxViolations);
  EXPECT_EQ(r.violations.size(), BalanceReport::kMaxViolations);
}

TEST(Cayley, IndexedMatchesVectorForm) {
  auto f = FiniteField::of_order(3);
  auto c = eulerian_cycle(standard_generators(f, 3));
  std::vector<std::uint64_t> idx;
  for (const auto& v : c.vertices) idx.push_back(vec_index(v, 3));
  auto a = check_balanced(*f, 3, c.vertices);
  auto b = check_balanced_indexed(*f, 3, idx);
  EXPECT_EQ(a.balanced, b.balanced);
  EXPECT_EQ(a.mu, b.mu);
  for (std::uint64_t i = 0; i < 27; ++i) EXPECT_EQ(vec_index(vec_from_index(i, 3, 3), 3), i);
}

TEST(Cayley, NonGeneratingSetRejected) {
  auto f4 = FiniteField::create(2, 2);
  GeneratingSet s{f4, 1, {{1}}};
  EXPECT_THROW(eulerian_cycle(s), Error);
}
