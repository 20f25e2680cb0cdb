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

#include <set>
#include <sstream>

#include "boadd/codes.hpp"
#include "boadd/error.hpp"

using namespace boadd;

namespace {

std::size_t weight(const std::vector<Elem>& v) {
  std::size_t w = 0;
  for (auto x : v) w += x != 0;
  return w;
}

std::vector<Elem> digits(std::uint64_t idx, std::size_t len, Elem q) {
  std::vector<Elem> v(len);
  for (auto& x : v) {
    x = static_cast<Elem>(idx % q);
    idx /= q;
  }
  return v;
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

// All codewords by direct matrix-vector products.
std::set<std::vector<Elem>> codewords(const LinearCode& c) {
  const auto& f = *c.field;
  std::set<std::vector<Elem>> out;
  for (std::uint64_t idx = 0; idx < ipow(c.q(), c.k); ++idx) {
    auto m = digits(idx, c.k, c.q());
    std::vector<Elem> w(c.n, 0);
    for (std::size_t i = 0; i < c.n; ++i)
      for (std::size_t j = 0; j < c.k; ++j) w[i] = f.add(w[i], f.mul(c.generator.at(i, j), m[j]));
    out.insert(w);
  }
  return out;
}

// Vectors v with sum_i v_i G_ij = 0 for every column j, by exhaustion.
std::set<std::vector<Elem>> brute_dual(const LinearCode& c) {
  const auto& f = *c.field;
  std::set<std::vector<Elem>> out;
  for (std::uint64_t idx = 0; idx < ipow(c.q(), c.n); ++idx) {
    auto v = digits(idx, c.n, c.q());
    bool ok = true;
    for (std::size_t j = 0; j < c.k && ok; ++j) {
      Elem s = 0;
      for (std::size_t i = 0; i < c.n; ++i) s = f.add(s, f.mul(v[i], c.generator.at(i, j)));
      ok = s == 0;
    }
    if (ok) out.insert(v);
  }
  return out;
}

std::size_t min_weight(const std::set<std::vector<Elem>>& words, std::size_t n) {
  std::size_t best = n + 1;
  for (const auto& w : words)
    if (weight(w)) best = std::min(best, weight(w));
  return best;
}

LinearCode small_code(Elem q, std::vector<std::vector<Elem>> rows) {
  GfMatrix g(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[0].size(); ++j) g.at(i, j) = rows[i][j];
  return make_code(FiniteField::of_order(q), g, "t");
}

}  // namespace

TEST(Codes, Encode731Code) {
  auto c = builtin_code("example1");
  EXPECT_EQ(c.n, 7u);
  EXPECT_EQ(c.k, 3u);
  EXPECT_EQ(encode(c, {1, 0, 0}), (std::vector<Elem>{1, 0, 1, 0, 1, 0, 1}));
  EXPECT_EQ(encode(c, {1, 1, 1}), (std::vector<Elem>{1, 1, 0, 1, 0, 0, 1}));
  EXPECT_EQ(encode(c, {0, 0, 0}), std::vector<Elem>(7, 0));
  EXPECT_THROW(encode(c, {1, 0}), Error);
}

TEST(Codes, BuiltinParameters) {
  auto e2 = builtin_code("example2");
  EXPECT_EQ(e2.q(), 4u);
  EXPECT_EQ(e2.n, 5u);
  EXPECT_EQ(e2.k, 2u);
  auto e3 = builtin_code("example3");
  EXPECT_EQ(e3.n, 16u);
  EXPECT_EQ(e3.k, 9u);
  EXPECT_THROW(builtin_code("nope"), Error);
}

TEST(Codes, DualDistanceMatchesBruteForce) {
  for (const char* name : {"example1", "example2", "example3"}) {
    auto c = builtin_code(name);
    auto dual = brute_dual(c);
    const std::size_t want = min_weight(dual, c.n);
    EXPECT_EQ(dual.size(), ipow(c.q(), c.n - c.k)) << name;
    EXPECT_EQ(dual_distance(c), want) << name;
    EXPECT_EQ(min_distance_by_dependence(c), min_weight(codewords(c), c.n)) << name;
  }
  EXPECT_EQ(dual_distance(builtin_code("example1")), 3u);
  EXPECT_EQ(dual_distance(builtin_code("example2")), 3u);
  EXPECT_EQ(dual_distance(builtin_code("example3")), 6u);
}

TEST(Codes, DualCodeIsExactlyTheOrthogonalComplement) {
  for (const char* name : {"example1", "example2"}) {
    auto c = builtin_code(name);
    auto d = dual_code(c);
    EXPECT_EQ(c.k + d.k, c.n);
    EXPECT_EQ(codewords(d), brute_dual(c));
    EXPECT_EQ(codewords(dual_code(d)), codewords(c));
    EXPECT_EQ(d.label, std::string(name) + "-dual");
    EXPECT_EQ(dual_code(d).label, name);
  }
}

TEST(Codes, MinDistanceRoutesAgree) {
  std::vector<LinearCode> codes = {builtin_code("example1"), builtin_code("example2"),
                                   builtin_code("example3"), hamming_dual_code(4, 5),
                                   hamming_dual_code(3, 4), bch_ext_code(2, 3, 3)};
  for (const auto& c : codes) {
    const auto words = codewords(c);
    EXPECT_EQ(min_distance(c), min_weight(words, c.n)) << c.label;
    EXPECT_EQ(min_distance_by_dependence(c), min_distance(c)) << c.label;
    auto r = describe(c);
    EXPECT_EQ(r.strength, r.dual_distance - 1);
    EXPECT_EQ(r.distance, min_distance(c));
  }
}

TEST(Codes, RepetitionAndZeroCodes) {
  auto rep = small_code(3, {{1}, {1}, {1}, {1}});
  EXPECT_EQ(min_distance(rep), 4u);
  EXPECT_EQ(dual_distance(rep), 2u);
  auto ident = small_code(2, {{1, 0}, {0, 1}});
  EXPECT_EQ(dual_distance(ident), 3u);  // dual is the zero code
  EXPECT_THROW(small_code(2, {{1, 1}, {1, 1}}), Error);
}

TEST(Codes, ForEachCodewordVisitsEveryWordOnce) {
  auto c = builtin_code("example2");
  std::set<std::vector<Elem>> seen;
  std::size_t calls = 0;
  for_each_codeword(c, [&](const std::vector<Elem>& m, const std::vector<Elem>& w) {
    EXPECT_EQ(encode(c, m), w);
    seen.insert(w);
    ++calls;
  });
  EXPECT_EQ(calls, 16u);
  EXPECT_EQ(seen, codewords(c));
}

TEST(Hamming, DualDistanceThree) {
  for (auto [q, n] : std::vector<std::pair<Elem, std::size_t>>{
           {2, 7}, {2, 15}, {3, 4}, {3, 13}, {4, 5}, {4, 21}, {5, 6}, {9, 10}}) {
    auto c = hamming_dual_code(q, n);
    EXPECT_EQ(c.n, n);
    // independent check: rows pairwise non-proportional, some triple dependent
    const auto& f = *c.field;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b) {
        bool prop = false;
        for (Elem t = 1; t < q && !prop; ++t) {
          bool all = true;
          for (std::size_t j = 0; j < c.k; ++j)
            all = all && f.mul(t, c.generator.at(a, j)) == c.generator.at(b, j);
          prop = all;
        }
        EXPECT_FALSE(prop);
      }
    EXPECT_EQ(dual_distance(c), 3u) << q << " " << n;
  }
  EXPECT_EQ(hamming_dual_code(4, 5).k, 2u);
  EXPECT_EQ(hamming_dual_code(4, 21).k, 3u);
  EXPECT_EQ(hamming_dual_code(9, 10).k, 2u);
  EXPECT_EQ(hamming_dual_code(2, 7).label, "hamming-dual");
  EXPECT_THROW(hamming_dual_code(4, 6), Error);
  EXPECT_THROW(hamming_dual_code(6, 7), Error);
}

TEST(Hamming, RowsAreNormalizedLexOrder) {
  auto c = hamming_dual_code(3, 4);
  std::vector<std::vector<Elem>> rows;
  for (std::size_t i = 0; i < c.n; ++i) rows.push_back({c.generator.at(i, 0), c.generator.at(i, 1)});
  EXPECT_EQ(rows, (std::vector<std::vector<Elem>>{{0, 1}, {1, 0}, {1, 1}, {1, 2}}));
}

TEST(Bch, Parameters) {
  auto c = bch_ext_code(2, 4, 6);
  EXPECT_EQ(c.n, 16u);
  EXPECT_EQ(c.k, 7u);
  EXPECT_EQ(min_weight(codewords(c), c.n), 6u);
  EXPECT_EQ(c.label, "bch-ext");
  auto b = bch_dimension_bound_check(c, 6, 4, 2);
  EXPECT_TRUE(b.applicable);
  EXPECT_TRUE(b.holds);
  EXPECT_EQ(b.bound, 7);
  EXPECT_EQ(b.slack, 0);

  auto c2 = bch_ext_code(2, 4, 2);
  EXPECT_EQ(c2.k, 15u);
  EXPECT_EQ(min_distance(c2), 2u);
  auto c3 = bch_ext_code(2, 3, 3);
  EXPECT_EQ(c3.n, 8u);
  EXPECT_EQ(c3.k, 4u);
  EXPECT_EQ(min_distance(c3), 4u);
  EXPECT_THROW(bch_ext_code(2, 4, 17), Error);
  EXPECT_THROW(bch_ext_code(2, 4, 1), Error);
}

TEST(Bch, DistanceAtLeastDesignedAndEvenParity) {
  for (auto [q, m, D] : std::vector<std::tuple<Elem, int, int>>{
           {2, 4, 4}, {2, 4, 6}, {2, 4, 8}, {2, 3, 5}, {4, 2, 3}, {4, 2, 4}, {3, 2, 4}, {2, 5, 6}}) {
    auto c = bch_ext_code(q, m, D);
    EXPECT_EQ(c.n, ipow(q, m));
    EXPECT_GE(min_distance_by_dependence(c), static_cast<std::size_t>(D));
    const auto& f = *c.field;
    for_each_codeword(c, [&](const std::vector<Elem>&, const std::vector<Elem>& w) {
      Elem s = 0;
      for (auto x : w) s = f.add(s, x);
      ASSERT_EQ(s, 0u);
    });
    auto b = bch_dimension_bound_check(c, D, m, q);
    if (b.applicable) {
      EXPECT_TRUE(b.holds) << q << " " << m << " " << D;
    }
  }
}

TEST(Bch, GeneratorPolynomialDividesCyclicModulus) {
  auto g = bch_generator_polynomial(2, 4, 6);
  auto f = g.field();
  // x^15 - 1
  std::vector<Elem> xn(16, 0);
  xn[0] = f->neg(1);
  xn[15] = 1;
  auto [qt, r] = divmod(Polynomial(f, xn), g);
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(g.degree(), 8);  // 15 - 7
}

TEST(CodeIo, RoundTripAndErrors) {
  for (const char* name : {"example1", "example2", "example3"}) {
    auto c = builtin_code(name);
    std::istringstream in(format_code(c));
    auto back = parse_code(in);
    EXPECT_EQ(back.generator, c.generator);
    EXPECT_EQ(back.q(), c.q());
  }
  auto parse = [](const std::string& s) {
    std::istringstream in(s);
    return parse_code(in);
  };
  auto kind = [&](const std::string& s) {
    try {
      parse(s);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Io;
  };
  EXPECT_EQ(kind("2 3 2\n1 0\n0 1\n"), ErrorKind::Parse);          // truncated
  EXPECT_EQ(kind("2 2 1\n1\n2\n"), ErrorKind::Parse);              // entry out of range
  EXPECT_EQ(kind("x 2 1\n1\n1\n"), ErrorKind::Parse);              // bad header
  EXPECT_EQ(kind("6 2 1\n1\n1\n"), ErrorKind::Parse);              // not a prime power
  EXPECT_THROW(load_code("/nonexistent/code.txt"), Error);
}

TEST(Codes, MinDistanceBudget) {
  GfMatrix g(26, 25);
  for (std::size_t i = 0; i < 25; ++i) g.at(i, i) = 1;
  g.at(25, 0) = 1;
  auto c = make_code(FiniteField::of_order(2), g, "big");
  try {
    min_distance(c);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Budget);
  }
  EXPECT_EQ(min_distance_by_dependence(c), 1u);
}
