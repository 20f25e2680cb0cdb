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

#include <numeric>

#include "boadd/error.hpp"
#include "boadd/gf.hpp"

using namespace boadd;

namespace {

// Schoolbook product of coordinate vectors reduced by the monic modulus.
Elem oracle_mul(const FiniteField& f, Elem a, Elem b) {
  const int p = f.characteristic(), e = f.degree();
  auto ca = f.coords(a), cb = f.coords(b);
  std::vector<int> prod(2 * e, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p;
  const auto& mod = f.modulus();
  for (int d = 2 * e - 1; d >= e; --d) {
    int c = prod[d];
    if (!c) continue;
    for (int i = 0; i <= e; ++i) prod[d - e + i] = ((prod[d - e + i] - c * mod[i]) % p + p) % p;
  }
  Elem out = 0, scale = 1;
  for (int i = 0; i < e; ++i, scale *= p) out += static_cast<Elem>(prod[i]) * scale;
  return out;
}

Elem oracle_add(const FiniteField& f, Elem a, Elem b) {
  const int p = f.characteristic();
  Elem out = 0, scale = 1;
  for (int i = 0; i < f.degree(); ++i, scale *= p) {
    out += static_cast<Elem>((a / scale % p + b / scale % p) % p) * scale;
  }
  return out;
}

const std::vector<std::pair<int, int>> kSmall = {{2, 1}, {2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2},
                                                 {5, 1}, {7, 1}, {11, 1}, {13, 1}};

}  // namespace

TEST(FiniteField, OrdersAndModuli) {
  auto f2 = FiniteField::create(2, 1);
  EXPECT_EQ(f2->order(), 2u);
  auto f4 = FiniteField::create(2, 2);
  EXPECT_EQ(f4->order(), 4u);
  EXPECT_EQ(f4->modulus(), (std::vector<int>{1, 1, 1}));
  auto f9 = FiniteField::of_order(9);
  EXPECT_EQ(f9->characteristic(), 3);
  EXPECT_EQ(f9->degree(), 2);
  EXPECT_EQ(FiniteField::create(2, 2).get(), f4.get());
}

TEST(FiniteField, Gf4Products) {
  auto f = FiniteField::create(2, 2);
  const Elem a = 2;  // x
  EXPECT_EQ(f->mul(a, a), 3u);         // x^2 = x + 1
  EXPECT_EQ(f->mul(a, 3), 1u);         // x(x+1) = 1
  EXPECT_EQ(f->add(1, 1), 0u);
  EXPECT_EQ(f->add(a, 1), 3u);
  EXPECT_EQ(f->inv(a), 3u);
}

TEST(FiniteField, AxiomsExhaustive) {
  for (auto [p, e] : kSmall) {
    auto f = FiniteField::create(p, e);
    const Elem q = f->order();
    EXPECT_TRUE(is_irreducible_mod_p(f->modulus(), p));
    for (Elem a = 0; a < q; ++a) {
      EXPECT_EQ(f->add(a, 0), a);
      EXPECT_EQ(f->mul(a, 1), a);
      EXPECT_EQ(f->add(a, f->neg(a)), 0u);
      if (a) {
        EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
      }
      for (Elem b = 0; b < q; ++b) {
        ASSERT_EQ(f->add(a, b), oracle_add(*f, a, b)) << f->name();
        ASSERT_EQ(f->mul(a, b), oracle_mul(*f, a, b)) << f->name();
        ASSERT_EQ(f->mul_by_reduction(a, b), oracle_mul(*f, a, b));
        ASSERT_EQ(f->sub(f->add(a, b), b), a);
        if (b) {
          ASSERT_EQ(f->mul(f->div(a, b), b), a);
        }
      }
    }
  }
}

TEST(FiniteField, DistributivityAndFrobenius) {
  for (auto [p, e] : kSmall) {
    auto f = FiniteField::create(p, e);
    const Elem q = f->order();
    for (Elem a = 0; a < q; ++a)
      for (Elem b = 0; b < q; ++b) {
        ASSERT_EQ(f->pow(f->add(a, b), p), f->add(f->pow(a, p), f->pow(b, p)));
        for (Elem c = 0; c < q; c += 3) {
          ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
        }
      }
  }
}

TEST(FiniteField, PrimitiveElement) {
  for (auto [p, e] : kSmall) {
    auto f = FiniteField::create(p, e);
    const Elem q = f->order();
    const Elem g = f->primitive_element();
    // test-side order by repeated multiplication
    Elem x = g;
    std::uint64_t ord = 1;
    while (x != 1) {
      x = oracle_mul(*f, x, g);
      ++ord;
    }
    EXPECT_EQ(ord, q - 1u);
    for (Elem a = 1; a < g; ++a) EXPECT_LT(f->multiplicative_order(a), q - 1u);
    for (Elem a = 1; a < q; ++a) EXPECT_EQ((q - 1) % f->multiplicative_order(a), 0u);
  }
}

TEST(FiniteField, SearchedModulusIsLexLeast) {
  // a monic quadratic is irreducible iff it has no root
  auto f = FiniteField::create(5, 2);
  const auto& m = f->modulus();
  ASSERT_EQ(m.size(), 3u);
  auto has_root = [](int c0, int c1) {
    for (int x = 0; x < 5; ++x)
      if ((x * x + c1 * x + c0) % 5 == 0) return true;
    return false;
  };
  EXPECT_FALSE(has_root(m[0], m[1]));
  for (int c1 = 0; c1 < 5; ++c1)
    for (int c0 = 0; c0 < 5; ++c0) {
      if (c1 * 5 + c0 >= m[1] * 5 + m[0]) continue;
      EXPECT_TRUE(has_root(c0, c1)) << c0 << "," << c1;
    }
}

TEST(FiniteField, Irreducibility) {
  EXPECT_TRUE(is_irreducible_mod_p(std::vector<int>{1, 1, 1}, 2));
  EXPECT_FALSE(is_irreducible_mod_p(std::vector<int>{1, 0, 1}, 2));
  EXPECT_TRUE(is_irreducible_mod_p(std::vector<int>{1, 1, 0, 0, 1}, 2));
  EXPECT_FALSE(is_irreducible_mod_p(std::vector<int>{1, 0, 1, 0, 1}, 2));
  EXPECT_TRUE(is_irreducible_mod_p(std::vector<int>{1, 0, 1}, 3));
}

TEST(FiniteField, Errors) {
  auto expect_kind = [](auto fn, ErrorKind k) {
    try {
      fn();
      ADD_FAILURE() << "no throw";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), k);
    }
  };
  expect_kind([] { FiniteField::create(4, 1); }, ErrorKind::InvalidArgument);
  expect_kind([] { FiniteField::create(2, 17); }, ErrorKind::InvalidArgument);
  expect_kind([] { FiniteField::of_order(6); }, ErrorKind::InvalidArgument);
  auto f4 = FiniteField::create(2, 2);
  auto f2 = FiniteField::create(2, 1);
  expect_kind([&] { f4->inv(0); }, ErrorKind::InvalidArgument);
  expect_kind([&] { arith(FieldElement(f4, 1), FieldElement(f2, 1), ArithOp::add); },
              ErrorKind::Mismatch);
  expect_kind([&] { arith(FieldElement(f4, 1), FieldElement(f4, 0), ArithOp::div); },
              ErrorKind::InvalidArgument);
}

TEST(FieldElement, Arith) {
  auto f = FiniteField::create(3, 2);
  FieldElement a(f, 4), b(f, 7);
  EXPECT_EQ((a + b).value(), f->add(4, 7));
  EXPECT_EQ((a * b).value(), oracle_mul(*f, 4, 7));
  EXPECT_EQ(((a / b) * b), a);
  EXPECT_EQ((a - a).value(), 0u);
}

TEST(PrimePower, Decomposition) {
  EXPECT_EQ(prime_power(8), (std::pair<int, int>{2, 3}));
  EXPECT_EQ(prime_power(49), (std::pair<int, int>{7, 2}));
  EXPECT_FALSE(prime_power(12).has_value());
  EXPECT_FALSE(prime_power(1).has_value());
  EXPECT_TRUE(is_prime(65521));
  EXPECT_FALSE(is_prime(65535));
}

TEST(Polynomial, DivmodGcdLcm) {
  auto f = FiniteField::create(3, 1);
  Polynomial a(f, {1, 2, 0, 1, 2});
  Polynomial b(f, {2, 1, 1});
  auto [qt, r] = divmod(a, b);
  EXPECT_EQ(qt * b + r, a);
  EXPECT_LT(r.degree(), b.degree());
  Polynomial x1(f, {1, 1}), x2(f, {2, 1});
  auto g = gcd(x1 * x1 * x2, x1 * x2 * x2);
  EXPECT_EQ(g, x1 * x2);
  EXPECT_EQ(lcm(x1, x2), x1 * x2);
  EXPECT_EQ(Polynomial(f, {0, 0}).degree(), -1);
}

TEST(Cyclotomic, Cosets) {
  EXPECT_EQ(cyclotomic_coset(1, 15, 2), (std::set<std::uint64_t>{1, 2, 4, 8}));
  EXPECT_EQ(cyclotomic_coset(5, 15, 2), (std::set<std::uint64_t>{5, 10}));
  EXPECT_EQ(cyclotomic_coset(0, 15, 2), (std::set<std::uint64_t>{0}));
  EXPECT_EQ(cyclotomic_coset(1, 15, 4, 2), (std::set<std::uint64_t>{1, 4}));
  EXPECT_THROW(cyclotomic_coset(1, 7, 2, 2), Error);
  EXPECT_THROW(cyclotomic_coset(1, 6, 2), Error);
}

TEST(MinimalPolynomial, AnnihilatesConjugates) {
  for (auto [q, m] : std::vector<std::pair<int, int>>{{2, 4}, {4, 2}, {2, 3}, {3, 2}}) {
    auto base = FiniteField::of_order(q);
    auto ext = FieldExtension::create(base, m);
    const auto& F = *ext.big;
    const Elem Q = F.order();
    for (Elem a = 0; a < base->order(); ++a) {
      EXPECT_EQ(ext.restrict[ext.embed[a]], static_cast<std::int64_t>(a));
      for (Elem b = 0; b < base->order(); ++b) {
        EXPECT_EQ(ext.embed[base->mul(a, b)], F.mul(ext.embed[a], ext.embed[b]));
        EXPECT_EQ(ext.embed[base->add(a, b)], F.add(ext.embed[a], ext.embed[b]));
      }
    }
    const Elem alpha = F.primitive_element();
    for (std::uint64_t i = 0; i + 1 < Q; ++i) {
      const Elem beta = F.pow(alpha, i);
      auto mp = minimal_polynomial(ext, beta);
      EXPECT_EQ(mp.leading(), 1u);
      EXPECT_EQ(static_cast<std::size_t>(mp.degree()), cyclotomic_coset(i, Q - 1, q).size());
      // Horner in the big field, coefficients embedded
      Elem acc = 0;
      for (int j = mp.degree(); j >= 0; --j) acc = F.add(F.mul(acc, beta), ext.embed[mp.coeff(j)]);
      EXPECT_EQ(acc, 0u) << "q=" << q << " m=" << m << " i=" << i;
    }
    auto zero_mp = minimal_polynomial(ext, 0);
    EXPECT_EQ(zero_mp, Polynomial(base, {0, 1}));
  }
}
