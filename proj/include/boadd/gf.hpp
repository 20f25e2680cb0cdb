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

#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace boadd {

/**
 * Encoded field element: the coordinate vector (c_0, ..., c_{e-1}) with
 * respect to the power basis {1, x, ..., x^{e-1}} packed as
 * sum_i c_i p^i. Zero is 0 and one is 1 in every field.
 */
using Elem = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

enum class ArithOp { add, sub, mul, div };

/**
 * GF(p^e) as GF(p)[x] / (modulus). Immutable; instances for the same
 * (p, e) are shared and carry the same modulus.
 */
class FiniteField {
 public:
  /// Throws Error(InvalidArgument) for non-prime p, e outside 1..8, or
  /// p^e > 2^16.
  static FieldPtr create(int p, int e);

  /// The field of order q (q must be a prime power).
  static FieldPtr of_order(std::uint64_t q);

  int characteristic() const { return p_; }
  int degree() const { return e_; }
  Elem order() const { return q_; }
  /// Ascending coefficients, length e+1, monic.
  const std::vector<int>& modulus() const { return modulus_; }

  bool contains(Elem a) const { return a < q_; }
  bool same_as(const FiniteField& other) const;
  std::string name() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t k) const;
  Elem apply(ArithOp op, Elem a, Elem b) const;

  /// Image of the integer c under Z -> GF(p) -> GF(p^e).
  Elem from_int(std::int64_t c) const;
  std::vector<int> coords(Elem a) const;
  Elem from_coords(std::span<const int> c) const;

  /// Multiplicative order of a nonzero element.
  std::uint64_t multiplicative_order(Elem a) const;
  /// Smallest (by encoding) element of order q-1.
  Elem primitive_element() const { return primitive_; }

  /// Polynomial-level multiply-and-reduce; independent of the log tables.
  Elem mul_by_reduction(Elem a, Elem b) const;

 private:
  FiniteField(int p, int e, std::vector<int> modulus);

  int p_;
  int e_;
  Elem q_;
  std::vector<int> modulus_;
  std::vector<Elem> pow_p_;  // p^i
  Elem primitive_ = 1;
  std::vector<Elem> exp_;    // primitive^i, length 2(q-1)
  std::vector<std::uint32_t> log_;
};

/** Value-typed element that remembers its field. */
class FieldElement {
 public:
  FieldElement(FieldPtr field, Elem value);

  const FieldPtr& field() const { return field_; }
  Elem value() const { return value_; }
  std::vector<int> coords() const { return field_->coords(value_); }
  bool is_zero() const { return value_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_->same_as(*b.field_) && a.value_ == b.value_;
  }

 private:
  FieldPtr field_;
  Elem value_;
};

/// Field operation with field-mismatch and division-by-zero checks.
FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op);

bool is_prime(std::uint64_t n);
/// Returns (p, e) with q = p^e, or nullopt when q is not a prime power.
std::optional<std::pair<int, int>> prime_power(std::uint64_t q);
/// Whether the monic GF(p) polynomial (ascending coefficients) is irreducible,
/// by trial division against every monic polynomial of degree <= deg/2.
bool is_irreducible_mod_p(std::span<const int> poly, int p);

/** Polynomial over a finite field, ascending coefficients, no trailing zeros. */
class Polynomial {
 public:
  explicit Polynomial(FieldPtr field, std::vector<Elem> coeffs = {});

  static Polynomial monomial(FieldPtr field, Elem coeff, std::size_t degree);

  const FieldPtr& field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Elem leading() const { return coeffs_.empty() ? 0 : coeffs_.back(); }
  Elem coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : 0; }
  Elem eval(Elem x) const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  FieldPtr field_;
  std::vector<Elem> coeffs_;
};

/// Quotient and remainder; b must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial gcd(Polynomial a, Polynomial b);
Polynomial lcm(const Polynomial& a, const Polynomial& b);

/**
 * GF(q^m) together with a fixed embedding of GF(q). For prime q the
 * embedding is the prime subfield; otherwise the generator of GF(q) is sent
 * to the smallest root of its modulus in GF(q^m).
 */
struct FieldExtension {
  FieldPtr base;
  FieldPtr big;
  int m = 1;
  std::vector<Elem> embed;            // base element -> big element
  std::vector<std::int64_t> restrict; // big element -> base element or -1

  static FieldExtension create(const FieldPtr& base, int m);
};

/// q-cyclotomic coset of i modulo n. With `m` given, also requires
/// n | q^m - 1.
std::set<std::uint64_t> cyclotomic_coset(std::uint64_t i, std::uint64_t n,
                                         std::uint64_t q,
                                         std::optional<int> m = std::nullopt);

/// Minimal polynomial over ext.base of beta in ext.big.
Polynomial minimal_polynomial(const FieldExtension& ext, Elem beta);

}  // namespace boadd
