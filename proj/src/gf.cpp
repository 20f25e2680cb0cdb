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

#include "boadd/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

#include "boadd/error.hpp"

namespace boadd {
namespace {

// Deterministic moduli for the small fields used throughout.
const std::map<std::pair<int, int>, std::vector<int>>& modulus_table() {
  static const std::map<std::pair<int, int>, std::vector<int>> table = {
      {{2, 1}, {1, 1}},          // x + 1
      {{2, 2}, {1, 1, 1}},       // x^2 + x + 1
      {{2, 3}, {1, 1, 0, 1}},    // x^3 + x + 1
      {{2, 4}, {1, 1, 0, 0, 1}}, // x^4 + x + 1
      {{3, 1}, {1, 1}},          // x + 1
      {{3, 2}, {1, 0, 1}},       // x^2 + 1
  };
  return table;
}

std::vector<int> poly_mod_p(std::vector<int> a, std::span<const int> b, int p) {
  // b monic
  const int db = static_cast<int>(b.size()) - 1;
  for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
    const int c = a[i] % p;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      a[i - db + j] = ((a[i - db + j] - c * b[j]) % p + p) % p;
    }
  }
  a.resize(std::max(0, db));
  return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) return false;
  }
  return true;
}

std::optional<std::pair<int, int>> prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  for (std::uint64_t p = 2; p <= q; ++p) {
    if (q % p != 0) continue;
    if (!is_prime(p)) return std::nullopt;
    int e = 0;
    while (q % p == 0) {
      q /= p;
      ++e;
    }
    if (q != 1) return std::nullopt;
    return std::make_pair(static_cast<int>(p), e);
  }
  return std::nullopt;
}

bool is_irreducible_mod_p(std::span<const int> poly, int p) {
  const int deg = static_cast<int>(poly.size()) - 1;
  if (deg < 1) return false;
  if (deg == 1) return true;
  for (int dd = 1; dd <= deg / 2; ++dd) {
    std::int64_t count = 1;
    for (int i = 0; i < dd; ++i) count *= p;
    for (std::int64_t v = 0; v < count; ++v) {
      std::vector<int> div(dd + 1);
      std::int64_t t = v;
      for (int i = 0; i < dd; ++i) {
        div[i] = static_cast<int>(t % p);
        t /= p;
      }
      div[dd] = 1;
      auto rem = poly_mod_p(std::vector<int>(poly.begin(), poly.end()), div, p);
      if (std::all_of(rem.begin(), rem.end(), [](int c) { return c == 0; })) {
        return false;
      }
    }
  }
  return true;
}

FieldPtr FiniteField::create(int p, int e) {
  if (p < 2 || !is_prime(static_cast<std::uint64_t>(p))) {
    fail(ErrorKind::InvalidArgument,
         "field characteristic " + std::to_string(p) + " is not prime");
  }
  if (e < 1 || e > 8) {
    fail(ErrorKind::InvalidArgument,
         "extension degree " + std::to_string(e) + " outside 1..8");
  }
  std::uint64_t q = 1;
  for (int i = 0; i < e; ++i) q *= static_cast<std::uint64_t>(p);
  if (q > (1u << 16)) {
    fail(ErrorKind::InvalidArgument,
         "field order " + std::to_string(q) + " exceeds 2^16");
  }

  static std::mutex mu;
  static std::map<std::pair<int, int>, FieldPtr> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find({p, e}); it != cache.end()) return it->second;

  std::vector<int> modulus;
  if (auto it = modulus_table().find({p, e}); it != modulus_table().end()) {
    modulus = it->second;
  } else {
    for (std::uint64_t v = 0; v < q; ++v) {
      std::vector<int> cand(e + 1);
      std::uint64_t t = v;
      for (int i = 0; i < e; ++i) {
        cand[i] = static_cast<int>(t % p);
        t /= p;
      }
      cand[e] = 1;
      if (is_irreducible_mod_p(cand, p)) {
        modulus = std::move(cand);
        break;
      }
    }
  }
  FieldPtr f(new FiniteField(p, e, std::move(modulus)));
  cache.emplace(std::make_pair(p, e), f);
  return f;
}

FieldPtr FiniteField::of_order(std::uint64_t q) {
  auto pe = prime_power(q);
  if (!pe) {
    fail(ErrorKind::InvalidArgument,
         "field order " + std::to_string(q) + " is not a prime power");
  }
  return create(pe->first, pe->second);
}

FiniteField::FiniteField(int p, int e, std::vector<int> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
  pow_p_.resize(e_ + 1);
  pow_p_[0] = 1;
  for (int i = 1; i <= e_; ++i) pow_p_[i] = pow_p_[i - 1] * p_;
  q_ = pow_p_[e_];

  const std::uint64_t group = q_ - 1;
  const auto factors = prime_factors(group);
  auto slow_pow = [&](Elem a, std::uint64_t k) {
    Elem r = 1;
    while (k) {
      if (k & 1) r = mul_by_reduction(r, a);
      a = mul_by_reduction(a, a);
      k >>= 1;
    }
    return r;
  };
  for (Elem g = 1; g < q_; ++g) {
    bool primitive = true;
    for (auto r : factors) {
      if (slow_pow(g, group / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      primitive_ = g;
      break;
    }
  }
  exp_.resize(2 * group + 1);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint64_t i = 0; i < 2 * group + 1; ++i) {
    exp_[i] = x;
    if (i < group) log_[x] = static_cast<std::uint32_t>(i);
    x = mul_by_reduction(x, primitive_);
  }
}

bool FiniteField::same_as(const FiniteField& other) const {
  return this == &other || (p_ == other.p_ && e_ == other.e_ &&
                            modulus_ == other.modulus_);
}

std::string FiniteField::name() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  return os.str();
}

Elem FiniteField::add(Elem a, Elem b) const {
  if (p_ == 2) return a ^ b;
  if (e_ == 1) return (a + b) % p_;
  Elem r = 0;
  for (int i = 0; i < e_; ++i) {
    const Elem da = a % p_, db = b % p_;
    r += ((da + db) % p_) * pow_p_[i];
    a /= p_;
    b /= p_;
  }
  return r;
}

Elem FiniteField::neg(Elem a) const {
  if (p_ == 2) return a;
  if (e_ == 1) return (p_ - a) % p_;
  Elem r = 0;
  for (int i = 0; i < e_; ++i) {
    r += ((p_ - a % p_) % p_) * pow_p_[i];
    a /= p_;
  }
  return r;
}

Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) fail(ErrorKind::InvalidArgument, "division by zero in " + name());
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Elem FiniteField::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem FiniteField::pow(Elem a, std::uint64_t k) const {
  if (k == 0) return 1;
  if (a == 0) return 0;
  return exp_[(static_cast<std::uint64_t>(log_[a]) * (k % (q_ - 1))) % (q_ - 1)];
}

Elem FiniteField::apply(ArithOp op, Elem a, Elem b) const {
  switch (op) {
    case ArithOp::add: return add(a, b);
    case ArithOp::sub: return sub(a, b);
    case ArithOp::mul: return mul(a, b);
    case ArithOp::div: return div(a, b);
  }
  return 0;
}

Elem FiniteField::from_int(std::int64_t c) const {
  return static_cast<Elem>(((c % p_) + p_) % p_);
}

std::vector<int> FiniteField::coords(Elem a) const {
  std::vector<int> c(e_);
  for (int i = 0; i < e_; ++i) {
    c[i] = static_cast<int>(a % p_);
    a /= p_;
  }
  return c;
}

Elem FiniteField::from_coords(std::span<const int> c) const {
  require(static_cast<int>(c.size()) == e_, "coordinate vector length mismatch");
  Elem r = 0;
  for (int i = 0; i < e_; ++i) {
    require(c[i] >= 0 && c[i] < p_, "coordinate out of range");
    r += static_cast<Elem>(c[i]) * pow_p_[i];
  }
  return r;
}

std::uint64_t FiniteField::multiplicative_order(Elem a) const {
  require(a != 0 && a < q_, "multiplicative order of zero or foreign element");
  const std::uint64_t group = q_ - 1;
  return group / std::gcd<std::uint64_t, std::uint64_t>(group, log_[a]);
}

Elem FiniteField::mul_by_reduction(Elem a, Elem b) const {
  const auto ca = coords(a), cb = coords(b);
  std::vector<int> prod(2 * e_ - 1, 0);
  for (int i = 0; i < e_; ++i) {
    for (int j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  }
  auto rem = poly_mod_p(std::move(prod), modulus_, p_);
  rem.resize(e_, 0);
  Elem r = 0;
  for (int i = 0; i < e_; ++i) r += static_cast<Elem>(rem[i]) * pow_p_[i];
  return r;
}

FieldElement::FieldElement(FieldPtr field, Elem value)
    : field_(std::move(field)), value_(value) {
  require(field_ != nullptr, "null field");
  require(field_->contains(value_), "element outside " + field_->name());
}

FieldElement arith(const FieldElement& a, const FieldElement& b, ArithOp op) {
  if (!a.field()->same_as(*b.field())) {
    fail(ErrorKind::Mismatch, "operands from " + a.field()->name() + " and " +
                                  b.field()->name());
  }
  if (op == ArithOp::div && b.is_zero()) {
    fail(ErrorKind::InvalidArgument, "division by zero");
  }
  return FieldElement(a.field(), a.field()->apply(op, a.value(), b.value()));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  return arith(a, b, ArithOp::add);
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  return arith(a, b, ArithOp::sub);
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  return arith(a, b, ArithOp::mul);
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  return arith(a, b, ArithOp::div);
}

// --- polynomials -----------------------------------------------------------

Polynomial::Polynomial(FieldPtr field, std::vector<Elem> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  trim();
}

Polynomial Polynomial::monomial(FieldPtr field, Elem coeff, std::size_t degree) {
  std::vector<Elem> c(degree + 1, 0);
  c[degree] = coeff;
  return Polynomial(std::move(field), std::move(c));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Elem Polynomial::eval(Elem x) const {
  Elem r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    r = field_->add(field_->mul(r, x), *it);
  }
  return r;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  const Elem inv = field_->inv(leading());
  std::vector<Elem> c(coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = field_->mul(coeffs_[i], inv);
  return Polynomial(field_, std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  const auto& f = *a.field_;
  std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.add(a.coeff(i), b.coeff(i));
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  const auto& f = *a.field_;
  std::vector<Elem> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = f.sub(a.coeff(i), b.coeff(i));
  return Polynomial(a.field_, std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
  const auto& f = *a.field_;
  std::vector<Elem> c(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] = f.add(c[i + j], f.mul(a.coeffs_[i], b.coeffs_[j]));
    }
  }
  return Polynomial(a.field_, std::move(c));
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  require(!b.is_zero(), "polynomial division by zero");
  const auto& f = *a.field();
  std::vector<Elem> rem = a.coeffs();
  const int db = b.degree();
  std::vector<Elem> quot(std::max(0, a.degree() - db + 1), 0);
  const Elem lead_inv = f.inv(b.leading());
  for (int i = a.degree(); i >= db; --i) {
    const Elem c = f.mul(rem[i], lead_inv);
    if (c == 0) continue;
    quot[i - db] = c;
    for (int j = 0; j <= db; ++j) {
      rem[i - db + j] = f.sub(rem[i - db + j], f.mul(c, b.coeff(j)));
    }
  }
  return {Polynomial(a.field(), std::move(quot)), Polynomial(a.field(), std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    auto r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial lcm(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial(a.field());
  return divmod(a * b, gcd(a, b)).first.monic();
}

// --- extensions ------------------------------------------------------------

FieldExtension FieldExtension::create(const FieldPtr& base, int m) {
  require(base != nullptr, "null base field");
  require(m >= 1, "extension degree must be positive");
  FieldExtension ext;
  ext.base = base;
  ext.m = m;
  ext.big = FiniteField::create(base->characteristic(), base->degree() * m);
  const auto& big = *ext.big;

  Elem root = 0;
  if (base->degree() == 1) {
    root = 0;  // unused
  } else {
    bool found = false;
    for (Elem r = 0; r < big.order() && !found; ++r) {
      Elem acc = 0;
      Elem power = 1;
      for (int c : base->modulus()) {
        acc = big.add(acc, big.mul(big.from_int(c), power));
        power = big.mul(power, r);
      }
      if (acc == 0) {
        root = r;
        found = true;
      }
    }
    if (!found) fail(ErrorKind::InvalidArgument, "no embedding of base field found");
  }

  ext.embed.resize(base->order());
  ext.restrict.assign(big.order(), -1);
  for (Elem a = 0; a < base->order(); ++a) {
    Elem img = 0;
    if (base->degree() == 1) {
      img = big.from_int(a);
    } else {
      Elem power = 1;
      for (int c : base->coords(a)) {
        img = big.add(img, big.mul(big.from_int(c), power));
        power = big.mul(power, root);
      }
    }
    ext.embed[a] = img;
    ext.restrict[img] = a;
  }
  return ext;
}

std::set<std::uint64_t> cyclotomic_coset(std::uint64_t i, std::uint64_t n,
                                         std::uint64_t q, std::optional<int> m) {
  require(n >= 1, "coset modulus must be positive");
  require(i < n, "coset representative must be < n");
  require(q >= 2, "field order must be >= 2");
  if (m) {
    require(*m >= 1, "extension degree must be positive");
    // (q^m - 1) mod n without overflow
    std::uint64_t r = 1 % n;
    for (int j = 0; j < *m; ++j) r = (r * (q % n)) % n;
    if ((r + n - 1) % n != 0) {
      fail(ErrorKind::InvalidArgument, std::to_string(n) + " does not divide " +
                                           std::to_string(q) + "^" +
                                           std::to_string(*m) + " - 1");
    }
  } else if (std::gcd(n, q) != 1) {
    fail(ErrorKind::InvalidArgument, "coset modulus shares a factor with q");
  }
  std::set<std::uint64_t> coset;
  std::uint64_t x = i;
  while (coset.insert(x).second) x = (x * (q % n)) % n;
  return coset;
}

Polynomial minimal_polynomial(const FieldExtension& ext, Elem beta) {
  const auto& big = *ext.big;
  if (!big.contains(beta)) {
    fail(ErrorKind::InvalidArgument, "element is not in " + big.name());
  }
  const std::uint64_t q = ext.base->order();
  std::vector<Elem> conj;
  Elem c = beta;
  do {
    conj.push_back(c);
    c = big.pow(c, q);
  } while (c != beta);

  Polynomial prod(ext.big, {1});
  for (Elem r : conj) prod = prod * Polynomial(ext.big, {big.neg(r), 1});

  std::vector<Elem> coeffs;
  for (Elem a : prod.coeffs()) {
    const auto back = ext.restrict[a];
    if (back < 0) fail(ErrorKind::InvalidArgument, "minimal polynomial left the base field");
    coeffs.push_back(static_cast<Elem>(back));
  }
  return Polynomial(ext.base, std::move(coeffs));
}

}  // namespace boadd
