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

#include "boadd/codes.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include "boadd/error.hpp"

namespace boadd {
namespace {

constexpr std::uint64_t kEnumerationBudget = std::uint64_t{1} << 24;
constexpr std::uint64_t kDependenceBudget = 50'000'000;

std::uint64_t ipow(std::uint64_t b, std::uint64_t e) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (r > (std::uint64_t{1} << 62) / b) return UINT64_MAX;
    r *= b;
  }
  return r;
}

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const FiniteField& f, GfMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols && row < m.rows; ++col) {
    std::size_t piv = row;
    while (piv < m.rows && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(piv, j), m.at(row, j));
    }
    const Elem inv = f.inv(m.at(row, col));
    for (std::size_t j = 0; j < m.cols; ++j) m.at(row, j) = f.mul(m.at(row, j), inv);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      const Elem c = m.at(i, col);
      for (std::size_t j = 0; j < m.cols; ++j) {
        m.at(i, j) = f.sub(m.at(i, j), f.mul(c, m.at(row, j)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

// Size of the smallest linearly dependent set of rows of m, or rows + 1
// when the rows are independent.
std::size_t smallest_dependent_rows(const FiniteField& f, const GfMatrix& m) {
  const std::size_t n = m.rows, w = m.cols;
  if (w == 0) return 1;
  std::uint64_t visited = 0;

  // basis[d] holds the reduced rows chosen so far with their pivot columns
  std::vector<std::vector<Elem>> basis;
  std::vector<std::size_t> pivot;

  auto reduce = [&](std::vector<Elem> v) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Elem c = v[pivot[b]];
      if (c == 0) continue;
      for (std::size_t j = 0; j < w; ++j) v[j] = f.sub(v[j], f.mul(c, basis[b][j]));
    }
    return v;
  };

  std::function<bool(std::size_t, std::size_t)> dfs = [&](std::size_t start,
                                                           std::size_t left) {
    for (std::size_t i = start; i + left <= n; ++i) {
      if (++visited > kDependenceBudget) {
        fail(ErrorKind::Budget, "dependent-row search exceeded its budget");
      }
      std::vector<Elem> v(m.data.begin() + i * w, m.data.begin() + (i + 1) * w);
      v = reduce(std::move(v));
      std::size_t p = 0;
      while (p < w && v[p] == 0) ++p;
      if (left == 1) {
        if (p == w) return true;
        continue;
      }
      if (p == w) continue;  // smaller dependency; cannot occur after earlier rounds
      const Elem inv = f.inv(v[p]);
      for (auto& x : v) x = f.mul(x, inv);
      basis.push_back(std::move(v));
      pivot.push_back(p);
      const bool found = dfs(i + 1, left - 1);
      basis.pop_back();
      pivot.pop_back();
      if (found) return true;
    }
    return false;
  };

  for (std::size_t t = 1; t <= std::min(n, w + 1); ++t) {
    if (dfs(0, t)) return t;
  }
  return n + 1;
}

}  // namespace

GfMatrix GfMatrix::transpose() const {
  GfMatrix t(cols, rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
  }
  return t;
}

std::size_t rank(const FiniteField& f, GfMatrix m) { return rref(f, m).size(); }

GfMatrix null_space(const FiniteField& f, GfMatrix m) {
  const auto pivots = rref(f, m);
  std::vector<bool> is_pivot(m.cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < m.cols; ++j) {
    if (!is_pivot[j]) free_cols.push_back(j);
  }
  GfMatrix basis(m.cols, free_cols.size());
  for (std::size_t b = 0; b < free_cols.size(); ++b) {
    const std::size_t fc = free_cols[b];
    basis.at(fc, b) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      basis.at(pivots[r], b) = f.neg(m.at(r, fc));
    }
  }
  return basis;
}

LinearCode make_code(FieldPtr field, GfMatrix generator, std::string label) {
  require(field != nullptr, "code requires a field");
  require(generator.data.size() == generator.rows * generator.cols,
          "generator storage does not match its shape");
  require(generator.cols <= generator.rows, "code dimension exceeds length");
  for (Elem x : generator.data) require(field->contains(x), "generator entry outside the field");
  if (rank(*field, generator) != generator.cols) {
    fail(ErrorKind::InvalidArgument, "generator matrix does not have full column rank");
  }
  LinearCode c;
  c.field = std::move(field);
  c.n = generator.rows;
  c.k = generator.cols;
  c.generator = std::move(generator);
  c.label = std::move(label);
  return c;
}

std::vector<Elem> encode(const LinearCode& code, const std::vector<Elem>& m) {
  if (m.size() != code.k) {
    fail(ErrorKind::InvalidArgument, "message length " + std::to_string(m.size()) +
                                         " does not match dimension " +
                                         std::to_string(code.k));
  }
  const auto& f = *code.field;
  std::vector<Elem> c(code.n, 0);
  for (std::size_t j = 0; j < code.k; ++j) {
    require(f.contains(m[j]), "message entry outside the field");
    if (m[j] == 0) continue;
    for (std::size_t i = 0; i < code.n; ++i) {
      c[i] = f.add(c[i], f.mul(code.generator.at(i, j), m[j]));
    }
  }
  return c;
}

LinearCode dual_code(const LinearCode& code) {
  auto basis = null_space(*code.field, code.generator.transpose());
  std::string label = code.label;
  const std::string suffix = "-dual";
  if (label.size() > suffix.size() &&
      label.compare(label.size() - suffix.size(), suffix.size(), suffix) == 0) {
    label.resize(label.size() - suffix.size());
  } else {
    label += suffix;
  }
  return make_code(code.field, std::move(basis), label);
}

std::size_t min_distance(const LinearCode& code) {
  if (code.k == 0) return code.n + 1;
  if (ipow(code.q(), code.k) > kEnumerationBudget) {
    fail(ErrorKind::Budget, "q^k exceeds the 2^24 enumeration budget");
  }
  std::size_t best = code.n + 1;
  bool first = true;
  for_each_codeword(code, [&](const std::vector<Elem>&, const std::vector<Elem>& c) {
    if (first) {
      first = false;
      return;
    }
    std::size_t w = 0;
    for (Elem x : c) w += (x != 0);
    best = std::min(best, w);
  });
  return best;
}

std::size_t min_distance_by_dependence(const LinearCode& code) {
  const auto dual = dual_code(code);
  return smallest_dependent_rows(*code.field, dual.generator);
}

std::size_t dual_distance(const LinearCode& code) {
  const std::size_t r = code.n - code.k;
  if (ipow(code.q(), r) <= (std::uint64_t{1} << 16)) return min_distance(dual_code(code));
  return smallest_dependent_rows(*code.field, code.generator);
}

CodeReport describe(const LinearCode& code) {
  CodeReport r;
  r.n = code.n;
  r.k = code.k;
  r.q = code.q();
  r.distance = ipow(code.q(), code.k) <= kEnumerationBudget
                   ? min_distance(code)
                   : min_distance_by_dependence(code);
  r.dual_distance = dual_distance(code);
  r.strength = r.dual_distance - 1;
  return r;
}

LinearCode hamming_dual_code(Elem q, std::size_t n) {
  auto field = FiniteField::of_order(q);
  const std::uint64_t target = static_cast<std::uint64_t>(q - 1) * n + 1;
  std::size_t r = 0;
  std::uint64_t pw = 1;
  while (pw < target) {
    pw *= q;
    ++r;
  }
  if (pw != target || r < 2) {
    fail(ErrorKind::InvalidArgument,
         "no Hamming code of length " + std::to_string(n) + " over GF(" +
             std::to_string(q) + "); need n = (q^r - 1)/(q - 1) with r >= 2");
  }
  GfMatrix g(n, r);
  std::size_t row = 0;
  std::vector<Elem> v(r, 0);
  for (std::uint64_t idx = 1; idx < pw; ++idx) {
    std::uint64_t t = idx;
    for (std::size_t i = r; i-- > 0;) {
      v[i] = static_cast<Elem>(t % q);
      t /= q;
    }
    std::size_t lead = 0;
    while (v[lead] == 0) ++lead;
    if (v[lead] != 1) continue;
    for (std::size_t i = 0; i < r; ++i) g.at(row, i) = v[i];
    ++row;
  }
  return make_code(std::move(field), std::move(g), "hamming-dual");
}

Polynomial bch_generator_polynomial(Elem q, int m, int designed) {
  auto base = FiniteField::of_order(q);
  require(m >= 1, "extension degree must be positive");
  const std::uint64_t qm = ipow(q, static_cast<std::uint64_t>(m));
  if (designed < 2 || static_cast<std::uint64_t>(designed) > qm - 1) {
    fail(ErrorKind::InvalidArgument,
         "designed distance " + std::to_string(designed) + " outside 2.." +
             std::to_string(qm - 1));
  }
  const auto ext = FieldExtension::create(base, m);
  const Elem alpha = ext.big->primitive_element();
  const std::uint64_t n0 = qm - 1;
  Polynomial g(base, {1});
  std::set<std::uint64_t> covered;
  for (int i = 1; i <= designed - 2; ++i) {
    if (covered.count(static_cast<std::uint64_t>(i))) continue;
    const auto coset = cyclotomic_coset(static_cast<std::uint64_t>(i), n0, q, m);
    covered.insert(coset.begin(), coset.end());
    g = lcm(g, minimal_polynomial(ext, ext.big->pow(alpha, static_cast<std::uint64_t>(i))));
  }
  return g;
}

LinearCode bch_ext_code(Elem q, int m, int designed) {
  const auto g = bch_generator_polynomial(q, m, designed);
  const auto& f = *g.field();
  const std::size_t n0 = static_cast<std::size_t>(ipow(q, static_cast<std::uint64_t>(m)) - 1);
  const std::size_t deg = static_cast<std::size_t>(g.degree());
  const std::size_t k = n0 - deg;
  GfMatrix gen(n0 + 1, k);
  for (std::size_t j = 0; j < k; ++j) {
    Elem sum = 0;
    for (std::size_t i = 0; i <= deg; ++i) {
      gen.at(i + j, j) = g.coeff(i);
      sum = f.add(sum, g.coeff(i));
    }
    gen.at(n0, j) = f.neg(sum);
  }
  return make_code(g.field(), std::move(gen), "bch-ext");
}

BoundCheck bch_dimension_bound_check(const LinearCode& code, int designed, int m, Elem q) {
  require(code.q() == q, "code field does not match q");
  require(m >= 1 && designed >= 2, "invalid BCH parameters");
  BoundCheck r;
  const std::uint64_t limit = ipow(q, static_cast<std::uint64_t>((m + 1) / 2)) + 2;
  r.applicable = static_cast<std::uint64_t>(designed) <= limit;
  const long long num = static_cast<long long>(q - 1) * (designed - 2);
  const long long ceil_term = (num + q - 1) / q;
  r.bound = static_cast<long long>(code.n) - m * ceil_term - 1;
  r.slack = static_cast<long long>(code.k) - r.bound;
  r.holds = r.applicable && r.slack >= 0;
  return r;
}

LinearCode builtin_code(const std::string& name) {
  auto build = [](Elem q, std::size_t k, std::vector<std::vector<Elem>> rows,
                  std::string label) {
    GfMatrix g(rows.size(), k);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = 0; j < k; ++j) g.at(i, j) = rows[i][j];
    }
    return make_code(FiniteField::of_order(q), std::move(g), std::move(label));
  };
  if (name == "example1") {
    return build(2, 3,
                 {{1, 0, 0}, {0, 1, 0}, {1, 1, 0}, {0, 0, 1},
                  {1, 0, 1}, {0, 1, 1}, {1, 1, 1}},
                 "example1");
  }
  if (name == "example2") {
    // alpha = 2, alpha^2 = alpha + 1 = 3
    return build(4, 2, {{1, 0}, {0, 1}, {1, 3}, {3, 3}, {3, 1}}, "example2");
  }
  if (name == "example3") {
    std::vector<std::vector<Elem>> rows;
    for (std::size_t i = 0; i < 9; ++i) {
      std::vector<Elem> r(9, 0);
      r[i] = 1;
      rows.push_back(r);
    }
    for (const char* bits : {"110011100", "011001110", "001100111", "110101111",
                             "101001011", "100111001", "100010111"}) {
      std::vector<Elem> r;
      for (const char* c = bits; *c; ++c) r.push_back(static_cast<Elem>(*c - '0'));
      rows.push_back(r);
    }
    return build(2, 9, rows, "example3");
  }
  fail(ErrorKind::InvalidArgument, "unknown builtin code '" + name + "'");
}

LinearCode parse_code(std::istream& in) {
  long long q = 0, n = 0, k = 0;
  if (!(in >> q >> n >> k)) fail(ErrorKind::Parse, "code file: expected header 'q n k'");
  if (q < 2 || n < 1 || k < 0 || k > n || n > 100000) {
    fail(ErrorKind::Parse, "code file: invalid header values");
  }
  if (!prime_power(static_cast<std::uint64_t>(q))) {
    fail(ErrorKind::Parse, "code file: q is not a prime power");
  }
  auto field = FiniteField::of_order(static_cast<std::uint64_t>(q));
  GfMatrix g(static_cast<std::size_t>(n), static_cast<std::size_t>(k));
  for (auto& x : g.data) {
    long long v = 0;
    if (!(in >> v)) fail(ErrorKind::Parse, "code file: truncated generator matrix");
    if (v < 0 || v >= q) fail(ErrorKind::Parse, "code file: entry outside 0..q-1");
    x = static_cast<Elem>(v);
  }
  std::string extra;
  if (in >> extra) fail(ErrorKind::Parse, "code file: trailing data");
  return make_code(std::move(field), std::move(g), "user");
}

LinearCode load_code(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open code file " + path);
  return parse_code(in);
}

std::string format_code(const LinearCode& code) {
  std::ostringstream os;
  os << code.q() << ' ' << code.n << ' ' << code.k << '\n';
  for (std::size_t i = 0; i < code.n; ++i) {
    for (std::size_t j = 0; j < code.k; ++j) {
      if (j) os << ' ';
      os << code.generator.at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace boadd
