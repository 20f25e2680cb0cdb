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

#include "boadd/cayley.hpp"

#include <algorithm>
#include <unordered_map>

#include "boadd/codes.hpp"
#include "boadd/error.hpp"

namespace boadd {
namespace {

constexpr std::uint64_t kMaxCycleLength = std::uint64_t{1} << 24;
constexpr std::uint64_t kFlatTable = std::uint64_t{1} << 24;

std::uint64_t order_pow(Elem q, std::size_t k) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (r > (std::uint64_t{1} << 40)) {
      fail(ErrorKind::Budget, "group F_q^k is too large to enumerate");
    }
    r *= q;
  }
  return r;
}

std::uint64_t index_sub(const FiniteField& f, std::uint64_t a, std::uint64_t b,
                        std::size_t k) {
  const Elem q = f.order();
  std::uint64_t r = 0, scale = 1;
  for (std::size_t i = 0; i < k; ++i) {
    r += f.sub(static_cast<Elem>(a % q), static_cast<Elem>(b % q)) * scale;
    a /= q;
    b /= q;
    scale *= q;
  }
  return r;
}

}  // namespace

std::uint64_t vec_index(const Vec& v, Elem q) {
  std::uint64_t r = 0;
  for (std::size_t i = v.size(); i-- > 0;) r = r * q + v[i];
  return r;
}

Vec vec_from_index(std::uint64_t idx, std::size_t k, Elem q) {
  Vec v(k);
  for (std::size_t i = 0; i < k; ++i) {
    v[i] = static_cast<Elem>(idx % q);
    idx /= q;
  }
  return v;
}

Vec vec_add(const FiniteField& f, const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.add(a[i], b[i]);
  return r;
}

Vec vec_sub(const FiniteField& f, const Vec& a, const Vec& b) {
  require(a.size() == b.size(), "vector length mismatch");
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = f.sub(a[i], b[i]);
  return r;
}

GeneratingSet standard_generators(FieldPtr field, std::size_t k) {
  require(field != nullptr, "null field");
  require(k >= 1, "arity must be positive");
  GeneratingSet s;
  s.arity = k;
  Elem basis = 1;
  std::vector<Elem> powers;
  for (int j = 0; j < field->degree(); ++j) {
    powers.push_back(basis);
    basis *= static_cast<Elem>(field->characteristic());
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (Elem x : powers) {
      Vec v(k, 0);
      v[i] = x;
      s.elements.push_back(std::move(v));
    }
  }
  s.field = std::move(field);
  return s;
}

bool generates(const FiniteField& f, std::size_t k, const std::vector<Vec>& elements) {
  const std::size_t e = static_cast<std::size_t>(f.degree());
  auto prime = FiniteField::create(f.characteristic(), 1);
  GfMatrix m(elements.size(), k * e);
  for (std::size_t r = 0; r < elements.size(); ++r) {
    require(elements[r].size() == k, "generator arity mismatch");
    for (std::size_t i = 0; i < k; ++i) {
      const auto c = f.coords(elements[r][i]);
      for (std::size_t j = 0; j < e; ++j) m.at(r, i * e + j) = static_cast<Elem>(c[j]);
    }
  }
  return rank(*prime, std::move(m)) == k * e;
}

std::vector<Vec> Cycle::transitions() const {
  std::vector<Vec> out;
  out.reserve(vertices.size());
  for (std::size_t j = 1; j <= vertices.size(); ++j) {
    out.push_back(vec_sub(*field, vertices[j % vertices.size()], vertices[j - 1]));
  }
  return out;
}

Cycle eulerian_cycle(const GeneratingSet& s) {
  require(s.field != nullptr, "null field");
  const auto& f = *s.field;
  const Elem q = f.order();
  if (s.elements.empty() || !generates(f, s.arity, s.elements)) {
    fail(ErrorKind::InvalidArgument, "generators do not generate F_q^k; Cayley graph is disconnected");
  }
  const std::uint64_t vcount = order_pow(q, s.arity);
  const std::uint64_t total = vcount * s.elements.size();
  if (total > kMaxCycleLength) {
    fail(ErrorKind::Budget, "Eulerian cycle length " + std::to_string(total) +
                                " exceeds 2^24");
  }
  const std::size_t deg = s.elements.size();
  std::vector<std::uint64_t> gen_idx;
  for (const auto& g : s.elements) gen_idx.push_back(vec_index(g, q));

  auto add_idx = [&](std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0, scale = 1;
    for (std::size_t i = 0; i < s.arity; ++i) {
      r += f.add(static_cast<Elem>(a % q), static_cast<Elem>(b % q)) * scale;
      a /= q;
      b /= q;
      scale *= q;
    }
    return r;
  };

  std::vector<std::uint32_t> next(vcount, 0);
  std::vector<std::uint64_t> stack{0};
  std::vector<std::uint64_t> path;
  path.reserve(total + 1);
  while (!stack.empty()) {
    const std::uint64_t v = stack.back();
    if (next[v] < deg) {
      stack.push_back(add_idx(v, gen_idx[next[v]++]));
    } else {
      path.push_back(v);
      stack.pop_back();
    }
  }
  std::reverse(path.begin(), path.end());
  path.pop_back();

  Cycle c;
  c.field = s.field;
  c.arity = s.arity;
  c.vertices.reserve(path.size());
  for (auto idx : path) c.vertices.push_back(vec_from_index(idx, s.arity, q));
  return c;
}

BalanceReport check_balanced(const FiniteField& f, std::size_t arity,
                             const std::vector<Vec>& vertices) {
  std::vector<std::uint64_t> idx;
  idx.reserve(vertices.size());
  for (const auto& v : vertices) {
    require(v.size() == arity, "vertex arity mismatch");
    for (Elem x : v) require(f.contains(x), "vertex entry outside the field");
    idx.push_back(vec_index(v, f.order()));
  }
  return check_balanced_indexed(f, arity, idx);
}

BalanceReport check_balanced_indexed(const FiniteField& f, std::size_t arity,
                                     const std::vector<std::uint64_t>& vertices) {
  require(!vertices.empty(), "cycle must be nonempty");
  const Elem q = f.order();
  const std::uint64_t vcount = order_pow(q, arity);
  if (vcount > (std::uint64_t{1} << 26)) {
    fail(ErrorKind::Budget, "F_q^l has more than 2^26 elements");
  }
  const std::size_t n = vertices.size();
  for (auto v : vertices) require(v < vcount, "vertex index outside F_q^l");
  BalanceReport rep;
  rep.starts_at_zero = vertices.front() == 0;

  // label ids in order of first appearance
  std::unordered_map<std::uint64_t, std::uint32_t> label_id;
  std::vector<std::uint64_t> labels;
  std::vector<std::uint32_t> step_label(n);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t s = index_sub(f, vertices[(j + 1) % n], vertices[j], arity);
    auto [it, inserted] = label_id.emplace(s, static_cast<std::uint32_t>(labels.size()));
    if (inserted) labels.push_back(s);
    step_label[j] = it->second;
  }
  const std::size_t lcount = labels.size();

  std::vector<bool> seen(vcount, false);
  for (auto v : vertices) seen[v] = true;
  rep.covers_all = std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });

  std::vector<Vec> label_vecs;
  for (auto s : labels) label_vecs.push_back(vec_from_index(s, arity, q));
  rep.generating = generates(f, arity, label_vecs);

  const bool flat = vcount * lcount <= kFlatTable;
  std::vector<std::uint32_t> table;
  std::unordered_map<std::uint64_t, std::uint32_t> sparse;
  if (flat) table.assign(vcount * lcount, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const std::uint64_t key = vertices[j] * lcount + step_label[j];
    if (flat) {
      ++table[key];
    } else {
      ++sparse[key];
    }
  }
  auto count = [&](std::uint64_t v, std::size_t l) -> std::uint32_t {
    const std::uint64_t key = v * lcount + l;
    if (flat) return table[key];
    auto it = sparse.find(key);
    return it == sparse.end() ? 0 : it->second;
  };

  std::vector<std::uint32_t> mu(lcount);
  for (std::size_t l = 0; l < lcount; ++l) {
    mu[l] = count(0, l);
    rep.mu[label_vecs[l]] = mu[l];
  }
  for (std::uint64_t v = 0; v < vcount; ++v) {
    for (std::size_t l = 0; l < lcount; ++l) {
      const auto c = count(v, l);
      if (c == mu[l] && mu[l] >= 1) continue;
      ++rep.violation_count;
      if (rep.violations.size() < BalanceReport::kMaxViolations) {
        rep.violations.push_back({vec_from_index(v, arity, q), label_vecs[l], c, mu[l]});
      }
    }
  }
  rep.balanced = rep.starts_at_zero && rep.generating && rep.covers_all &&
                 rep.violation_count == 0;
  return rep;
}

}  // namespace boadd
