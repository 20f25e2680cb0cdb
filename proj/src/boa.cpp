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

#include "boadd/boa.hpp"

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include "boadd/error.hpp"

namespace boadd {
namespace {

constexpr double kVerifyBudget = 1e8;
constexpr std::size_t kMaxFailures = 100;

double binomial(std::size_t n, std::size_t k) {
  double r = 1;
  for (std::size_t i = 0; i < k; ++i) r = r * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return r;
}

std::uint64_t checked_pow(Elem q, std::size_t l) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < l; ++i) {
    if (r > (std::uint64_t{1} << 40)) fail(ErrorKind::Budget, "q^l is too large");
    r *= q;
  }
  return r;
}

void check_budget(const BoaArray& a, std::size_t l) {
  if (l > a.rows) {
    fail(ErrorKind::InvalidArgument, "strength " + std::to_string(l) +
                                         " exceeds the number of rows");
  }
  const double work = binomial(a.rows, l) * static_cast<double>(checked_pow(a.q(), l));
  if (work > kVerifyBudget) {
    fail(ErrorKind::Budget, "C(n,l) q^l = " + std::to_string(work) +
                                " exceeds the 1e8 verification budget");
  }
}

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t l) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(l);
  for (std::size_t i = 0; i < l; ++i) cur[i] = i;
  if (l > n) return out;
  for (;;) {
    out.push_back(cur);
    std::size_t i = l;
    while (i > 0 && cur[i - 1] == n - l + (i - 1)) --i;
    if (i == 0) return out;
    ++cur[i - 1];
    for (std::size_t j = i; j < l; ++j) cur[j] = cur[j - 1] + 1;
  }
}

std::vector<std::uint64_t> restricted_indices(const BoaArray& a,
                                              const std::vector<std::size_t>& rows) {
  const Elem q = a.q();
  std::vector<std::uint64_t> idx(a.cols, 0);
  for (std::size_t j = 0; j < a.cols; ++j) {
    std::uint64_t v = 0;
    for (std::size_t t = rows.size(); t-- > 0;) v = v * q + a.at(rows[t], j);
    idx[j] = v;
  }
  return idx;
}

std::string rows_text(const std::vector<std::size_t>& rows) {
  std::string s = "{";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rows[i]);
  }
  return s + "}";
}

}  // namespace

unsigned worker_count(std::size_t jobs) {
  unsigned n = std::thread::hardware_concurrency();
  if (n == 0) n = 1;
  if (const char* env = std::getenv("BOA_THREADS")) {
    const long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(cap));
  }
  if (jobs < n) n = static_cast<unsigned>(std::max<std::size_t>(jobs, 1));
  return n;
}

Vec BoaArray::column(std::size_t j) const {
  Vec c(rows);
  for (std::size_t i = 0; i < rows; ++i) c[i] = at(i, j);
  return c;
}

BoaArray build_boa(const LinearCode& code, const Cycle& cycle) {
  if (!cycle.field || !cycle.field->same_as(*code.field) || cycle.arity != code.k) {
    fail(ErrorKind::Mismatch, "cycle is not over F_q^k of the code");
  }
  require(!cycle.vertices.empty(), "empty cycle");
  BoaArray a;
  a.field = code.field;
  a.rows = code.n;
  a.cols = cycle.length();
  a.entries.assign(a.rows * a.cols, 0);
  for (std::size_t j = 0; j < a.cols; ++j) {
    const auto c = encode(code, cycle.vertices[j]);
    for (std::size_t i = 0; i < a.rows; ++i) a.entries[i * a.cols + j] = c[i];
  }
  a.strength = dual_distance(code) - 1;
  const std::uint64_t qs = checked_pow(a.q(), a.strength);
  a.lambda = a.cols % qs == 0 ? a.cols / qs : 0;
  std::ostringstream os;
  os << code.label << " [" << code.n << "," << code.k << "]_" << code.q()
     << " cycle N=" << cycle.length();
  a.provenance = os.str();
  return a;
}

BoaArray build_boa(const LinearCode& code) {
  return build_boa(code, eulerian_cycle(standard_generators(code.field, code.k)));
}

BoaArray oa_from_code(const LinearCode& code) {
  const std::uint64_t count = checked_pow(code.q(), code.k);
  if (count > (std::uint64_t{1} << 24)) fail(ErrorKind::Budget, "q^k exceeds 2^24");
  BoaArray a;
  a.field = code.field;
  a.rows = code.n;
  a.cols = static_cast<std::size_t>(count);
  a.entries.assign(a.rows * a.cols, 0);
  std::size_t j = 0;
  for_each_codeword(code, [&](const std::vector<Elem>&, const std::vector<Elem>& c) {
    for (std::size_t i = 0; i < a.rows; ++i) a.entries[i * a.cols + j] = c[i];
    ++j;
  });
  a.strength = dual_distance(code) - 1;
  a.lambda = count / checked_pow(a.q(), a.strength);
  a.provenance = code.label + " codewords";
  return a;
}

OaResult verify_oa(const BoaArray& a, std::size_t l) {
  check_budget(a, l);
  const std::uint64_t qs = checked_pow(a.q(), l);
  OaResult r;
  if (a.cols % qs != 0) return r;
  r.lambda = a.cols / qs;
  std::vector<std::uint32_t> counts(qs);
  for (const auto& rows : subsets(a.rows, l)) {
    std::fill(counts.begin(), counts.end(), 0);
    for (auto v : restricted_indices(a, rows)) ++counts[v];
    for (auto c : counts) {
      if (c != r.lambda) return r;
    }
  }
  r.ok = true;
  return r;
}

VerificationReport verify_boa(const BoaArray& a, std::size_t l) {
  require(l >= 1, "strength must be at least 1");
  check_budget(a, l);
  VerificationReport rep;
  rep.strength = l;
  const auto oa = verify_oa(a, l);
  rep.oa_ok = oa.ok;
  rep.lambda = oa.lambda;
  if (!oa.ok) rep.failures.push_back("orthogonal-array property fails at strength " + std::to_string(l));

  rep.first_column_zero = true;
  for (std::size_t i = 0; i < a.rows; ++i) rep.first_column_zero &= a.at(i, 0) == 0;
  if (!rep.first_column_zero) rep.failures.push_back("first column is not zero");

  auto subs = subsets(a.rows, l);
  rep.per_subset.resize(subs.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t s; (s = next.fetch_add(1)) < subs.size();) {
      auto& out = rep.per_subset[s];
      out.rows = subs[s];
      out.balance = check_balanced_indexed(*a.field, l, restricted_indices(a, subs[s]));
      for (const auto& [label, mu] : out.balance.mu) out.generating_set.push_back(label);
    }
  };
  const unsigned threads = worker_count(subs.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  bool all = true;
  for (const auto& s : rep.per_subset) {
    if (s.balance.balanced) continue;
    all = false;
    if (rep.failures.size() < kMaxFailures) {
      std::string why;
      if (!s.balance.generating) why += " non-generating";
      if (!s.balance.covers_all) why += " incomplete";
      if (s.balance.violation_count) {
        why += " " + std::to_string(s.balance.violation_count) + " departure violations";
      }
      rep.failures.push_back("rows " + rows_text(s.rows) + ":" + why);
    }
  }
  rep.boa_ok = rep.oa_ok && rep.first_column_zero && all;
  return rep;
}

BoaArray pad_rows(const BoaArray& a, std::size_t n_target) {
  if (n_target < 1 || n_target > a.rows) {
    fail(ErrorKind::InvalidArgument, "target row count " + std::to_string(n_target) +
                                         " outside 1.." + std::to_string(a.rows));
  }
  BoaArray r = a;
  r.rows = n_target;
  r.entries.assign(a.entries.begin(), a.entries.begin() + n_target * a.cols);
  r.strength = std::min(a.strength, n_target);
  const std::uint64_t qs = checked_pow(a.q(), r.strength);
  r.lambda = r.cols % qs == 0 ? r.cols / qs : 0;
  r.provenance = a.provenance + " rows 1.." + std::to_string(n_target);
  return r;
}

std::string format_boa(const BoaArray& a) {
  std::ostringstream os;
  os << a.q() << ' ' << a.rows << ' ' << a.cols << ' ' << a.strength << ' ' << a.lambda << '\n';
  for (std::size_t i = 0; i < a.rows; ++i) {
    for (std::size_t j = 0; j < a.cols; ++j) {
      if (j) os << ' ';
      os << a.at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

BoaArray parse_boa(std::istream& in) {
  long long q = 0, n = 0, N = 0, l = 0, lambda = 0;
  if (!(in >> q >> n >> N >> l >> lambda)) {
    fail(ErrorKind::Parse, "BOA file: expected header 'q n N l lambda'");
  }
  if (q < 2 || n < 1 || N < 1 || l < 0 || l > n || lambda < 0 || n * N > (1LL << 30)) {
    fail(ErrorKind::Parse, "BOA file: invalid header values");
  }
  if (!prime_power(static_cast<std::uint64_t>(q)) || q > (1 << 16)) {
    fail(ErrorKind::Parse, "BOA file: q is not a supported prime power");
  }
  BoaArray a;
  a.field = FiniteField::of_order(static_cast<std::uint64_t>(q));
  a.rows = static_cast<std::size_t>(n);
  a.cols = static_cast<std::size_t>(N);
  a.strength = static_cast<std::size_t>(l);
  a.lambda = static_cast<std::uint64_t>(lambda);
  a.entries.resize(a.rows * a.cols);
  for (auto& x : a.entries) {
    long long v = 0;
    if (!(in >> v)) fail(ErrorKind::Parse, "BOA file: truncated array");
    if (v < 0 || v >= q) fail(ErrorKind::Parse, "BOA file: entry outside 0..q-1");
    x = static_cast<Elem>(v);
  }
  std::string extra;
  if (in >> extra) fail(ErrorKind::Parse, "BOA file: trailing data");
  a.provenance = "file";
  return a;
}

BoaArray load_boa(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Io, "cannot open BOA file " + path);
  return parse_boa(in);
}

std::string boa_csv(const BoaArray& a) {
  std::ostringstream os;
  os << "qudit";
  for (std::size_t j = 0; j < a.cols; ++j) os << ",a" << j;
  os << '\n';
  for (std::size_t i = 0; i < a.rows; ++i) {
    os << i + 1;
    for (std::size_t j = 0; j < a.cols; ++j) os << ',' << a.at(i, j);
    os << '\n';
  }
  return os.str();
}

}  // namespace boadd
