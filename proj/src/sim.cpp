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

#include "boadd/sim.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <limits>
#include <map>
#include <numbers>
#include <random>
#include <set>
#include <thread>
#include <tuple>

#include <gsl/gsl_integration.h>
#include <json.hpp>
#include <unsupported/Eigen/MatrixFunctions>

#include "boadd/error.hpp"
#include "local_ops.hpp"

namespace boadd {
namespace {

using cd = std::complex<double>;

constexpr std::size_t kFullBudget = std::size_t{1} << 14;
constexpr std::size_t kNormBudget = std::size_t{1} << 12;
constexpr std::size_t kTermBudget = 256;
constexpr double kDegenerate = 1e-12;

std::size_t dim_of(std::size_t d, std::size_t r, std::size_t budget, const char* what) {
  std::size_t dim = 1;
  for (std::size_t i = 0; i < r; ++i) {
    dim *= d;
    if (dim > budget) {
      fail(ErrorKind::Budget, std::string(what) + " dimension exceeds " + std::to_string(budget));
    }
  }
  return dim;
}

// (e^{ix} - 1) / (ix), written to stay accurate for small x
cd phi(double x) {
  const double y = 0.5 * x;
  const double sinc = std::abs(y) < 1e-8 ? 1.0 - y * y / 6.0 : std::sin(y) / y;
  return std::polar(sinc, y);
}

// Single-qudit generators for every field element.
std::vector<LocalGenerator> generator_table(const Representation& rep, double delta) {
  std::vector<LocalGenerator> out;
  out.reserve(rep.q());
  for (Elem g = 0; g < rep.q(); ++g) out.push_back(local_generator(rep.unitary(g), delta));
  return out;
}

struct Slot {
  Vec start;
  Vec gen;
  double sign;
};

std::vector<Slot> restricted_slots(const ControlSchedule& s,
                                   const std::vector<std::size_t>& support) {
  const auto& f = *s.field;
  std::vector<Slot> out;
  out.reserve(s.slots());
  for (std::size_t j = 0; j < s.slots(); ++j) {
    const bool rev = !s.reversed.empty() && s.reversed[j];
    const Vec start = s.start_frame(j);
    Slot slot{Vec(support.size()), Vec(support.size()), rev ? -1.0 : 1.0};
    for (std::size_t t = 0; t < support.size(); ++t) {
      const std::size_t i = support[t];
      slot.start[t] = start[i];
      slot.gen[t] = rev ? f.neg(s.transitions[j][i]) : s.transitions[j][i];
    }
    out.push_back(std::move(slot));
  }
  return out;
}

DenseMatrix average_slots(const DenseMatrix& a, const std::vector<Slot>& slots,
                          const Representation& rep, const std::vector<LocalGenerator>& table,
                          double delta, const SimOptions& opt) {
  // identical slots contribute identically; count them once in first-seen order
  std::map<std::tuple<Vec, Vec, double>, std::size_t> index;
  std::vector<std::pair<const Slot*, std::size_t>> unique;
  for (const auto& s : slots) {
    auto [it, inserted] = index.emplace(std::make_tuple(s.start, s.gen, s.sign), unique.size());
    if (inserted) {
      unique.push_back({&s, 1});
    } else {
      ++unique[it->second].second;
    }
  }
  const std::size_t d = static_cast<std::size_t>(rep.d());
  DenseMatrix acc = DenseMatrix::Zero(a.rows(), a.cols());
  std::vector<DenseMatrix> frame;
  for (const auto& [slot, weight] : unique) {
    ControlGenerator g;
    g.label = slot->gen;
    g.delta = delta;
    for (Elem x : slot->gen) g.qudits.push_back(table[x]);
    DenseMatrix m = opt.method == SimMethod::quadrature
                        ? slot_integral_quadrature(a, g, opt.nodes, slot->sign)
                        : slot_integral(a, g, slot->sign);
    frame.clear();
    for (Elem x : slot->start) frame.push_back(rep.unitary(x));
    detail::conjugate(m, frame, d);
    acc += static_cast<double>(weight) * m;
  }
  return acc / static_cast<double>(slots.size());
}

void check_compatible(const ControlSchedule& s, const Representation& rep) {
  s.validate();
  if (!(s.rep == rep.spec()) || !s.field->same_as(*rep.field())) {
    fail(ErrorKind::Mismatch, "schedule representation does not match the simulator's");
  }
}

}  // namespace

std::string to_string(SimMode mode) { return mode == SimMode::full ? "full" : "per-term"; }

std::string to_string(SimMethod method) {
  return method == SimMethod::quadrature ? "quadrature" : "eigenbasis_exact";
}

void LocalHamiltonian::validate() const {
  require(n >= 1 && d >= 2, "invalid Hamiltonian shape");
  for (const auto& t : terms) {
    require(!t.support.empty(), "term with empty support");
    for (std::size_t i = 0; i < t.support.size(); ++i) {
      require(t.support[i] < n, "term support outside the system");
      require(i == 0 || t.support[i - 1] < t.support[i], "term support must be sorted and distinct");
    }
    const std::size_t dim = dim_of(d, t.support.size(), kTermBudget, "term");
    require(t.h.rows() == static_cast<Eigen::Index>(dim) && t.h.cols() == t.h.rows(),
            "term matrix has the wrong dimension");
    require((t.h - t.h.adjoint()).norm() <= 1e-12 * std::max(1.0, t.h.norm()),
            "term is not Hermitian");
    require(std::abs(t.h.trace()) <= 1e-12 * std::max(1.0, t.h.norm()), "term is not traceless");
  }
}

DenseMatrix embed(const DenseMatrix& h, const std::vector<std::size_t>& support, std::size_t n,
                  std::size_t d) {
  const std::size_t dim = dim_of(d, n, kFullBudget, "system");
  const std::size_t r = support.size();
  const std::size_t local = detail::ipow_size(d, r);
  require(h.rows() == static_cast<Eigen::Index>(local), "term dimension mismatch");
  std::vector<std::size_t> stride(r);
  for (std::size_t t = 0; t < r; ++t) {
    require(support[t] < n, "support outside the system");
    stride[t] = detail::ipow_size(d, n - 1 - support[t]);
  }
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  std::vector<std::size_t> digits(r);
  for (std::size_t row = 0; row < dim; ++row) {
    std::size_t base = row, lr = 0;
    for (std::size_t t = 0; t < r; ++t) {
      const std::size_t dig = (row / stride[t]) % d;
      base -= dig * stride[t];
      lr = lr * d + dig;
    }
    for (std::size_t lc = 0; lc < local; ++lc) {
      std::size_t col = base, rest = lc;
      for (std::size_t t = r; t-- > 0;) {
        col += (rest % d) * stride[t];
        rest /= d;
      }
      out(row, col) = h(lr, lc);
    }
  }
  return out;
}

DenseMatrix LocalHamiltonian::assemble() const {
  const std::size_t dim = dim_of(d, n, kFullBudget, "system");
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  for (const auto& t : terms) out += embed(t.h, t.support, n, d);
  return out;
}

LocalHamiltonian random_local_hamiltonian(std::size_t n, std::size_t d, std::size_t l,
                                          std::uint64_t seed, bool diagonal_only) {
  require(d >= 2, "qudit dimension must be at least 2");
  require(l >= 1 && l <= n, "locality must be in 1..n");
  const std::size_t dim = dim_of(d, l, kTermBudget, "term");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);

  double count = 1;
  for (std::size_t i = 0; i < l; ++i) count = count * static_cast<double>(n - i) / static_cast<double>(i + 1);
  std::vector<std::vector<std::size_t>> supports;
  if (count <= 50) {
    std::vector<std::size_t> cur(l);
    for (std::size_t i = 0; i < l; ++i) cur[i] = i;
    for (;;) {
      supports.push_back(cur);
      std::size_t i = l;
      while (i > 0 && cur[i - 1] == n - l + (i - 1)) --i;
      if (i == 0) break;
      ++cur[i - 1];
      for (std::size_t j = i; j < l; ++j) cur[j] = cur[j - 1] + 1;
    }
  } else {
    std::set<std::vector<std::size_t>> chosen;
    std::vector<std::size_t> pool(n);
    while (chosen.size() < 50) {
      for (std::size_t i = 0; i < n; ++i) pool[i] = i;
      for (std::size_t i = 0; i < l; ++i) {
        std::uniform_int_distribution<std::size_t> pick(i, n - 1);
        std::swap(pool[i], pool[pick(rng)]);
      }
      std::vector<std::size_t> s(pool.begin(), pool.begin() + static_cast<long>(l));
      std::sort(s.begin(), s.end());
      chosen.insert(std::move(s));
    }
    supports.assign(chosen.begin(), chosen.end());
  }

  LocalHamiltonian h;
  h.n = n;
  h.d = d;
  for (auto& support : supports) {
    DenseMatrix m = DenseMatrix::Zero(dim, dim);
    if (diagonal_only) {
      for (std::size_t i = 0; i < dim; ++i) m(i, i) = normal(rng);
    } else {
      const double s = std::sqrt(0.5);
      for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) m(i, j) = cd(s * normal(rng), s * normal(rng));
      }
      m = (0.5 * (m + m.adjoint())).eval();
    }
    m -= (m.trace() / static_cast<double>(dim)) * DenseMatrix::Identity(dim, dim);
    h.terms.push_back({std::move(support), std::move(m)});
  }
  return h;
}

LocalGenerator local_generator(const DenseMatrix& u, double delta) {
  require(delta > 0 && std::isfinite(delta), "slot duration must be positive");
  require(u.rows() == u.cols(), "unitary must be square");
  const Eigen::Index d = u.rows();
  Eigen::ComplexSchur<DenseMatrix> schur(u);
  LocalGenerator g;
  g.basis = schur.matrixU();
  g.energies.resize(d);
  for (Eigen::Index i = 0; i < d; ++i) {
    double theta = std::arg(schur.matrixT()(i, i));
    if (theta <= -std::numbers::pi + 1e-12) theta = std::numbers::pi;
    g.energies(i) = -theta / delta;
  }
  g.energies.array() -= g.energies.mean();
  g.h = g.basis * g.energies.cast<cd>().asDiagonal() * g.basis.adjoint();
  return g;
}

ControlGenerator control_generator(const Representation& rep, const Vec& b, double delta) {
  ControlGenerator g;
  g.label = b;
  g.delta = delta;
  for (Elem x : b) g.qudits.push_back(local_generator(rep.unitary(x), delta));
  return g;
}

DenseMatrix slot_integral(const DenseMatrix& a, const ControlGenerator& g, double sign) {
  const std::size_t r = g.qudits.size();
  require(r >= 1, "generator has no qudits");
  const std::size_t d = static_cast<std::size_t>(g.qudits[0].basis.rows());
  const std::size_t dim = detail::ipow_size(d, r);
  require(a.rows() == static_cast<Eigen::Index>(dim) && a.cols() == a.rows(),
          "operator dimension does not match the generator");
  std::vector<DenseMatrix> basis;
  for (const auto& q : g.qudits) basis.push_back(q.basis);
  DenseMatrix x = a;
  detail::conjugate(x, basis, d);

  Eigen::VectorXd energy = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(dim));
  for (std::size_t idx = 0; idx < dim; ++idx) {
    std::size_t rest = idx;
    double e = 0;
    for (std::size_t t = r; t-- > 0;) {
      e += g.qudits[t].energies(static_cast<Eigen::Index>(rest % d));
      rest /= d;
    }
    energy(static_cast<Eigen::Index>(idx)) = sign * e;
  }
  for (Eigen::Index rr = 0; rr < x.rows(); ++rr) {
    for (Eigen::Index c = 0; c < x.cols(); ++c) {
      const double gap = energy(rr) - energy(c);
      if (std::abs(gap) < kDegenerate) continue;
      x(rr, c) *= phi(gap * g.delta);
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    detail::apply_left(x, basis[i], i, r, d);
    detail::apply_right(x, basis[i].adjoint(), i, r, d);
  }
  return x;
}

DenseMatrix slot_integral_quadrature(const DenseMatrix& a, const ControlGenerator& g, int nodes,
                                     double sign) {
  require(nodes >= 1, "quadrature needs at least one node");
  const std::size_t r = g.qudits.size();
  require(r >= 1, "generator has no qudits");
  const std::size_t d = static_cast<std::size_t>(g.qudits[0].h.rows());
  gsl_integration_glfixed_table* table =
      gsl_integration_glfixed_table_alloc(static_cast<std::size_t>(nodes));
  if (!table) fail(ErrorKind::InvalidArgument, "cannot build Gauss-Legendre table");
  DenseMatrix acc = DenseMatrix::Zero(a.rows(), a.cols());
  std::vector<DenseMatrix> u(r);
  for (int m = 0; m < nodes; ++m) {
    double t = 0, w = 0;
    gsl_integration_glfixed_point(0.0, g.delta, static_cast<std::size_t>(m), &t, &w, table);
    for (std::size_t i = 0; i < r; ++i) {
      u[i] = (cd(0, -sign * t) * g.qudits[i].h).exp();
    }
    DenseMatrix x = a;
    detail::conjugate(x, u, d);
    acc += (w / g.delta) * x;
  }
  gsl_integration_glfixed_table_free(table);
  return acc;
}

DenseMatrix average_operator(const DenseMatrix& a, const ControlSchedule& s,
                             const Representation& rep, const SimOptions& opt) {
  check_compatible(s, rep);
  const std::size_t dim = dim_of(static_cast<std::size_t>(rep.d()), s.n, kFullBudget, "system");
  require(a.rows() == static_cast<Eigen::Index>(dim) && a.cols() == a.rows(),
          "operator dimension does not match d^n");
  std::vector<std::size_t> all(s.n);
  for (std::size_t i = 0; i < s.n; ++i) all[i] = i;
  return average_slots(a, restricted_slots(s, all), rep, generator_table(rep, s.delta), s.delta,
                       opt);
}

std::vector<DenseMatrix> average_terms(const LocalHamiltonian& h, const ControlSchedule& s,
                                       const Representation& rep, const SimOptions& opt) {
  check_compatible(s, rep);
  h.validate();
  if (h.n != s.n || h.d != static_cast<std::size_t>(rep.d())) {
    fail(ErrorKind::Mismatch, "Hamiltonian and schedule disagree on n or d");
  }
  const auto table = generator_table(rep, s.delta);
  std::vector<DenseMatrix> out(h.terms.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < h.terms.size();) {
      const auto& term = h.terms[k];
      out[k] = average_slots(term.h, restricted_slots(s, term.support), rep, table, s.delta, opt);
    }
  };
  const unsigned threads = worker_count(h.terms.size());
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  return out;
}

DenseMatrix average_hamiltonian(const LocalHamiltonian& h, const ControlSchedule& s,
                                const Representation& rep, const SimOptions& opt) {
  if (opt.mode == SimMode::full) {
    h.validate();
    if (h.n != s.n || h.d != static_cast<std::size_t>(rep.d())) {
      fail(ErrorKind::Mismatch, "Hamiltonian and schedule disagree on n or d");
    }
    return average_operator(h.assemble(), s, rep, opt);
  }
  const auto terms = average_terms(h, s, rep, opt);
  const std::size_t dim = dim_of(h.d, h.n, kFullBudget, "system");
  DenseMatrix out = DenseMatrix::Zero(dim, dim);
  for (std::size_t k = 0; k < terms.size(); ++k) out += embed(terms[k], h.terms[k].support, h.n, h.d);
  return out;
}

DenseMatrix average_hamiltonian_quadrature(const LocalHamiltonian& h, const ControlSchedule& s,
                                           const Representation& rep, int nodes, SimMode mode) {
  SimOptions opt;
  opt.mode = mode;
  opt.method = SimMethod::quadrature;
  opt.nodes = nodes;
  return average_hamiltonian(h, s, rep, opt);
}

double spectral_norm(const DenseMatrix& m) {
  if (m.size() == 0) return 0;
  const DenseMatrix herm = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<DenseMatrix> es(herm, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

ResidualReport decoupling_residual(const LocalHamiltonian& h, const ControlSchedule& s,
                                   const Representation& rep, const SimOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  ResidualReport rep_out;
  rep_out.method = opt.method;
  rep_out.mode = opt.mode;
  const double dim = std::pow(static_cast<double>(h.d), static_cast<double>(h.n));
  if (opt.mode == SimMode::full && dim > static_cast<double>(kFullBudget)) {
    fail(ErrorKind::Budget, "d^n exceeds 2^14 for full mode; use per-term mode");
  }
  const auto terms = average_terms(h, s, rep, opt);
  const bool normed = opt.mode == SimMode::full || dim <= static_cast<double>(kNormBudget);
  if (normed) {
    rep_out.residual_kind = "norm_ratio";
    const DenseMatrix full_h = h.assemble();
    const double hn = spectral_norm(full_h);
    DenseMatrix avg;
    if (opt.mode == SimMode::full) {
      avg = average_operator(full_h, s, rep, opt);
    } else {
      avg = DenseMatrix::Zero(full_h.rows(), full_h.cols());
      for (std::size_t k = 0; k < terms.size(); ++k) avg += embed(terms[k], h.terms[k].support, h.n, h.d);
    }
    rep_out.residual = hn > 0 ? spectral_norm(avg) / hn : 0.0;
    double sum = 0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const double v = hn > 0 ? spectral_norm(terms[k]) / hn : 0.0;
      rep_out.per_term.push_back({h.terms[k].support, v});
      sum += v;
    }
    rep_out.triangle_slack = sum - rep_out.residual;
  } else {
    rep_out.residual_kind = "max_term_ratio";
    double worst = 0;
    for (std::size_t k = 0; k < terms.size(); ++k) {
      const double hn = spectral_norm(h.terms[k].h);
      const double v = hn > 0 ? spectral_norm(terms[k]) / hn : 0.0;
      rep_out.per_term.push_back({h.terms[k].support, v});
      worst = std::max(worst, v);
    }
    rep_out.residual = worst;
    rep_out.triangle_slack = std::numeric_limits<double>::quiet_NaN();
  }
  rep_out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep_out;
}

std::string residual_json(const ResidualReport& r) {
  nlohmann::ordered_json j;
  j["residual"] = r.residual;
  j["residual_kind"] = r.residual_kind;
  j["method"] = to_string(r.method);
  j["mode"] = to_string(r.mode);
  j["elapsed_seconds"] = r.elapsed_seconds;
  if (std::isnan(r.triangle_slack)) {
    j["triangle_slack"] = nullptr;
  } else {
    j["triangle_slack"] = r.triangle_slack;
  }
  auto& terms = j["per_term"] = nlohmann::ordered_json::array();
  for (const auto& t : r.per_term) terms.push_back({{"support", t.support}, {"residual", t.value}});
  return j.dump(2) + "\n";
}

DenseMatrix balanced_cycle_average(const DenseMatrix& a, const std::vector<Vec>& vertices,
                                   const Representation& rep, double delta) {
  require(!vertices.empty(), "empty cycle");
  const std::size_t r = vertices.front().size();
  const auto report = check_balanced(*rep.field(), r, vertices);
  if (!report.balanced) fail(ErrorKind::InvalidArgument, "cycle is not balanced");
  const auto table = generator_table(rep, delta);
  DenseMatrix fs = DenseMatrix::Zero(a.rows(), a.cols());
  double total = 0;
  for (const auto& [label, mu] : report.mu) {
    ControlGenerator g;
    g.label = label;
    g.delta = delta;
    for (Elem x : label) g.qudits.push_back(table[x]);
    fs += static_cast<double>(mu) * slot_integral(a, g);
    total += static_cast<double>(mu);
  }
  return rep.group_average(r, fs / total);
}

}  // namespace boadd
