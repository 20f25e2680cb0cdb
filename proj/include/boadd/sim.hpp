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
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "boadd/pauli_rep.hpp"
#include "boadd/schedule.hpp"

namespace boadd {

struct LocalTerm {
  std::vector<std::size_t> support;  // sorted, 0-based
  DenseMatrix h;                     // dimension d^|support|
};

/** Sum of terms, each acting on a few of the n qudits. */
struct LocalHamiltonian {
  std::size_t n = 0;
  std::size_t d = 2;
  std::vector<LocalTerm> terms;

  /// Throws unless every term is Hermitian and traceless to 1e-12.
  void validate() const;
  /// Dense d^n matrix; throws Error(Budget) when d^n > 2^14.
  DenseMatrix assemble() const;
};

/// h on the given qudits, identity elsewhere.
DenseMatrix embed(const DenseMatrix& h, const std::vector<std::size_t>& support,
                  std::size_t n, std::size_t d);

/// One term per l-subset (all of them when C(n,l) <= 50, else 50 seeded
/// random subsets). Terms are Hermitized complex Gaussian matrices with the
/// trace removed, or real traceless diagonals when `diagonal_only`.
LocalHamiltonian random_local_hamiltonian(std::size_t n, std::size_t d, std::size_t l,
                                          std::uint64_t seed, bool diagonal_only);

/// Constant generator of one qudit: exp(-i h delta) equals U up to phase.
struct LocalGenerator {
  DenseMatrix h;
  DenseMatrix basis;         // unitary eigenvectors of h
  Eigen::VectorXd energies;  // eigenvalues of h, same order
};

LocalGenerator local_generator(const DenseMatrix& u, double delta);

struct ControlGenerator {
  Vec label;
  double delta = 1.0;
  std::vector<LocalGenerator> qudits;
};

ControlGenerator control_generator(const Representation& rep, const Vec& b, double delta);

/// (1/delta) int_0^delta u(t)^dag A u(t) dt with u(t) = exp(-i sign h t),
/// evaluated in the eigenbasis of h.
DenseMatrix slot_integral(const DenseMatrix& a, const ControlGenerator& g, double sign = 1.0);
/// Same integral by Gauss-Legendre quadrature with `nodes` points.
DenseMatrix slot_integral_quadrature(const DenseMatrix& a, const ControlGenerator& g,
                                     int nodes, double sign = 1.0);

enum class SimMode { full, per_term };
enum class SimMethod { eigenbasis_exact, quadrature };

std::string to_string(SimMode mode);
std::string to_string(SimMethod method);

struct SimOptions {
  SimMode mode = SimMode::full;
  SimMethod method = SimMethod::eigenbasis_exact;
  int nodes = 16;
};

/// First-order average of an operator on all n qudits of the schedule.
DenseMatrix average_operator(const DenseMatrix& a, const ControlSchedule& s,
                             const Representation& rep, const SimOptions& opt = {});

/// Average of each term on its own support, using only the schedule rows
/// of that support.
std::vector<DenseMatrix> average_terms(const LocalHamiltonian& h, const ControlSchedule& s,
                                       const Representation& rep, const SimOptions& opt = {});

/// Full d^n first-order average Hamiltonian.
DenseMatrix average_hamiltonian(const LocalHamiltonian& h, const ControlSchedule& s,
                                const Representation& rep, const SimOptions& opt = {});
DenseMatrix average_hamiltonian_quadrature(const LocalHamiltonian& h, const ControlSchedule& s,
                                           const Representation& rep, int nodes,
                                           SimMode mode = SimMode::full);

struct TermResidual {
  std::vector<std::size_t> support;
  double value = 0;
};

struct ResidualReport {
  double residual = 0;
  std::string residual_kind;  // "norm_ratio" or "max_term_ratio"
  std::vector<TermResidual> per_term;
  double triangle_slack = 0;  // NaN when not defined
  SimMethod method = SimMethod::eigenbasis_exact;
  SimMode mode = SimMode::full;
  double elapsed_seconds = 0;
};

/// ||Hbar||_2 / ||H||_2. In per-term mode beyond d^n = 2^12 the residual is
/// the largest ||hbar_k|| / ||h_k|| instead.
ResidualReport decoupling_residual(const LocalHamiltonian& h, const ControlSchedule& s,
                                   const Representation& rep, const SimOptions& opt = {});
std::string residual_json(const ResidualReport& r);

/// Group average of the mu-weighted slot map of a balanced cycle over
/// F_q^r, r = number of qudits of `a`.
DenseMatrix balanced_cycle_average(const DenseMatrix& a, const std::vector<Vec>& vertices,
                                   const Representation& rep, double delta = 1.0);

/// Largest absolute eigenvalue of the Hermitian part.
double spectral_norm(const DenseMatrix& m);

}  // namespace boadd
