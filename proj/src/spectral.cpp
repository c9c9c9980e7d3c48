// Copyright 2026 The hypalg Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hypalg/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <utility>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "hypalg/kernels.hpp"

namespace hypalg {

const char* provenance_name(Provenance p) noexcept {
  switch (p) {
    case Provenance::Discovered:
      return "discovered";
    case Provenance::UserSupplied:
      return "user-supplied";
    case Provenance::Fixture:
      return "fixture";
  }
  return "unknown";
}

const char* failure_name(SpectralFailure kind) noexcept {
  switch (kind) {
    case SpectralFailure::NonSplit:
      return "NonSplit";
    case SpectralFailure::NotSemisimpleOrDegenerate:
      return "NotSemisimpleOrDegenerate";
    case SpectralFailure::VerificationFailed:
      return "VerificationFailed";
  }
  return "unknown";
}

SpectralError::SpectralError(SpectralFailure kind, int attempts, const std::string& detail)
    : Error(std::string(failure_name(kind)) + " after " + std::to_string(attempts) +
            " attempt(s): " + detail),
      kind_(kind),
      attempts_(attempts) {}

namespace {

Element random_element(const AlgebraTable& table, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Element g(table.dim());
  for (std::size_t k = 0; k < table.dim(); ++k) {
    const double re = dist(rng);
    const double im = table.field() == Field::Complex ? dist(rng) : 0.0;
    g[k] = Scalar(re, im);
  }
  return g;
}

// Lagrange basis polynomial with nodes `lambda`, evaluated at g in product
// form: prod_{j != l} (g - lambda_j) / (lambda_l - lambda_j).
Element spectral_projector(const AlgebraTable& table, const Element& g,
                           const std::vector<Scalar>& lambda, std::size_t l) {
  Element acc = table.unit();
  for (std::size_t j = 0; j < lambda.size(); ++j) {
    if (j == l) continue;
    Element factor = g;
    factor[0] -= lambda[j];
    acc = scalar_mul(Scalar(1.0) / (lambda[l] - lambda[j]), mul(table, acc, factor));
  }
  if (table.field() == Field::Real) {
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = Scalar(acc[k].real(), 0.0);
  }
  return acc;
}

}  // namespace

IdempotentSystem find_idempotent_system(const AlgebraTable& table, const SpectralConfig& config) {
  const std::size_t d = table.dim();
  if (d == 1) return {{table.unit()}, config.tol_idem, Provenance::Discovered};

  std::mt19937_64 rng(config.seed);
  const int attempts = 1 + std::max(0, config.max_retries);
  int nonreal = 0;
  int clustered = 0;
  double worst_residual = 0.0;
  std::string last_detail;

  for (int attempt = 1; attempt <= attempts; ++attempt) {
    const Element g = random_element(table, rng);
    const ScalarMatrix m = regular_representation(table, g);
    const Eigen::ComplexEigenSolver<ScalarMatrix> solver(m, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success) {
      ++clustered;
      last_detail = "eigenvalue iteration did not converge";
      continue;
    }
    std::vector<Scalar> lambda(solver.eigenvalues().data(),
                               solver.eigenvalues().data() + solver.eigenvalues().size());

    double radius = 0.0;
    for (const Scalar& l : lambda) radius = std::max(radius, std::abs(l));
    const double scale = std::max({radius, m.cwiseAbs().maxCoeff(), 1e-300});
    const double gap_floor = config.cluster_tol * scale;

    if (table.field() == Field::Real) {
      const bool complex_pair = std::any_of(lambda.begin(), lambda.end(), [&](const Scalar& l) {
        return std::abs(l.imag()) > gap_floor;
      });
      if (complex_pair) {
        ++nonreal;
        last_detail = "regular representation has non-real eigenvalues";
        continue;
      }
      for (Scalar& l : lambda) l = Scalar(l.real(), 0.0);
    }

    double min_gap = std::numeric_limits<double>::infinity();
    for (std::size_t p = 0; p < d; ++p) {
      for (std::size_t r = p + 1; r < d; ++r) min_gap = std::min(min_gap, std::abs(lambda[p] - lambda[r]));
    }
    if (!(min_gap > gap_floor)) {
      ++clustered;
      last_detail = "eigenvalues cluster (min gap " + std::to_string(min_gap) + ")";
      continue;
    }

    std::vector<Element> idems;
    idems.reserve(d);
    for (std::size_t l = 0; l < d; ++l) idems.push_back(spectral_projector(table, g, lambda, l));

    const SystemReport report =
        verify_idempotent_system(table, idems, config.tol_idem, config.rank_tol);
    if (report.passed()) {
      std::sort(idems.begin(), idems.end(),
                [](const Element& a, const Element& b) { return canonical_less(a, b); });
      return {std::move(idems), config.tol_idem, Provenance::Discovered};
    }
    worst_residual = std::max({report.idempotency, report.orthogonality, report.completeness});
    last_detail = "candidate idempotents miss tolerance (residual " +
                  std::to_string(worst_residual) + ")";
  }

  if (nonreal > 0) throw SpectralError(SpectralFailure::NonSplit, attempts, last_detail);
  if (clustered > 0) {
    throw SpectralError(SpectralFailure::NotSemisimpleOrDegenerate, attempts, last_detail);
  }
  throw SpectralError(SpectralFailure::VerificationFailed, attempts, last_detail);
}

SystemReport verify_idempotent_system(const AlgebraTable& table, std::span<const Element> idems,
                                      double tol_idem, double rank_tol) {
  SystemReport report;
  report.count = idems.size();
  report.dim = table.dim();
  report.tolerance = tol_idem;
  if (idems.empty()) {
    report.completeness = norm_inf(table.unit());
    return report;
  }
  for (const Element& i : idems) require_dim(table, i, "verify_idempotent_system");

  Element total = table.zero();
  for (std::size_t p = 0; p < idems.size(); ++p) {
    report.idempotency =
        std::max(report.idempotency, distance_inf(mul(table, idems[p], idems[p]), idems[p]));
    for (std::size_t r = p + 1; r < idems.size(); ++r) {
      report.orthogonality = std::max(report.orthogonality, norm_inf(mul(table, idems[p], idems[r])));
    }
    total = add(total, idems[p]);
  }
  report.completeness = distance_inf(total, table.unit());

  ScalarMatrix coords(static_cast<Eigen::Index>(table.dim()),
                      static_cast<Eigen::Index>(idems.size()));
  for (std::size_t p = 0; p < idems.size(); ++p) {
    for (std::size_t k = 0; k < table.dim(); ++k) {
      coords(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(p)) = idems[p][k];
    }
  }
  const Eigen::JacobiSVD<ScalarMatrix> svd(coords);
  const auto& sigma = svd.singularValues();
  const double cutoff = rank_tol * std::max(1.0, sigma.size() > 0 ? sigma(0) : 0.0);
  for (Eigen::Index k = 0; k < sigma.size(); ++k) {
    if (sigma(k) > cutoff) ++report.rank;
  }
  return report;
}

IdempotentSystem accept_idempotent_system(const AlgebraTable& table, std::vector<Element> idems,
                                          Provenance provenance, double tol_idem) {
  const SystemReport report = verify_idempotent_system(table, idems, tol_idem);
  if (!report.passed()) {
    throw SpectralError(SpectralFailure::VerificationFailed, 0,
                        "supplied idempotents violate the system invariants");
  }
  return {std::move(idems), tol_idem, provenance};
}

std::vector<Scalar> pierce_project(const AlgebraTable& table, const Element& a,
                                   const IdempotentSystem& system) {
  require_dim(table, a, "pierce_project");
  const auto& k = kernels::active();
  std::vector<Scalar> out;
  out.reserve(system.size());
  for (const Element& i : system.idems) {
    require_dim(table, i, "pierce_project");
    const double norm2 = k.dot_conj(i.data(), i.data(), i.size()).real();
    if (!(norm2 > 0.0)) throw Error("pierce_project: zero-norm idempotent");
    const Element ai = mul(table, a, i);
    out.push_back(k.dot_conj(ai.data(), i.data(), i.size()) / norm2);
  }
  return out;
}

Element recombine(std::span<const Scalar> ks, const IdempotentSystem& system) {
  if (ks.size() != system.size()) throw DimensionMismatch("recombine", system.size(), ks.size());
  if (system.idems.empty()) throw Error("recombine: empty idempotent system");
  Element out(system[0].size());
  for (std::size_t l = 0; l < ks.size(); ++l) {
    kernels::active().axpy(ks[l], system[l].data(), out.data(), out.size());
  }
  return out;
}

}  // namespace hypalg
