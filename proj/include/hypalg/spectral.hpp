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

// Complete orthogonal idempotent systems and the Pierce decomposition
// A = K i_1 (+) ... (+) K i_n.

#ifndef HYPALG_SPECTRAL_HPP
#define HYPALG_SPECTRAL_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hypalg/algebra.hpp"
#include "hypalg/errors.hpp"

namespace hypalg {

enum class Provenance { Discovered, UserSupplied, Fixture };

const char* provenance_name(Provenance p) noexcept;

struct SpectralConfig {
  std::uint64_t seed = 0;
  double cluster_tol = 1e-6;  // relative to the spectral radius
  int max_retries = 8;        // fresh random elements after the first draw
  double tol_idem = 1e-8;
  double rank_tol = 1e-8;     // relative singular-value cutoff for independence
};

struct IdempotentSystem {
  std::vector<Element> idems;
  double tol_idem = 1e-8;
  Provenance provenance = Provenance::UserSupplied;

  std::size_t size() const noexcept { return idems.size(); }
  const Element& operator[](std::size_t l) const { return idems[l]; }
};

struct SystemReport {
  double idempotency = 0.0;    // max_p ||i_p^2 - i_p||
  double orthogonality = 0.0;  // max_{p != r} ||i_p i_r||
  double completeness = 0.0;   // ||sum_p i_p - 1||
  std::size_t rank = 0;
  std::size_t count = 0;
  std::size_t dim = 0;
  double tolerance = 0.0;

  bool independent() const noexcept { return rank == count; }
  /// The system spans the algebra (n == d); required by the solver.
  bool full() const noexcept { return count == dim; }
  /// Idempotent, orthogonal, summing to the unit, and independent.
  bool passed() const noexcept {
    return count > 0 && idempotency <= tolerance && orthogonality <= tolerance &&
           completeness <= tolerance && independent();
  }
};

enum class SpectralFailure { NonSplit, NotSemisimpleOrDegenerate, VerificationFailed };

const char* failure_name(SpectralFailure kind) noexcept;

class SpectralError : public Error {
 public:
  SpectralError(SpectralFailure kind, int attempts, const std::string& detail);

  SpectralFailure kind() const noexcept { return kind_; }
  int attempts() const noexcept { return attempts_; }

 private:
  SpectralFailure kind_;
  int attempts_;
};

/// Builds the primitive idempotents from the spectral projectors of the
/// regular representation of a random element. Output is in canonical order
/// (see canonical_less). Throws SpectralError.
IdempotentSystem find_idempotent_system(const AlgebraTable& table,
                                        const SpectralConfig& config = {});

SystemReport verify_idempotent_system(const AlgebraTable& table, std::span<const Element> idems,
                                      double tol_idem, double rank_tol = 1e-8);
inline SystemReport verify_idempotent_system(const AlgebraTable& table,
                                             const IdempotentSystem& system, double tol_idem) {
  return verify_idempotent_system(table, system.idems, tol_idem);
}

/// Wraps a user-supplied list after verify_idempotent_system; throws
/// SpectralError(VerificationFailed) if it does not pass.
IdempotentSystem accept_idempotent_system(const AlgebraTable& table, std::vector<Element> idems,
                                          Provenance provenance, double tol_idem = 1e-8);

/// k_l = <a i_l, i_l> / <i_l, i_l>, so that a i_l = k_l i_l when a i_l lies in
/// the line spanned by i_l.
std::vector<Scalar> pierce_project(const AlgebraTable& table, const Element& a,
                                   const IdempotentSystem& system);

/// sum_l k_l i_l
Element recombine(std::span<const Scalar> ks, const IdempotentSystem& system);

}  // namespace hypalg

#endif  // HYPALG_SPECTRAL_HPP
