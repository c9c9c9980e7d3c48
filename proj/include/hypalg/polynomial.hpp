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

#ifndef HYPALG_POLYNOMIAL_HPP
#define HYPALG_POLYNOMIAL_HPP

#include <cstddef>
#include <vector>

#include "hypalg/algebra.hpp"

namespace hypalg {

inline constexpr double kDefaultLeadTolerance = 1e-12;

/// p(w) = a_0 + a_1 w + ... + a_m w^m with algebra-valued coefficients;
/// coefficient index is the power of w.
class AlgebraPolynomial {
 public:
  /// Throws std::invalid_argument if `coeffs` is empty, DimensionMismatch if
  /// the coefficients disagree in length.
  explicit AlgebraPolynomial(std::vector<Element> coeffs);

  /// c * w^power for a single coefficient.
  static AlgebraPolynomial monomial(const Element& c, std::size_t power);

  std::size_t dim() const noexcept { return coeffs_.front().size(); }
  /// Number of stored coefficients minus one (no stripping).
  std::size_t stored_degree() const noexcept { return coeffs_.size() - 1; }
  /// Largest r with ||a_r||_inf > tol_lead, or 0 if there is none.
  std::size_t degree(double tol_lead = kDefaultLeadTolerance) const;

  const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
  const Element& operator[](std::size_t r) const { return coeffs_[r]; }

 private:
  std::vector<Element> coeffs_;
};

/// Horner evaluation.
Element eval_poly(const AlgebraTable& table, const AlgebraPolynomial& p, const Element& w);

/// Coefficientwise alpha*p + beta*q (shorter operand padded with zeros).
AlgebraPolynomial combine(Scalar alpha, const AlgebraPolynomial& p, Scalar beta,
                          const AlgebraPolynomial& q);

}  // namespace hypalg

#endif  // HYPALG_POLYNOMIAL_HPP
