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

// Roots of algebra-valued polynomials p(w) = sum_r a_r w^r.
//
// With a complete orthogonal idempotent system i_1..i_n (n = dim), every
// coefficient splits as a_r = sum_s k_r^(s) i_s and so does w = sum_s x_s i_s.
// Because i_s i_t = 0 for s != t, p(w) = sum_s q_s(x_s) i_s with the scalar
// polynomials q_s(x) = sum_r k_r^(s) x^r, and p(w) = 0 iff every q_s(x_s) = 0.

#ifndef HYPALG_POLYSOLVE_HPP
#define HYPALG_POLYSOLVE_HPP

#include <cstddef>
#include <vector>

#include "hypalg/algebra.hpp"
#include "hypalg/errors.hpp"
#include "hypalg/polynomial.hpp"
#include "hypalg/spectral.hpp"

namespace hypalg {

/// The solver needs one idempotent per dimension.
class IncompleteSystem : public Error {
 public:
  IncompleteSystem(std::size_t count, std::size_t dim);
};

struct ScalarPolynomial {
  std::vector<Scalar> coeffs;  // index = power

  Scalar operator()(Scalar x) const;
  Scalar derivative_at(Scalar x) const;
};

enum class ComponentKind { Finite, AllOfK, Empty };

const char* component_kind_name(ComponentKind kind) noexcept;

struct ComponentSolution {
  ComponentKind kind = ComponentKind::Finite;
  std::size_t effective_degree = 0;
  std::vector<Scalar> roots;      // Finite only; sorted by (re, im)
  std::vector<double> residuals;  // |q(root)| per root
};

struct SolveOptions {
  double tol_lead = kDefaultLeadTolerance;
  double tol_imag = 1e-8;
  double tol_root = 1e-8;
  std::size_t max_roots = 4096;
  int newton_steps = 3;
};

struct RootSet {
  std::vector<ComponentSolution> components;
  std::vector<Element> roots;     // canonical order
  std::vector<double> residuals;  // ||p(root)||_inf, parallel to roots
  std::size_t combinations = 0;   // size of the full cartesian product (saturating)
  bool truncated = false;
  // Some component accepts every scalar. Such components are represented by 0
  // in `roots`; adding any multiple of that idempotent gives another root.
  bool parametric = false;

  double max_residual() const noexcept;
};

std::vector<ScalarPolynomial> reduce(const AlgebraPolynomial& p, const AlgebraTable& table,
                                     const IdempotentSystem& system);

/// Degenerate inputs are classified (AllOfK / Empty), never thrown.
ComponentSolution solve_scalar(const ScalarPolynomial& q, Field field,
                               const SolveOptions& opts = {});

RootSet solve(const AlgebraPolynomial& p, const AlgebraTable& table,
              const IdempotentSystem& system, const SolveOptions& opts = {});

/// ||p(w)||_inf
double residual(const AlgebraPolynomial& p, const Element& w, const AlgebraTable& table);

}  // namespace hypalg

#endif  // HYPALG_POLYSOLVE_HPP
