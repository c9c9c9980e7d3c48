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

// Differentiation of functions f: A -> A, f(x) = sum_k e_k u_k(x).
//
// f is A-differentiable at x when the directional limit
//     lim_{eps->0} (f(x + eps h) - f(x)) / eps
// equals h f'(x) for one element f'(x) and every direction h. Taking h = e_0
// gives f' = sum_k e_k du_k/dx_0, and comparing the other basis directions
// yields the Cauchy-Riemann type conditions
//     sum_k e_k du_k/dx_j = e_j sum_k e_k du_k/dx_0,   j = 1..dim-1.

#ifndef HYPALG_HOLOMORPHY_HPP
#define HYPALG_HOLOMORPHY_HPP

#include <functional>
#include <span>
#include <variant>
#include <vector>

#include "hypalg/algebra.hpp"
#include "hypalg/polynomial.hpp"

namespace hypalg {

class AlgebraFunction {
 public:
  /// Must be deterministic; smoothness is the caller's assertion.
  using Callable = std::function<Element(const Element&)>;

  static AlgebraFunction polynomial(AlgebraPolynomial p) { return AlgebraFunction(std::move(p)); }
  static AlgebraFunction black_box(Callable f) { return AlgebraFunction(std::move(f)); }

  bool is_polynomial() const noexcept { return std::holds_alternative<AlgebraPolynomial>(impl_); }
  /// nullptr for black boxes.
  const AlgebraPolynomial* as_polynomial() const noexcept {
    return std::get_if<AlgebraPolynomial>(&impl_);
  }

  Element operator()(const AlgebraTable& table, const Element& x) const;

 private:
  explicit AlgebraFunction(AlgebraPolynomial p) : impl_(std::move(p)) {}
  explicit AlgebraFunction(Callable f) : impl_(std::move(f)) {}

  std::variant<AlgebraPolynomial, Callable> impl_;
};

enum class DerivativeMethod { Formal, FiniteDifference };

struct DerivativeResult {
  Element value;
  DerivativeMethod method = DerivativeMethod::Formal;
  double step = 0.0;  // finite-difference step, 0 for Formal
};

struct CRReport {
  std::vector<double> residuals;  // one per direction k = 1..dim-1
  double max_residual = 0.0;
  double step = 0.0;
  double tolerance = 0.0;

  bool satisfied() const noexcept { return max_residual <= tolerance; }
};

inline constexpr double kDefaultFdStep = 1e-5;
inline constexpr double kDefaultCrTolerance = 1e-4;
inline constexpr int kMaxBlackBoxOrder = 3;

/// kDefaultFdStep * (1 + ||x||_inf)
double default_fd_step(const Element& x);

/// b_{r-1} = r a_r. The derivative of a constant is the zero polynomial.
AlgebraPolynomial formal_poly_derivative(const AlgebraPolynomial& p);

/// Central differences (f(x + eps h) - f(x - eps h)) / (2 eps) for each step,
/// Richardson-extrapolated over the two smallest distinct steps.
Element directional_derivative(const AlgebraTable& table, const AlgebraFunction& f,
                               const Element& x, const Element& h, std::span<const double> steps);
/// Steps {2, 1} * default_fd_step(x).
Element directional_derivative(const AlgebraTable& table, const AlgebraFunction& f,
                               const Element& x, const Element& h);

/// f^(l)(x). Polynomials are differentiated formally (exact). Black boxes use
/// central stencils along e_0 for l <= 3; larger l throws UnsupportedRequest.
/// Order 0 returns f(x).
DerivativeResult a_derivative(const AlgebraTable& table, const AlgebraFunction& f,
                              const Element& x, int order);

/// Residual of each Cauchy-Riemann row at x, partials by central differences
/// with absolute step h_fd.
CRReport check_cauchy_riemann(const AlgebraTable& table, const AlgebraFunction& f,
                              const Element& x, double h_fd,
                              double tolerance = kDefaultCrTolerance);

/// sum_{l=0}^{order} f^(l)(x) h^l / l!
Element taylor_eval(const AlgebraTable& table, const AlgebraFunction& f, const Element& x,
                    const Element& h, int order);

}  // namespace hypalg

#endif  // HYPALG_HOLOMORPHY_HPP
