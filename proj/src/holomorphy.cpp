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

#include "hypalg/holomorphy.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "hypalg/errors.hpp"

namespace hypalg {

Element AlgebraFunction::operator()(const AlgebraTable& table, const Element& x) const {
  if (const auto* p = std::get_if<AlgebraPolynomial>(&impl_)) return eval_poly(table, *p, x);
  Element y = std::get<Callable>(impl_)(x);
  require_dim(table, y, "black-box function value");
  return y;
}

double default_fd_step(const Element& x) { return kDefaultFdStep * (1.0 + norm_inf(x)); }

AlgebraPolynomial formal_poly_derivative(const AlgebraPolynomial& p) {
  const auto& a = p.coeffs();
  if (a.size() == 1) return AlgebraPolynomial({Element::zero(p.dim())});
  std::vector<Element> b;
  b.reserve(a.size() - 1);
  for (std::size_t r = 1; r < a.size(); ++r) b.push_back(scalar_mul(static_cast<double>(r), a[r]));
  return AlgebraPolynomial(std::move(b));
}

namespace {

Element offset(const Element& x, double eps, const Element& h) {
  return add(x, scalar_mul(eps, h));
}

Element central_difference(const AlgebraTable& table, const AlgebraFunction& f, const Element& x,
                           const Element& h, double eps) {
  const Element forward = f(table, offset(x, eps, h));
  const Element backward = f(table, offset(x, -eps, h));
  return scalar_mul(1.0 / (2.0 * eps), sub(forward, backward));
}

}  // namespace

Element directional_derivative(const AlgebraTable& table, const AlgebraFunction& f,
                               const Element& x, const Element& h, std::span<const double> steps) {
  require_dim(table, x, "directional_derivative");
  require_dim(table, h, "directional_derivative");
  if (steps.empty()) throw std::invalid_argument("directional_derivative: no steps given");
  std::vector<double> sorted(steps.begin(), steps.end());
  for (double s : sorted) {
    if (!(s > 0.0)) throw std::invalid_argument("directional_derivative: steps must be positive");
  }
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  const double fine = sorted[0];
  const Element d_fine = central_difference(table, f, x, h, fine);
  if (sorted.size() == 1) return d_fine;

  // D(eps) = D + c eps^2 + O(eps^4): eliminate the eps^2 term.
  const double coarse = sorted[1];
  const Element d_coarse = central_difference(table, f, x, h, coarse);
  const double c2 = coarse * coarse;
  const double f2 = fine * fine;
  return scalar_mul(1.0 / (c2 - f2), sub(scalar_mul(c2, d_fine), scalar_mul(f2, d_coarse)));
}

Element directional_derivative(const AlgebraTable& table, const AlgebraFunction& f,
                               const Element& x, const Element& h) {
  const double base = default_fd_step(x);
  const double steps[] = {2.0 * base, base};
  return directional_derivative(table, f, x, h, steps);
}

DerivativeResult a_derivative(const AlgebraTable& table, const AlgebraFunction& f,
                              const Element& x, int order) {
  require_dim(table, x, "a_derivative");
  if (order < 0) throw std::invalid_argument("a_derivative: negative order");
  if (order == 0) return {f(table, x), DerivativeMethod::Formal, 0.0};

  if (const AlgebraPolynomial* p = f.as_polynomial()) {
    AlgebraPolynomial d = *p;
    for (int l = 0; l < order; ++l) d = formal_poly_derivative(d);
    return {eval_poly(table, d, x), DerivativeMethod::Formal, 0.0};
  }

  if (order > kMaxBlackBoxOrder) {
    throw UnsupportedRequest("finite-difference derivatives of order " + std::to_string(order) +
                             " are not supported (max " + std::to_string(kMaxBlackBoxOrder) + ")");
  }
  // Step near eps^(1/(order+2)) balances truncation against rounding.
  static constexpr double kStepByOrder[] = {0.0, kDefaultFdStep, 1e-4, 1e-3};
  const double h = kStepByOrder[order] * (1.0 + norm_inf(x));
  const Element unit = table.unit();
  const auto at = [&](double t) { return f(table, offset(x, t, unit)); };

  Element value;
  switch (order) {
    case 1:
      value = scalar_mul(1.0 / (2.0 * h), sub(at(h), at(-h)));
      break;
    case 2:
      value = scalar_mul(1.0 / (h * h),
                         add(sub(at(h), scalar_mul(2.0, f(table, x))), at(-h)));
      break;
    default:  // 3
      value = scalar_mul(1.0 / (2.0 * h * h * h),
                         add(sub(at(2.0 * h), scalar_mul(2.0, at(h))),
                             sub(scalar_mul(2.0, at(-h)), at(-2.0 * h))));
      break;
  }
  return {std::move(value), DerivativeMethod::FiniteDifference, h};
}

CRReport check_cauchy_riemann(const AlgebraTable& table, const AlgebraFunction& f,
                              const Element& x, double h_fd, double tolerance) {
  require_dim(table, x, "check_cauchy_riemann");
  if (!(h_fd > 0.0)) throw std::invalid_argument("check_cauchy_riemann: step must be positive");
  CRReport report;
  report.step = h_fd;
  report.tolerance = tolerance;
  const std::size_t d = table.dim();
  const Element along_unit = central_difference(table, f, x, table.unit(), h_fd);
  for (std::size_t k = 1; k < d; ++k) {
    const Element ek = table.basis(k);
    const Element lhs = central_difference(table, f, x, ek, h_fd);
    const Element rhs = mul(table, ek, along_unit);
    const double r = distance_inf(lhs, rhs);
    report.residuals.push_back(r);
    report.max_residual = std::max(report.max_residual, r);
  }
  return report;
}

Element taylor_eval(const AlgebraTable& table, const AlgebraFunction& f, const Element& x,
                    const Element& h, int order) {
  require_dim(table, h, "taylor_eval");
  if (order < 0) throw std::invalid_argument("taylor_eval: negative order");
  Element sum = f(table, x);
  Element h_power = table.unit();
  double factorial = 1.0;
  for (int l = 1; l <= order; ++l) {
    h_power = mul(table, h_power, h);
    factorial *= l;
    const DerivativeResult d = a_derivative(table, f, x, l);
    sum = add(sum, scalar_mul(1.0 / factorial, mul(table, d.value, h_power)));
  }
  return sum;
}

}  // namespace hypalg
