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

#include "hypalg/polysolve.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <utility>

#include <Eigen/Eigenvalues>

namespace hypalg {

IncompleteSystem::IncompleteSystem(std::size_t count, std::size_t dim)
    : Error("idempotent system has " + std::to_string(count) + " element(s) but the algebra has dimension " +
            std::to_string(dim) + "; the solver needs a complete system") {}

Scalar ScalarPolynomial::operator()(Scalar x) const {
  Scalar acc(0.0);
  for (std::size_t r = coeffs.size(); r-- > 0;) acc = acc * x + coeffs[r];
  return acc;
}

Scalar ScalarPolynomial::derivative_at(Scalar x) const {
  Scalar acc(0.0);
  for (std::size_t r = coeffs.size(); r-- > 1;) acc = acc * x + static_cast<double>(r) * coeffs[r];
  return acc;
}

const char* component_kind_name(ComponentKind kind) noexcept {
  switch (kind) {
    case ComponentKind::Finite:
      return "finite";
    case ComponentKind::AllOfK:
      return "all";
    case ComponentKind::Empty:
      return "empty";
  }
  return "unknown";
}

double RootSet::max_residual() const noexcept {
  double worst = 0.0;
  for (double r : residuals) worst = std::max(worst, r);
  return worst;
}

namespace {

// Parlett-Reinsch balancing by powers of two, applied in place. Norms run
// over full rows and columns; for a companion matrix the diagonal is almost
// entirely zero so this changes little.
void balance(ScalarMatrix& m) {
  const Eigen::Index n = m.rows();
  constexpr double kGamma = 0.9;
  bool changed = true;
  for (int sweep = 0; changed && sweep < 100; ++sweep) {
    changed = false;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double row_norm = m.row(i).cwiseAbs().sum();
      const double col_norm = m.col(i).cwiseAbs().sum();
      if (row_norm == 0.0 || col_norm == 0.0) continue;
      int exponent = 0;
      std::frexp(row_norm / col_norm, &exponent);
      exponent /= 2;
      if (exponent == 0) continue;
      const double scaled_col = std::ldexp(col_norm, exponent);
      const double scaled_row = std::ldexp(row_norm, -exponent);
      if (scaled_col + scaled_row < kGamma * (col_norm + row_norm)) {
        changed = true;
        m.row(i) *= std::ldexp(1.0, -exponent);
        m.col(i) *= std::ldexp(1.0, exponent);
      }
    }
  }
}

std::vector<Scalar> companion_roots(const std::vector<Scalar>& coeffs, std::size_t degree) {
  const Scalar lead = coeffs[degree];
  if (degree == 1) return {-coeffs[0] / lead};
  const auto n = static_cast<Eigen::Index>(degree);
  ScalarMatrix c = ScalarMatrix::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) c(k, k - 1) = 1.0;
  for (Eigen::Index k = 0; k < n; ++k) c(k, n - 1) = -coeffs[static_cast<std::size_t>(k)] / lead;
  balance(c);
  const Eigen::ComplexEigenSolver<ScalarMatrix> solver(c, /*computeEigenvectors=*/false);
  const auto& ev = solver.eigenvalues();
  return {ev.data(), ev.data() + ev.size()};
}

Scalar polish(const ScalarPolynomial& q, Scalar x, int steps) {
  double best = std::abs(q(x));
  for (int s = 0; s < steps && best > 0.0; ++s) {
    const Scalar dq = q.derivative_at(x);
    if (dq == Scalar(0.0)) break;
    const Scalar next = x - q(x) / dq;
    const double value = std::abs(q(next));
    if (!(value < best)) break;
    x = next;
    best = value;
  }
  return x;
}

bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::vector<ScalarPolynomial> reduce(const AlgebraPolynomial& p, const AlgebraTable& table,
                                     const IdempotentSystem& system) {
  if (p.dim() != table.dim()) throw DimensionMismatch("reduce", table.dim(), p.dim());
  if (system.size() != table.dim()) throw IncompleteSystem(system.size(), table.dim());
  std::vector<ScalarPolynomial> out(system.size());
  for (auto& q : out) q.coeffs.resize(p.coeffs().size());
  for (std::size_t r = 0; r < p.coeffs().size(); ++r) {
    const std::vector<Scalar> ks = pierce_project(table, p[r], system);
    for (std::size_t s = 0; s < ks.size(); ++s) out[s].coeffs[r] = ks[s];
  }
  return out;
}

ComponentSolution solve_scalar(const ScalarPolynomial& q, Field field, const SolveOptions& opts) {
  ComponentSolution out;
  std::size_t degree = q.coeffs.size();
  while (degree > 0 && std::abs(q.coeffs[degree - 1]) <= opts.tol_lead) --degree;
  if (degree == 0) {
    out.kind = ComponentKind::AllOfK;
    return out;
  }
  degree -= 1;
  out.effective_degree = degree;
  if (degree == 0) {
    out.kind = ComponentKind::Empty;
    return out;
  }

  const ScalarPolynomial trimmed{{q.coeffs.begin(), q.coeffs.begin() + static_cast<std::ptrdiff_t>(degree) + 1}};
  for (Scalar root : companion_roots(trimmed.coeffs, degree)) {
    root = polish(trimmed, root, opts.newton_steps);
    if (field == Field::Real) {
      // Roots of real polynomials come back with O(eps) imaginary parts; a
      // clustered real root can carry more, so fall back to checking the
      // projection directly before discarding it.
      if (std::abs(root.imag()) > opts.tol_imag && std::abs(trimmed(Scalar(root.real(), 0.0))) > opts.tol_root) {
        continue;
      }
      root = Scalar(root.real(), 0.0);
    }
    out.roots.push_back(root);
  }
  std::sort(out.roots.begin(), out.roots.end(), scalar_less);
  out.residuals.reserve(out.roots.size());
  for (const Scalar& root : out.roots) out.residuals.push_back(std::abs(trimmed(root)));
  return out;
}

RootSet solve(const AlgebraPolynomial& p, const AlgebraTable& table,
              const IdempotentSystem& system, const SolveOptions& opts) {
  RootSet result;
  const std::vector<ScalarPolynomial> reduced = reduce(p, table, system);
  result.components.reserve(reduced.size());
  for (const ScalarPolynomial& q : reduced) {
    result.components.push_back(solve_scalar(q, table.field(), opts));
  }

  bool empty = false;
  std::vector<std::vector<Scalar>> choices;
  for (const ComponentSolution& c : result.components) {
    switch (c.kind) {
      case ComponentKind::AllOfK:
        result.parametric = true;
        choices.push_back({Scalar(0.0)});
        break;
      case ComponentKind::Empty:
        empty = true;
        choices.emplace_back();
        break;
      case ComponentKind::Finite:
        choices.push_back(c.roots);
        break;
    }
  }
  if (empty) return result;

  constexpr std::size_t kSaturated = std::numeric_limits<std::size_t>::max();
  std::size_t total = 1;
  for (const auto& c : choices) {
    if (c.empty()) {
      total = 0;
      break;
    }
    total = total > kSaturated / c.size() ? kSaturated : total * c.size();
  }
  result.combinations = total;
  result.truncated = total > opts.max_roots;
  const std::size_t count = std::min(total, opts.max_roots);

  // Mixed-radix enumeration, last component fastest.
  std::vector<std::size_t> digit(choices.size(), 0);
  std::vector<Scalar> ks(choices.size());
  std::vector<std::pair<Element, double>> found;
  found.reserve(count);
  for (std::size_t n = 0; n < count; ++n) {
    for (std::size_t s = 0; s < choices.size(); ++s) ks[s] = choices[s][digit[s]];
    Element root = recombine(ks, system);
    const double r = residual(p, root, table);
    found.emplace_back(std::move(root), r);
    for (std::size_t s = choices.size(); s-- > 0;) {
      if (++digit[s] < choices[s].size()) break;
      digit[s] = 0;
    }
  }
  std::stable_sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
    return canonical_less(a.first, b.first);
  });
  for (auto& [root, r] : found) {
    result.roots.push_back(std::move(root));
    result.residuals.push_back(r);
  }
  return result;
}

double residual(const AlgebraPolynomial& p, const Element& w, const AlgebraTable& table) {
  return norm_inf(eval_poly(table, p, w));
}

}  // namespace hypalg
