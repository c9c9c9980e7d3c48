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

#include <gtest/gtest.h>

#include <random>

#include "hypalg/format.hpp"
#include "hypalg/polysolve.hpp"
#include "hypalg/spectral.hpp"
#include "test_support.hpp"

namespace hypalg {
namespace {

using testing::bicomplex;
using testing::distance_to_set;
using testing::efg;
using testing::max_abs_diff;
using testing::real_element;

const Element kI1 = real_element({0.5, 0.5});
const Element kI2 = real_element({0.5, -0.5});

IdempotentSystem paper_system() {
  return accept_idempotent_system(bicomplex(), {kI1, kI2}, Provenance::Fixture);
}

AlgebraPolynomial poly(std::initializer_list<Element> coeffs) { return AlgebraPolynomial(coeffs); }

// Horner in K, independent of the library's ScalarPolynomial.
Scalar horner(const std::vector<Scalar>& c, Scalar x) {
  Scalar acc = 0.0;
  for (std::size_t r = c.size(); r-- > 0;) acc = acc * x + c[r];
  return acc;
}

// ---- reduce ----

TEST(Reduce, Examples) {
  const AlgebraTable t = bicomplex();
  const IdempotentSystem s = paper_system();
  const Element one = t.unit(), e = t.basis(1), zero = t.zero();

  auto qs = reduce(poly({neg(one), zero, one}), t, s);
  ASSERT_EQ(qs.size(), 2u);
  for (const auto& q : qs) EXPECT_EQ(q.coeffs, (std::vector<Scalar>{-1.0, 0.0, 1.0}));

  qs = reduce(poly({zero, neg(one), one}), t, s);
  for (const auto& q : qs) EXPECT_EQ(q.coeffs, (std::vector<Scalar>{0.0, -1.0, 1.0}));

  qs = reduce(poly({neg(one), e}), t, s);
  EXPECT_EQ(qs[0].coeffs, (std::vector<Scalar>{-1.0, 1.0}));
  EXPECT_EQ(qs[1].coeffs, (std::vector<Scalar>{-1.0, -1.0}));
}

TEST(Reduce, IncompleteSystemRejected) {
  const AlgebraTable t = bicomplex();
  const IdempotentSystem unit_only{{t.unit()}, 1e-8, Provenance::UserSupplied};
  EXPECT_THROW(reduce(poly({t.unit()}), t, unit_only), IncompleteSystem);
  EXPECT_THROW(solve(poly({t.unit()}), t, unit_only), IncompleteSystem);
}

TEST(Reduce, DimensionMismatchRejected) {
  const AlgebraTable t = bicomplex();
  EXPECT_THROW(reduce(poly({efg().unit()}), t, paper_system()), DimensionMismatch);
}

// ---- solve_scalar ----

TEST(SolveScalar, Examples) {
  ComponentSolution c = solve_scalar({{-1.0, 0.0, 1.0}}, Field::Real);
  EXPECT_EQ(c.kind, ComponentKind::Finite);
  ASSERT_EQ(c.roots.size(), 2u);
  EXPECT_NEAR(c.roots[0].real(), -1.0, 1e-15);
  EXPECT_NEAR(c.roots[1].real(), 1.0, 1e-15);
  EXPECT_EQ(c.roots[0].imag(), 0.0);

  c = solve_scalar({{1.0, 0.0, 1.0}}, Field::Real);
  EXPECT_EQ(c.kind, ComponentKind::Finite);
  EXPECT_TRUE(c.roots.empty());

  c = solve_scalar({{0.0, 0.0, 0.0}}, Field::Real);
  EXPECT_EQ(c.kind, ComponentKind::AllOfK);
  EXPECT_TRUE(c.roots.empty());

  c = solve_scalar({{5.0}}, Field::Real);
  EXPECT_EQ(c.kind, ComponentKind::Empty);
  EXPECT_TRUE(c.roots.empty());
}

TEST(SolveScalar, ComplexFieldKeepsComplexRoots) {
  const ComponentSolution c = solve_scalar({{1.0, 0.0, 1.0}}, Field::Complex);
  ASSERT_EQ(c.roots.size(), 2u);
  EXPECT_LE(std::abs(c.roots[0] - Scalar(0.0, -1.0)), 1e-15);
  EXPECT_LE(std::abs(c.roots[1] - Scalar(0.0, 1.0)), 1e-15);
}

TEST(SolveScalar, LeadingCoefficientsStripped) {
  const ComponentSolution c = solve_scalar({{-2.0, 1.0, 1e-13, 0.0}}, Field::Real);
  EXPECT_EQ(c.effective_degree, 1u);
  ASSERT_EQ(c.roots.size(), 1u);
  EXPECT_NEAR(c.roots[0].real(), 2.0, 1e-15);
  // tiny constant with zero higher terms is still AllOfK
  EXPECT_EQ(solve_scalar({{1e-13, 0.0}}, Field::Real).kind, ComponentKind::AllOfK);
  EXPECT_EQ(solve_scalar({{1e-11, 1e-13}}, Field::Real).kind, ComponentKind::Empty);
}

TEST(SolveScalar, RepeatedRealRootsSurvive) {
  // (x - 1)^3 = x^3 - 3x^2 + 3x - 1
  const ComponentSolution c = solve_scalar({{-1.0, 3.0, -3.0, 1.0}}, Field::Real);
  ASSERT_EQ(c.kind, ComponentKind::Finite);
  EXPECT_GE(c.roots.size(), 1u);
  EXPECT_LE(c.roots.size(), 3u);
  for (const Scalar& r : c.roots) EXPECT_NEAR(r.real(), 1.0, 1e-4);
}

TEST(SolveScalar, RootsAreSortedAndCountBounded) {
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (int n = 0; n < 50; ++n) {
    std::vector<Scalar> c(6);
    for (auto& z : c) z = Scalar(dist(rng), dist(rng));
    const ComponentSolution sol = solve_scalar({c}, Field::Complex);
    EXPECT_EQ(sol.roots.size(), 5u);
    EXPECT_EQ(sol.residuals.size(), sol.roots.size());
    for (std::size_t k = 1; k < sol.roots.size(); ++k) {
      const bool ordered = sol.roots[k - 1].real() < sol.roots[k].real() ||
                           (sol.roots[k - 1].real() == sol.roots[k].real() &&
                            sol.roots[k - 1].imag() <= sol.roots[k].imag());
      EXPECT_TRUE(ordered);
    }
  }
}

TEST(SolveScalar, RandomMonicCorrectness) {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (Field field : {Field::Real, Field::Complex}) {
    for (int n = 0; n < 400; ++n) {
      const std::size_t degree = 1 + static_cast<std::size_t>(n % 8);
      std::vector<Scalar> c(degree + 1);
      for (std::size_t r = 0; r < degree; ++r)
        c[r] = Scalar(dist(rng), field == Field::Complex ? dist(rng) : 0.0);
      c[degree] = 1.0;
      double scale = 0.0;
      for (const Scalar& z : c) scale = std::max(scale, std::abs(z));
      const ComponentSolution sol = solve_scalar({c}, field);
      if (field == Field::Complex) EXPECT_EQ(sol.roots.size(), degree);
      if (field == Field::Real && degree % 2 == 1) EXPECT_GE(sol.roots.size(), 1u);
      for (const Scalar& root : sol.roots) {
        EXPECT_LE(std::abs(horner(c, root)), 1e-8 * (1.0 + scale)) << "degree " << degree;
        if (field == Field::Real) EXPECT_EQ(root.imag(), 0.0);
      }
    }
  }
}

// ---- solve ----

TEST(Solve, BicomplexSquareRootsOfUnity) {
  const AlgebraTable t = bicomplex();
  const Element one = t.unit(), e = t.basis(1);
  const RootSet rs = solve(load_polynomial(testing::fixture("w2_minus_1.poly"), t), t, paper_system());
  ASSERT_EQ(rs.roots.size(), 4u);
  for (const Element& expected : {one, neg(one), e, neg(e)})
    EXPECT_LE(distance_to_set(expected, rs.roots), 1e-12);
  EXPECT_FALSE(rs.truncated);
  EXPECT_FALSE(rs.parametric);
  EXPECT_EQ(rs.combinations, 4u);
  EXPECT_LE(rs.max_residual(), 1e-12);
}

TEST(Solve, BicomplexIdempotentEquation) {
  const AlgebraTable t = bicomplex();
  const RootSet rs = solve(load_polynomial(testing::fixture("w2_minus_w.poly"), t), t, paper_system());
  ASSERT_EQ(rs.roots.size(), 4u);
  for (const Element& expected : {t.zero(), t.unit(), kI1, kI2})
    EXPECT_LE(distance_to_set(expected, rs.roots), 1e-12);
}

TEST(Solve, EfgSixteenSquareRoots) {
  const AlgebraTable t = efg();
  const IdempotentSystem s = find_idempotent_system(t);
  const RootSet rs = solve(load_polynomial(testing::fixture("efg_w2_minus_1.poly"), t), t, s);
  ASSERT_EQ(rs.roots.size(), 16u);
  // Oracle: every sign vector recombined directly through the known idempotents.
  std::vector<Element> expected;
  const std::vector<Element> idems{real_element({0.25, 0.25, 0.25, 0.25}),
                                   real_element({0.25, -0.25, -0.25, 0.25}),
                                   real_element({0.25, 0.25, -0.25, -0.25}),
                                   real_element({0.25, -0.25, 0.25, -0.25})};
  for (int mask = 0; mask < 16; ++mask) {
    Element w(4);
    for (int l = 0; l < 4; ++l) w = add(w, scalar_mul((mask >> l) & 1 ? -1.0 : 1.0, idems[l]));
    expected.push_back(w);
  }
  for (const Element& w : expected) EXPECT_LE(distance_to_set(w, rs.roots), 1e-10);
  for (const Element& b : {t.unit(), t.basis(1), t.basis(2), t.basis(3)}) {
    EXPECT_LE(distance_to_set(b, rs.roots), 1e-10);
    EXPECT_LE(distance_to_set(neg(b), rs.roots), 1e-10);
  }
  for (double r : rs.residuals) EXPECT_LE(r, 1e-10);
}

TEST(Solve, RootsAreCanonicallyOrdered) {
  const AlgebraTable t = efg();
  const RootSet rs = solve(load_polynomial(testing::fixture("efg_w2_minus_1.poly"), t), t,
                           find_idempotent_system(t));
  for (std::size_t k = 1; k < rs.roots.size(); ++k)
    EXPECT_TRUE(canonical_less(rs.roots[k - 1], rs.roots[k]));
}

TEST(Solve, DegenerateComponents) {
  const AlgebraTable t = bicomplex();
  const IdempotentSystem s = paper_system();
  // i2 * (w^2 - 1): component 1 vanishes identically
  const RootSet all = solve(poly({neg(kI2), t.zero(), kI2}), t, s);
  EXPECT_EQ(all.components[0].kind, ComponentKind::AllOfK);
  EXPECT_EQ(all.components[1].kind, ComponentKind::Finite);
  EXPECT_TRUE(all.parametric);
  ASSERT_EQ(all.roots.size(), 2u);
  for (const Element& w : all.roots) {
    EXPECT_LE(residual(poly({neg(kI2), t.zero(), kI2}), w, t), 1e-12);
    // adding any multiple of i1 stays a root
    EXPECT_LE(residual(poly({neg(kI2), t.zero(), kI2}), add(w, scalar_mul(3.7, kI1)), t), 1e-12);
  }

  // i1 + i2 * (w^2 - 1): component 1 is the constant 1
  const RootSet none = solve(poly({sub(kI1, kI2), t.zero(), kI2}), t, s);
  EXPECT_EQ(none.components[0].kind, ComponentKind::Empty);
  EXPECT_TRUE(none.roots.empty());
  EXPECT_FALSE(none.parametric);
}

TEST(Solve, TruncationCapsEnumeration) {
  const AlgebraTable t = efg();
  SolveOptions opts;
  opts.max_roots = 5;
  const RootSet rs = solve(load_polynomial(testing::fixture("efg_w2_minus_1.poly"), t), t,
                           find_idempotent_system(t), opts);
  EXPECT_TRUE(rs.truncated);
  EXPECT_EQ(rs.roots.size(), 5u);
  EXPECT_EQ(rs.combinations, 16u);
}

TEST(Solve, RealFieldWithoutRealRoots) {
  const AlgebraTable t = efg();
  // w^2 + 1 has no solutions over R in any component
  const RootSet rs = solve(poly({t.unit(), t.zero(), t.unit()}), t, find_idempotent_system(t));
  EXPECT_TRUE(rs.roots.empty());
  for (const auto& c : rs.components) EXPECT_EQ(c.kind, ComponentKind::Finite);
}

// ---- residual ----

TEST(Residual, Examples) {
  const AlgebraTable t = bicomplex();
  const AlgebraPolynomial w2_minus_1 = poly({neg(t.unit()), t.zero(), t.unit()});
  const AlgebraPolynomial w2_minus_w = poly({t.zero(), neg(t.unit()), t.unit()});
  EXPECT_EQ(residual(w2_minus_1, t.basis(1), t), 0.0);
  EXPECT_EQ(residual(w2_minus_1, t.zero(), t), 1.0);
  EXPECT_EQ(residual(w2_minus_w, kI1, t), 0.0);
  EXPECT_THROW(residual(w2_minus_1, Element(4), t), DimensionMismatch);
}

// ---- properties ----

class PolysolveProperties : public ::testing::TestWithParam<const char*> {
 protected:
  void SetUp() override {
    table_ = std::make_unique<AlgebraTable>(load_algebra(testing::fixture(GetParam())));
    system_ = find_idempotent_system(*table_);
  }
  std::unique_ptr<AlgebraTable> table_;
  IdempotentSystem system_;
};

TEST_P(PolysolveProperties, ReductionCommutesWithEvaluation) {
  std::mt19937_64 rng(61);
  for (int n = 0; n < 100; ++n) {
    const AlgebraPolynomial p = testing::random_polynomial(*table_, 1 + n % 4, rng);
    const Element w = testing::random_element(*table_, rng);
    const auto qs = reduce(p, *table_, system_);
    const auto kw = pierce_project(*table_, w, system_);
    const auto kp = pierce_project(*table_, testing::naive_eval(*table_, p, w), system_);
    for (std::size_t s = 0; s < qs.size(); ++s)
      EXPECT_LE(std::abs(kp[s] - horner(qs[s].coeffs, kw[s])), 1e-8);
  }
}

TEST_P(PolysolveProperties, EveryReportedRootSatisfiesTheEquation) {
  std::mt19937_64 rng(62);
  for (int n = 0; n < 30; ++n) {
    const AlgebraPolynomial p = testing::random_polynomial(*table_, 1 + n % 3, rng);
    const RootSet rs = solve(p, *table_, system_);
    for (const Element& w : rs.roots)
      EXPECT_LE(norm_inf(testing::naive_eval(*table_, p, w)), 1e-8);
  }
}

TEST_P(PolysolveProperties, NewtonOracleFindsNothingNew) {
  std::mt19937_64 rng(63);
  std::size_t converged = 0;
  for (int n = 0; n < 6; ++n) {
    const AlgebraPolynomial p = testing::random_polynomial(*table_, 2 + n % 2, rng);
    const RootSet rs = solve(p, *table_, system_);
    const auto found = testing::newton_multistart(*table_, p, 256, 100, 1e-10, 1000 + n);
    converged += found.size();
    for (const Element& w : found) EXPECT_LE(distance_to_set(w, rs.roots), 1e-6);
  }
  EXPECT_GT(converged, 0u);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, PolysolveProperties,
                         ::testing::Values("bicomplex.alg", "efg.alg"));

TEST(SolveCompleteness, GenericBicomplexHasSquaredRootCount) {
  const AlgebraTable t = bicomplex();
  const IdempotentSystem s = paper_system();
  std::mt19937_64 rng(64);
  for (int n = 0; n < 60; ++n) {
    const std::size_t m = 1 + static_cast<std::size_t>(n % 6);
    AlgebraPolynomial p = testing::random_polynomial(t, m, rng);
    const auto lead = pierce_project(t, p[m], s);
    if (std::abs(lead[0]) < 0.1 || std::abs(lead[1]) < 0.1) continue;
    const RootSet rs = solve(p, t, s);
    EXPECT_EQ(rs.roots.size(), m * m);
    for (double r : rs.residuals) EXPECT_LE(r, 1e-8);
  }
}

}  // namespace
}  // namespace hypalg
