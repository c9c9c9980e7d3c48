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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "hypalg/cli.hpp"
#include "hypalg/holomorphy.hpp"
#include "hypalg/polysolve.hpp"
#include "hypalg/spectral.hpp"
#include "test_support.hpp"

namespace {

using namespace hypalg;
using hypalg::testing::distance_to_set;
using hypalg::testing::fixture;
using hypalg::testing::max_abs_diff;
using hypalg::testing::real_element;

constexpr double kIdemCoefTol = 1e-10;
constexpr double kIdemResidualTol = 1e-10;
constexpr double kDiscoveryBudgetMs = 50.0;
constexpr double kExactRootTol = 1e-10;
constexpr double kGenericResidualTol = 1e-8;
constexpr double kOracleDistanceTol = 1e-6;
constexpr double kGenericBudgetMs = 5000.0;
constexpr double kLeadFloor = 0.1;
constexpr double kCrTol = 1e-6;
constexpr double kCrStep = 1e-5;
constexpr double kCrCoarse = 1e-3;
constexpr double kCrHalf = 5e-4;
constexpr double kShrinkLow = 3.0;
constexpr double kShrinkHigh = 5.0;
constexpr double kConjTol = 1e-9;
constexpr double kEquivalenceTol = 1e-6;
constexpr double kTaylorTol = 1e-10;
constexpr double kFailureBudgetMs = 100.0;
constexpr double kSeedMatchTol = 1e-8;

struct Verdict {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

void check_discovery(Verdict& v, const AlgebraTable& t, const std::vector<Element>& expected) {
  const auto start = std::chrono::steady_clock::now();
  const IdempotentSystem s = find_idempotent_system(t);
  const double ms = elapsed_ms(start);
  v.require(s.size() == expected.size(), "count " + std::to_string(s.size()));
  double worst = 0.0;
  for (const Element& e : expected) worst = std::max(worst, distance_to_set(e, s.idems));
  for (const Element& f : s.idems) worst = std::max(worst, distance_to_set(f, expected));
  v.require(worst <= kIdemCoefTol, "coefficient error " + num(worst));
  const SystemReport r = verify_idempotent_system(t, s, kIdemResidualTol);
  v.require(r.idempotency <= kIdemResidualTol, "idempotency " + num(r.idempotency));
  v.require(r.orthogonality <= kIdemResidualTol, "orthogonality " + num(r.orthogonality));
  v.require(r.completeness <= kIdemResidualTol, "completeness " + num(r.completeness));
  v.require(ms < kDiscoveryBudgetMs, "runtime " + num(ms) + " ms");
  if (v.pass)
    v.detail = "max coef err " + num(worst) + ", residuals " + num(std::max({r.idempotency, r.orthogonality, r.completeness})) +
               ", " + num(ms) + " ms";
}

Verdict criterion1() {
  Verdict v;
  check_discovery(v, hypalg::testing::bicomplex(), {real_element({0.5, 0.5}), real_element({0.5, -0.5})});
  return v;
}

Verdict criterion2() {
  Verdict v;
  std::vector<Element> expected;
  for (int se : {1, -1})
    for (int sf : {1, -1}) expected.push_back(real_element({0.25, 0.25 * se, 0.25 * sf, 0.25 * se * sf}));
  check_discovery(v, hypalg::testing::efg(), expected);
  return v;
}

void check_exact_roots(Verdict& v, const char* label, const AlgebraTable& t, const char* poly_file,
                       const std::vector<Element>& must_contain, std::size_t count) {
  const AlgebraPolynomial p = load_polynomial(fixture(poly_file), t);
  const RootSet rs = solve(p, t, find_idempotent_system(t));
  v.require(rs.roots.size() == count, std::string(label) + " count " + std::to_string(rs.roots.size()));
  for (const Element& e : must_contain)
    v.require(distance_to_set(e, rs.roots) <= kExactRootTol, std::string(label) + " missing root");
  for (const Element& w : rs.roots)
    v.require(norm_inf(hypalg::testing::naive_eval(t, p, w)) <= kExactRootTol, std::string(label) + " residual");
}

Verdict criterion3() {
  Verdict v;
  const AlgebraTable b = hypalg::testing::bicomplex();
  const Element one = b.unit(), e = b.basis(1);
  check_exact_roots(v, "w^2-1", b, "w2_minus_1.poly", {one, neg(one), e, neg(e)}, 4);
  check_exact_roots(v, "w^2-w", b, "w2_minus_w.poly",
                    {b.zero(), one, real_element({0.5, 0.5}), real_element({0.5, -0.5})}, 4);
  const AlgebraTable a = hypalg::testing::efg();
  std::vector<Element> signs;
  for (std::size_t k = 0; k < 4; ++k) {
    signs.push_back(a.basis(k));
    signs.push_back(neg(a.basis(k)));
  }
  check_exact_roots(v, "efg w^2-1", a, "efg_w2_minus_1.poly", signs, 16);
  if (v.pass) v.detail = "4 + 4 + 16 roots, residuals <= " + num(kExactRootTol);
  return v;
}

Verdict criterion4() {
  Verdict v;
  const auto start = std::chrono::steady_clock::now();
  const AlgebraTable t = hypalg::testing::bicomplex();
  const IdempotentSystem s = find_idempotent_system(t);
  std::mt19937_64 rng(2026);
  int accepted = 0;
  double worst_residual = 0.0, worst_distance = 0.0;
  std::size_t oracle_hits = 0;
  while (accepted < 50) {
    const AlgebraPolynomial p = hypalg::testing::random_polynomial(t, 3, rng);
    const auto lead = pierce_project(t, p[3], s);
    if (std::abs(lead[0]) < kLeadFloor || std::abs(lead[1]) < kLeadFloor) continue;
    ++accepted;
    const RootSet rs = solve(p, t, s);
    v.require(rs.roots.size() == 9, "root count " + std::to_string(rs.roots.size()));
    for (const Element& w : rs.roots)
      worst_residual = std::max(worst_residual, norm_inf(hypalg::testing::naive_eval(t, p, w)));
    const auto found = hypalg::testing::newton_multistart(t, p, 256, 100, 1e-10, 9000 + accepted);
    oracle_hits += found.size();
    for (const Element& w : found) worst_distance = std::max(worst_distance, distance_to_set(w, rs.roots));
  }
  const double ms = elapsed_ms(start);
  v.require(worst_residual <= kGenericResidualTol, "residual " + num(worst_residual));
  v.require(worst_distance <= kOracleDistanceTol, "oracle distance " + num(worst_distance));
  v.require(oracle_hits > 0, "oracle converged nowhere");
  v.require(ms < kGenericBudgetMs, "runtime " + num(ms) + " ms");
  if (v.pass)
    v.detail = "50 x 9 roots, max residual " + num(worst_residual) + ", oracle max distance " +
               num(worst_distance) + " over " + std::to_string(oracle_hits) + " converged starts, " +
               num(ms) + " ms";
  return v;
}

Verdict criterion5() {
  Verdict v;
  const AlgebraTable t = hypalg::testing::bicomplex();
  const IdempotentSystem s = find_idempotent_system(t);
  const Element i1 = s[0], i2 = s[1];
  // i2 (w^2 - 1): first component vanishes identically.
  const RootSet all = solve(AlgebraPolynomial({neg(i2), t.zero(), i2}), t, s);
  v.require(all.components[0].kind == ComponentKind::AllOfK, "first component not AllOfK");
  v.require(all.parametric, "parametric unset");
  // i1 + i2 (w^2 - 1): first component is the constant 1.
  const RootSet none = solve(AlgebraPolynomial({sub(i1, i2), t.zero(), i2}), t, s);
  v.require(none.components[0].kind == ComponentKind::Empty, "first component not Empty");
  v.require(none.roots.empty(), "roots not empty");

  const auto dir = std::filesystem::temp_directory_path();
  const auto path = dir / ("hypalg-acceptance-" + std::to_string(::getpid()) + ".poly");
  {
    std::ofstream out(path);
    out << "degree: 2\ncoeff 0 : 1 0\ncoeff 2 : 0.5 -0.5\n";
  }
  std::ostringstream sink, err;
  const int code = cli::main_entry({"solve", "--algebra", fixture("bicomplex.alg"), "--poly", path.string(),
                                    "--format", "machine"},
                                   sink, err);
  std::filesystem::remove(path);
  v.require(code == cli::kSuccess && nlohmann::json::parse(sink.str())["roots"].empty(),
            "cli exit " + std::to_string(code) + " or roots reported");
  if (v.pass) v.detail = "AllOfK -> parametric, Empty -> no roots, exit 0";
  return v;
}

Verdict criterion6() {
  Verdict v;
  double worst = 0.0, lo_ratio = 1e300, hi_ratio = 0.0;
  for (const AlgebraTable& t : {hypalg::testing::bicomplex(), hypalg::testing::efg()}) {
    const AlgebraFunction f = AlgebraFunction::polynomial(AlgebraPolynomial::monomial(t.unit(), 3));
    std::mt19937_64 rng(606);
    for (int n = 0; n < 16; ++n) {
      const Element x = hypalg::testing::random_element(t, rng);
      worst = std::max(worst, check_cauchy_riemann(t, f, x, kCrStep).max_residual);
      const double coarse = check_cauchy_riemann(t, f, x, kCrCoarse).max_residual;
      const double half = check_cauchy_riemann(t, f, x, kCrHalf).max_residual;
      const double ratio = half > 0.0 ? coarse / half : (coarse > 0.0 ? 1e300 : 0.0);
      lo_ratio = std::min(lo_ratio, ratio);
      hi_ratio = std::max(hi_ratio, ratio);
    }
  }
  v.require(worst <= kCrTol, "residual at 1e-5 " + num(worst));
  v.require(lo_ratio >= kShrinkLow && hi_ratio <= kShrinkHigh,
            "shrink factor 1e-3 -> 5e-4 in [" + num(lo_ratio) + ", " + num(hi_ratio) + "], need [3, 5]");

  const AlgebraTable b = hypalg::testing::bicomplex();
  const AlgebraFunction conj =
      AlgebraFunction::black_box([](const Element& x) { return Element{x[0], -x[1]}; });
  std::mt19937_64 rng(607);
  double conj_err = 0.0;
  for (int n = 0; n < 16; ++n) {
    const CRReport r = check_cauchy_riemann(b, conj, hypalg::testing::random_element(b, rng), kCrStep);
    conj_err = std::max(conj_err, std::abs(r.residuals[0] - 2.0));
  }
  v.require(conj_err <= kConjTol, "conj |r - 2| " + num(conj_err));
  if (v.pass) v.detail = "max residual " + num(worst) + ", conj |r - 2| " + num(conj_err);
  else v.detail += " (max residual " + num(worst) + ", conj |r - 2| " + num(conj_err) + ")";
  return v;
}

Verdict criterion7() {
  Verdict v;
  double worst = 0.0;
  for (const AlgebraTable& t : {hypalg::testing::bicomplex(), hypalg::testing::efg()}) {
    std::mt19937_64 rng(707);
    for (int n = 0; n < 20; ++n) {
      const AlgebraPolynomial p = hypalg::testing::random_polynomial(t, 1 + n % 4, rng);
      const AlgebraFunction f = AlgebraFunction::polynomial(p);
      const Element x = hypalg::testing::random_element(t, rng), h = hypalg::testing::random_element(t, rng);
      const DerivativeResult d = a_derivative(t, f, x, 1);
      v.require(d.method == DerivativeMethod::Formal, "derivative not formal");
      worst = std::max(worst, max_abs_diff(directional_derivative(t, f, x, h), hypalg::testing::naive_mul(t, h, d.value)));
    }
  }
  v.require(worst <= kEquivalenceTol, "max difference " + num(worst));
  if (v.pass) v.detail = "max difference " + num(worst);
  return v;
}

Verdict criterion8() {
  Verdict v;
  double worst = 0.0;
  for (const AlgebraTable& t : {hypalg::testing::bicomplex(), hypalg::testing::efg()}) {
    std::mt19937_64 rng(808);
    for (int n = 0; n < 100; ++n) {
      const std::size_t m = static_cast<std::size_t>(n % 5);
      const AlgebraPolynomial p = hypalg::testing::random_polynomial(t, m, rng);
      const Element x = hypalg::testing::random_element(t, rng), h = hypalg::testing::random_element(t, rng);
      const Element series = taylor_eval(t, AlgebraFunction::polynomial(p), x, h, static_cast<int>(m));
      worst = std::max(worst, max_abs_diff(series, hypalg::testing::naive_eval(t, p, add(x, h))));
    }
  }
  v.require(worst <= kTaylorTol, "max difference " + num(worst));
  if (v.pass) v.detail = "max difference " + num(worst);
  return v;
}

Verdict criterion9() {
  Verdict v;
  const std::pair<const char*, SpectralFailure> cases[] = {
      {"dual.alg", SpectralFailure::NotSemisimpleOrDegenerate},
      {"complex_over_reals.alg", SpectralFailure::NonSplit}};
  std::string timings;
  for (const auto& [file, kind] : cases) {
    const AlgebraTable t = load_algebra(fixture(file));
    const auto start = std::chrono::steady_clock::now();
    try {
      find_idempotent_system(t);
      v.require(false, std::string(file) + " did not fail");
    } catch (const SpectralError& e) {
      const double ms = elapsed_ms(start);
      v.require(e.kind() == kind, std::string(file) + " gave " + failure_name(e.kind()));
      v.require(e.attempts() <= 1 + 8, std::string(file) + " attempts " + std::to_string(e.attempts()));
      v.require(ms < kFailureBudgetMs, std::string(file) + " runtime " + num(ms) + " ms");
      timings += std::string(timings.empty() ? "" : ", ") + failure_name(e.kind()) + " " + num(ms) + " ms";
    }
  }
  if (v.pass) v.detail = timings;
  return v;
}

std::string cli_output(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  cli::main_entry(args, out, err);
  return out.str();
}

Verdict criterion10() {
  Verdict v;
  const std::vector<std::vector<std::string>> commands{
      {"idempotents", "--algebra", fixture("efg.alg"), "--seed", "11", "--format", "machine"},
      {"idempotents", "--algebra", fixture("bicomplex.alg"), "--seed", "11", "--format", "machine"},
      {"solve", "--algebra", fixture("efg.alg"), "--poly", fixture("efg_w2_minus_1.poly"), "--seed", "11",
       "--format", "machine"},
      {"solve", "--algebra", fixture("bicomplex.alg"), "--poly", fixture("w2_minus_1.poly"), "--seed", "11",
       "--format", "machine"}};
  for (const auto& cmd : commands) {
    const std::string a = cli_output(cmd), b = cli_output(cmd);
    v.require(!a.empty() && a == b, cmd[0] + " output differs between runs");
  }
  double worst = 0.0;
  for (const AlgebraTable& t : {hypalg::testing::bicomplex(), hypalg::testing::efg()}) {
    const IdempotentSystem ref = find_idempotent_system(t, {.seed = 0});
    for (std::uint64_t seed : {1u, 2u, 3u, 1000u, 987654321u}) {
      const IdempotentSystem s = find_idempotent_system(t, {.seed = seed});
      v.require(s.size() == ref.size(), "size differs for seed " + std::to_string(seed));
      for (const Element& e : s.idems) worst = std::max(worst, distance_to_set(e, ref.idems));
    }
  }
  v.require(worst <= kSeedMatchTol, "cross-seed distance " + num(worst));
  if (v.pass) v.detail = "byte-identical reruns, cross-seed distance " + num(worst);
  return v;
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Verdict()>> criteria[] = {
      {"1  idempotent recovery, bicomplex", criterion1},
      {"2  idempotent recovery, efg", criterion2},
      {"3  exact roots", criterion3},
      {"4  generic completeness and Newton oracle", criterion4},
      {"5  degenerate components", criterion5},
      {"6  Cauchy-Riemann residuals", criterion6},
      {"7  derivative equivalence", criterion7},
      {"8  Taylor termination", criterion8},
      {"9  failure diagnostics", criterion9},
      {"10 determinism", criterion10},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Verdict v;
    try {
      v = run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.detail = std::string("exception: ") + e.what();
    }
    if (!v.pass) ++failures;
    std::printf("%s  %-45s %s\n", v.pass ? "PASS" : "FAIL", name, v.detail.c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures,
              std::size(criteria));
  return failures == 0 ? 0 : 1;
}
