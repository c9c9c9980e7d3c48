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

// AVX2/FMA variants. This translation unit is compiled with -mavx2 -mfma and
// must only be entered after the dispatcher has checked CPU support.

#include <immintrin.h>

#include <cmath>

#include "kernels_impl.hpp"

namespace hypalg::kernels::detail {

namespace {

// Two complex numbers per register: [re0, im0, re1, im1].
inline __m256d load2(const Complex* p) { return _mm256_loadu_pd(reinterpret_cast<const double*>(p)); }
inline void store2(Complex* p, __m256d v) { _mm256_storeu_pd(reinterpret_cast<double*>(p), v); }

// s * x for broadcast s = (sr, si).
inline __m256d cmul_broadcast(__m256d sr, __m256d si, __m256d x) {
  const __m256d swapped = _mm256_permute_pd(x, 0b0101);  // [im0, re0, im1, re1]
  return _mm256_fmaddsub_pd(sr, x, _mm256_mul_pd(si, swapped));
}

inline void axpy_body(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const __m256d ar = _mm256_set1_pd(alpha.real());
  const __m256d ai = _mm256_set1_pd(alpha.imag());
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d prod = cmul_broadcast(ar, ai, load2(x + k));
    store2(y + k, _mm256_add_pd(load2(y + k), prod));
  }
  for (; k < n; ++k) {
    const double xr = x[k].real();
    const double xi = x[k].imag();
    y[k] = Complex(y[k].real() + std::fma(alpha.real(), xr, -alpha.imag() * xi),
                   y[k].imag() + std::fma(alpha.real(), xi, alpha.imag() * xr));
  }
}

}  // namespace

void structure_product_avx2(const Complex* a, const Complex* b, const Complex* constants,
                            std::size_t dim, Complex* out) {
  for (std::size_t k = 0; k < dim; ++k) out[k] = Complex(0.0, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const Complex s = pair_weight(a, b, i, j);
      if (s.real() == 0.0 && s.imag() == 0.0) continue;
      axpy_body(s, constants + (i * dim + j) * dim, out, dim);
    }
  }
}

void axpy_avx2(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  axpy_body(alpha, x, y, n);
}

Complex dot_conj_avx2(const Complex* x, const Complex* y, std::size_t n) {
  // direct = x*y lane-wise: [xr yr, xi yi, ...]; cross = x*swap(y): [xr yi, xi yr, ...]
  __m256d direct = _mm256_setzero_pd();
  __m256d cross = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d xv = load2(x + k);
    const __m256d yv = load2(y + k);
    direct = _mm256_fmadd_pd(xv, yv, direct);
    cross = _mm256_fmadd_pd(xv, _mm256_permute_pd(yv, 0b0101), cross);
  }
  alignas(32) double d[4];
  alignas(32) double c[4];
  _mm256_store_pd(d, direct);
  _mm256_store_pd(c, cross);
  double re = (d[0] + d[1]) + (d[2] + d[3]);
  double im = (c[1] - c[0]) + (c[3] - c[2]);
  for (; k < n; ++k) {
    re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
    im += x[k].imag() * y[k].real() - x[k].real() * y[k].imag();
  }
  return {re, im};
}

double max_abs_avx2(const Complex* x, std::size_t n) {
  __m256d best = _mm256_setzero_pd();
  bool saw_nan = false;
  std::size_t k = 0;
  for (; k + 2 <= n; k += 2) {
    const __m256d v = load2(x + k);
    const __m256d sq = _mm256_mul_pd(v, v);
    const __m256d m = _mm256_add_pd(sq, _mm256_permute_pd(sq, 0b0101));
    saw_nan |= _mm256_movemask_pd(_mm256_cmp_pd(m, m, _CMP_UNORD_Q)) != 0;
    best = _mm256_max_pd(best, m);
  }
  alignas(32) double lanes[4];
  _mm256_store_pd(lanes, best);
  double result = std::fmax(std::fmax(lanes[0], lanes[1]), std::fmax(lanes[2], lanes[3]));
  for (; k < n; ++k) {
    const double m = x[k].real() * x[k].real() + x[k].imag() * x[k].imag();
    if (std::isnan(m)) saw_nan = true;
    if (m > result) result = m;
  }
  if (saw_nan) return std::nan("");
  return std::sqrt(result);
}

}  // namespace hypalg::kernels::detail
