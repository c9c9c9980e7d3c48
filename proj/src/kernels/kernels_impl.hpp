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

#ifndef HYPALG_SRC_KERNELS_IMPL_HPP
#define HYPALG_SRC_KERNELS_IMPL_HPP

#include "hypalg/kernels.hpp"

namespace hypalg::kernels::detail {

// Symmetric in (a, b): each product is written so that operand order only
// swaps the factors of a multiplication or the terms of an addition.
inline Complex pair_weight(const Complex* a, const Complex* b, std::size_t i, std::size_t j) {
  const double air = a[i].real(), aii = a[i].imag();
  const double bir = b[i].real(), bii = b[i].imag();
  if (i == j) {
    return {air * bir - aii * bii, air * bii + aii * bir};
  }
  const double ajr = a[j].real(), aji = a[j].imag();
  const double bjr = b[j].real(), bji = b[j].imag();
  const double re = (air * bjr - aii * bji) + (ajr * bir - aji * bii);
  const double im = (air * bji + aii * bjr) + (ajr * bii + aji * bir);
  return {re, im};
}

void structure_product_scalar(const Complex* a, const Complex* b, const Complex* constants,
                              std::size_t dim, Complex* out);
void axpy_scalar(Complex alpha, const Complex* x, Complex* y, std::size_t n);
Complex dot_conj_scalar(const Complex* x, const Complex* y, std::size_t n);
double max_abs_scalar(const Complex* x, std::size_t n);

#if defined(HYPALG_HAVE_AVX2)
void structure_product_avx2(const Complex* a, const Complex* b, const Complex* constants,
                            std::size_t dim, Complex* out);
void axpy_avx2(Complex alpha, const Complex* x, Complex* y, std::size_t n);
Complex dot_conj_avx2(const Complex* x, const Complex* y, std::size_t n);
double max_abs_avx2(const Complex* x, std::size_t n);
#endif

}  // namespace hypalg::kernels::detail

#endif  // HYPALG_SRC_KERNELS_IMPL_HPP
