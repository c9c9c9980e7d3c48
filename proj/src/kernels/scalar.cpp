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

#include <cmath>

#include "kernels_impl.hpp"

namespace hypalg::kernels::detail {

void structure_product_scalar(const Complex* a, const Complex* b, const Complex* constants,
                              std::size_t dim, Complex* out) {
  for (std::size_t k = 0; k < dim; ++k) out[k] = Complex(0.0, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = i; j < dim; ++j) {
      const Complex s = pair_weight(a, b, i, j);
      if (s.real() == 0.0 && s.imag() == 0.0) continue;
      const Complex* c = constants + (i * dim + j) * dim;
      const double sr = s.real();
      const double si = s.imag();
      for (std::size_t k = 0; k < dim; ++k) {
        const double cr = c[k].real();
        const double ci = c[k].imag();
        out[k] = Complex(out[k].real() + (sr * cr - si * ci), out[k].imag() + (sr * ci + si * cr));
      }
    }
  }
}

void axpy_scalar(Complex alpha, const Complex* x, Complex* y, std::size_t n) {
  const double ar = alpha.real();
  const double ai = alpha.imag();
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[k].real();
    const double xi = x[k].imag();
    y[k] = Complex(y[k].real() + (ar * xr - ai * xi), y[k].imag() + (ar * xi + ai * xr));
  }
}

Complex dot_conj_scalar(const Complex* x, const Complex* y, std::size_t n) {
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    re += x[k].real() * y[k].real() + x[k].imag() * y[k].imag();
    im += x[k].imag() * y[k].real() - x[k].real() * y[k].imag();
  }
  return {re, im};
}

double max_abs_scalar(const Complex* x, std::size_t n) {
  double best = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double m = x[k].real() * x[k].real() + x[k].imag() * x[k].imag();
    if (m > best || std::isnan(m)) best = m;
  }
  return std::sqrt(best);
}

}  // namespace hypalg::kernels::detail
