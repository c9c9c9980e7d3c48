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

// Inner-loop kernels over interleaved complex<double> arrays.
//
// Every kernel has a portable scalar reference implementation. On x86-64 an
// AVX2/FMA variant is compiled in as well and chosen at runtime when the CPU
// supports it. Setting HYPALG_KERNELS=scalar in the environment pins the
// reference path.

#ifndef HYPALG_KERNELS_HPP
#define HYPALG_KERNELS_HPP

#include <complex>
#include <cstddef>
#include <string_view>

namespace hypalg::kernels {

using Complex = std::complex<double>;

enum class Backend { Scalar, Avx2 };

std::string_view name(Backend backend) noexcept;

struct Ops {
  Backend backend;

  // out[k] = sum_{i,j} a[i] b[j] c[(i*dim + j)*dim + k] for a table with
  // c[i][j][*] == c[j][i][*]. Only the upper triangle i <= j is read, and the
  // pair weight a[i]b[j] + a[j]b[i] is formed symmetrically, so swapping a and b
  // gives a bit-identical result.
  void (*structure_product)(const Complex* a, const Complex* b, const Complex* constants,
                            std::size_t dim, Complex* out);

  // y += alpha * x
  void (*axpy)(Complex alpha, const Complex* x, Complex* y, std::size_t n);

  // sum_i x[i] * conj(y[i])
  Complex (*dot_conj)(const Complex* x, const Complex* y, std::size_t n);

  // max_i |x[i]|, 0 for n == 0
  double (*max_abs)(const Complex* x, std::size_t n);
};

bool available(Backend backend) noexcept;

/// Kernel table for a specific backend; throws UnsupportedRequest if the
/// backend is not compiled in or the CPU lacks the instructions.
const Ops& ops(Backend backend);

/// Fastest available backend, resolved once per process.
const Ops& active() noexcept;

}  // namespace hypalg::kernels

#endif  // HYPALG_KERNELS_HPP
