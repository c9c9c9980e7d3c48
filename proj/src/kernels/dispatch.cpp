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

#include <cstdlib>
#include <string>

#include "hypalg/errors.hpp"
#include "kernels_impl.hpp"

namespace hypalg::kernels {

namespace {

constexpr Ops kScalarOps{Backend::Scalar, detail::structure_product_scalar, detail::axpy_scalar,
                         detail::dot_conj_scalar, detail::max_abs_scalar};

#if defined(HYPALG_HAVE_AVX2)
constexpr Ops kAvx2Ops{Backend::Avx2, detail::structure_product_avx2, detail::axpy_avx2,
                       detail::dot_conj_avx2, detail::max_abs_avx2};

bool cpu_has_avx2() noexcept {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

[[maybe_unused]] bool scalar_forced() noexcept {
  const char* env = std::getenv("HYPALG_KERNELS");
  return env != nullptr && std::string(env) == "scalar";
}

}  // namespace

std::string_view name(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

bool available(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar:
      return true;
    case Backend::Avx2:
#if defined(HYPALG_HAVE_AVX2)
      return cpu_has_avx2();
#else
      return false;
#endif
  }
  return false;
}

const Ops& ops(Backend backend) {
  if (!available(backend)) {
    throw UnsupportedRequest("kernel backend '" + std::string(name(backend)) +
                             "' is not available on this machine");
  }
#if defined(HYPALG_HAVE_AVX2)
  if (backend == Backend::Avx2) return kAvx2Ops;
#endif
  return kScalarOps;
}

const Ops& active() noexcept {
  static const Ops& chosen = [&]() -> const Ops& {
#if defined(HYPALG_HAVE_AVX2)
    if (!scalar_forced() && cpu_has_avx2()) return kAvx2Ops;
#endif
    return kScalarOps;
  }();
  return chosen;
}

}  // namespace hypalg::kernels
