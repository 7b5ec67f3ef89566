// Copyright 2026 The textaug Authors
// SPDX-License-Identifier: Apache-2.0

#include <cstdlib>
#include <string_view>

#include "textaug/simd/kernels.hpp"

namespace textaug::simd {

#if defined(TEXTAUG_HAVE_AVX2)
const KernelSet* avx2_kernels_unchecked();
#endif
#if defined(TEXTAUG_HAVE_NEON)
const KernelSet* neon_kernels_unchecked();
#endif

const KernelSet* avx2_kernels() {
#if defined(TEXTAUG_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? avx2_kernels_unchecked() : nullptr;
#else
  return nullptr;
#endif
}

const KernelSet* neon_kernels() {
#if defined(TEXTAUG_HAVE_NEON)
  return neon_kernels_unchecked();  // baseline on AArch64
#else
  return nullptr;
#endif
}

const KernelSet& active_kernels() {
  static const KernelSet* chosen = [] {
    const char* env = std::getenv("TEXTAUG_ISA");
    if (env != nullptr && std::string_view(env) == "scalar") return &scalar_kernels();
    if (const KernelSet* k = avx2_kernels()) return k;
    if (const KernelSet* k = neon_kernels()) return k;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace textaug::simd
