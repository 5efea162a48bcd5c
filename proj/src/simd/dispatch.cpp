#include "rbn/simd/modarith.hpp"

#include <cstdlib>
#include <string_view>

#if defined(RBN_HAVE_AVX2_KERNELS)
#include "modarith_avx2.hpp"
#endif

namespace rbn::simd {

const ModKernels* avx2_kernels() noexcept {
#if defined(RBN_HAVE_AVX2_KERNELS)
  static const ModKernels k{Backend::Avx2, "avx2", avx2::axpy, avx2::scale};
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok ? &k : nullptr;
#else
  return nullptr;
#endif
}

const ModKernels& active_kernels() noexcept {
  static const ModKernels& chosen = [] () -> const ModKernels& {
    const char* env = std::getenv("RBN_SIMD");
    if (env && std::string_view(env) == "scalar") return scalar_kernels();
    if (const auto* k = avx2_kernels()) return *k;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace rbn::simd
