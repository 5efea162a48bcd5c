#pragma once

// Row kernels for dense elimination over Z/p, p < 2^31.
// Every backend must produce bit-identical results to the scalar reference.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace rbn::simd {

enum class Backend { Scalar, Avx2 };

struct ModKernels {
  Backend backend;
  std::string_view name;
  /// dst[i] = (dst[i] + w * src[i]) mod p, with all inputs already reduced.
  void (*axpy)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t w, std::uint32_t p);
  /// dst[i] = (w * dst[i]) mod p.
  void (*scale)(std::uint32_t* dst, std::size_t n, std::uint32_t w, std::uint32_t p);
};

const ModKernels& scalar_kernels() noexcept;
/// nullptr when not compiled in or not supported by this CPU.
const ModKernels* avx2_kernels() noexcept;
/// Best available backend, unless RBN_SIMD=scalar is set in the environment.
const ModKernels& active_kernels() noexcept;

}  // namespace rbn::simd
