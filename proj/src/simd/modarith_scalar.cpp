#include "rbn/simd/modarith.hpp"

namespace rbn::simd {

namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t w, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i)
    dst[i] = static_cast<std::uint32_t>((dst[i] + static_cast<std::uint64_t>(w) * src[i]) % p);
}

void scale_scalar(std::uint32_t* dst, std::size_t n, std::uint32_t w, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(w) * dst[i] % p);
}

constexpr ModKernels kScalar{Backend::Scalar, "scalar", axpy_scalar, scale_scalar};

}  // namespace

const ModKernels& scalar_kernels() noexcept { return kScalar; }

}  // namespace rbn::simd
