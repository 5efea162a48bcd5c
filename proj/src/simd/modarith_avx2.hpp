#pragma once

#include <cstddef>
#include <cstdint>

namespace rbn::simd::avx2 {

void axpy(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t w, std::uint32_t p);
void scale(std::uint32_t* dst, std::size_t n, std::uint32_t w, std::uint32_t p);

}  // namespace rbn::simd::avx2
