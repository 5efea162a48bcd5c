#pragma once

// Brute-force h0 on blowups of P^2: nullity of the fat-point interpolation matrix
// over a prime field, at sampled points.

#include "rbn/cohomology.hpp"
#include "rbn/lattice.hpp"
#include "rbn/simd/modarith.hpp"

#include <cstdint>
#include <vector>

namespace rbn {

inline constexpr std::uint32_t kDefaultOraclePrime = 1000003;

struct OracleOptions {
  std::uint64_t seed = 1;
  int trials = 3;
  std::uint32_t prime = kDefaultOraclePrime;
  const simd::ModKernels* kernels = nullptr;  // nullptr: simd::active_kernels()
};

bool is_prime(std::uint64_t n);

/// Rank of a row-major rows x cols matrix over Z/p. The matrix is destroyed.
std::size_t rank_mod_p(std::vector<std::uint32_t>& m, std::size_t rows, std::size_t cols, std::uint32_t p,
                       const simd::ModKernels& kernels);

/// Nullity for each trial (Explicit configurations run a single trial).
std::vector<Integer> interpolation_h0_trials(const Divisor& d, const OracleOptions& opts = {});

/// Minimum nullity over the trials.
Integer interpolation_h0(const Divisor& d, const OracleOptions& opts = {});

/// h0 by interpolation, h2 = h0(K - D) by interpolation at the same points, h1 from Riemann-Roch.
CohomologyVector blowup_cohomology_oracle(const Divisor& d, const OracleOptions& opts = {});

}  // namespace rbn
