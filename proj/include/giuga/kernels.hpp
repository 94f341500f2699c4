#pragma once

// Modular power kernels: a portable scalar reference and an AVX2 variant,
// picked at runtime. Both compute bit-identical results; the equivalence is
// checked in tests/test_kernels.cpp.

#include <cstdint>
#include <span>
#include <string_view>

namespace giuga::kernels {

enum class Isa { scalar, avx2 };

std::string_view isa_name(Isa isa);

/// Best variant this CPU can run.
Isa detected_isa();

/// Variant the dispatching entry points use. Defaults to detected_isa(); the
/// environment variable GIUGA_ISA=scalar pins the reference path.
Isa active_isa();

// The AVX2 path does its modular products in double precision and is exact
// only while both factors stay below 2^26.
inline constexpr std::uint64_t kSimdModulusLimit = std::uint64_t{1} << 26;

/// sum_{k=1}^{upper-1} k^exponent mod modulus. modulus >= 1.
std::uint64_t power_sum_mod(std::uint64_t exponent, std::uint64_t upper, std::uint64_t modulus);

/// out[i] = bases[i]^exponent mod modulus. out.size() must equal bases.size().
void pow_mod_batch(std::span<const std::uint64_t> bases, std::uint64_t exponent, std::uint64_t modulus,
                   std::span<std::uint64_t> out);

namespace scalar {
std::uint64_t power_sum_mod(std::uint64_t exponent, std::uint64_t upper, std::uint64_t modulus);
void pow_mod_batch(std::span<const std::uint64_t> bases, std::uint64_t exponent, std::uint64_t modulus,
                   std::span<std::uint64_t> out);
}  // namespace scalar

namespace avx2 {
/// Only callable when detected_isa() == Isa::avx2 and modulus < kSimdModulusLimit.
std::uint64_t power_sum_mod(std::uint64_t exponent, std::uint64_t upper, std::uint64_t modulus);
void pow_mod_batch(std::span<const std::uint64_t> bases, std::uint64_t exponent, std::uint64_t modulus,
                   std::span<std::uint64_t> out);
}  // namespace avx2

}  // namespace giuga::kernels
