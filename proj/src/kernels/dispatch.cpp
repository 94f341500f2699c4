#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "giuga/kernels.hpp"

namespace giuga::kernels {

#ifndef GIUGA_HAVE_AVX2_KERNELS
namespace avx2 {
std::uint64_t power_sum_mod(std::uint64_t, std::uint64_t, std::uint64_t)
{
    throw std::logic_error("avx2 kernels not compiled for this target");
}
void pow_mod_batch(std::span<const std::uint64_t>, std::uint64_t, std::uint64_t, std::span<std::uint64_t>)
{
    throw std::logic_error("avx2 kernels not compiled for this target");
}
}  // namespace avx2
#endif

std::string_view isa_name(Isa isa)
{
    switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
    }
    return "unknown";
}

Isa detected_isa()
{
#if defined(GIUGA_HAVE_AVX2_KERNELS)
    static const Isa isa = [] {
        __builtin_cpu_init();
        return (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) ? Isa::avx2 : Isa::scalar;
    }();
    return isa;
#else
    return Isa::scalar;
#endif
}

Isa active_isa()
{
    static const Isa isa = [] {
        const char* forced = std::getenv("GIUGA_ISA");
        if (forced && std::string_view(forced) == "scalar") return Isa::scalar;
        return detected_isa();
    }();
    return isa;
}

std::uint64_t power_sum_mod(std::uint64_t exponent, std::uint64_t upper, std::uint64_t modulus)
{
    if (active_isa() == Isa::avx2 && modulus > 0 && modulus < kSimdModulusLimit) {
        return avx2::power_sum_mod(exponent, upper, modulus);
    }
    return scalar::power_sum_mod(exponent, upper, modulus);
}

void pow_mod_batch(std::span<const std::uint64_t> bases, std::uint64_t exponent, std::uint64_t modulus,
                   std::span<std::uint64_t> out)
{
    if (active_isa() == Isa::avx2 && modulus > 0 && modulus < kSimdModulusLimit) {
        avx2::pow_mod_batch(bases, exponent, modulus, out);
        return;
    }
    scalar::pow_mod_batch(bases, exponent, modulus, out);
}

}  // namespace giuga::kernels
