#include "giuga/kernels.hpp"

#include <stdexcept>

#include "giuga/exact.hpp"

namespace giuga::kernels::scalar {

std::uint64_t power_sum_mod(std::uint64_t exponent, std::uint64_t upper, std::uint64_t modulus)
{
    if (modulus == 0) throw std::invalid_argument("power_sum_mod: zero modulus");
    if (modulus == 1) return 0;
    std::uint64_t acc = 0;
    for (std::uint64_t k = 1; k < upper; ++k) {
        acc += pow_mod(k, exponent, modulus);
        if (acc >= modulus) acc -= modulus;
    }
    return acc;
}

void pow_mod_batch(std::span<const std::uint64_t> bases, std::uint64_t exponent, std::uint64_t modulus,
                   std::span<std::uint64_t> out)
{
    if (modulus == 0) throw std::invalid_argument("pow_mod_batch: zero modulus");
    if (out.size() != bases.size()) throw std::invalid_argument("pow_mod_batch: size mismatch");
    for (std::size_t i = 0; i < bases.size(); ++i) out[i] = pow_mod(bases[i], exponent, modulus);
}

}  // namespace giuga::kernels::scalar
