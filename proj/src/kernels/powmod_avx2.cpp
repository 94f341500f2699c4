#include <immintrin.h>

#include <array>
#include <stdexcept>

#include "giuga/exact.hpp"
#include "giuga/kernels.hpp"

namespace giuga::kernels::avx2 {

namespace {

// Residues live in double lanes. With a, b < 2^26 the product is below 2^52
// and therefore exact; the quotient estimate may be off by one in either
// direction, which the two conditional corrections absorb.
struct ModContext {
    __m256d m;
    __m256d inv_m;
    __m256d zero;

    explicit ModContext(std::uint64_t modulus)
        : m(_mm256_set1_pd(static_cast<double>(modulus))),
          inv_m(_mm256_set1_pd(1.0 / static_cast<double>(modulus))),
          zero(_mm256_setzero_pd())
    {
    }

    __m256d reduce_once(__m256d r) const
    {
        const __m256d neg = _mm256_cmp_pd(r, zero, _CMP_LT_OQ);
        r = _mm256_add_pd(r, _mm256_and_pd(neg, m));
        const __m256d over = _mm256_cmp_pd(r, m, _CMP_GE_OQ);
        return _mm256_sub_pd(r, _mm256_and_pd(over, m));
    }

    __m256d mul(__m256d a, __m256d b) const
    {
        const __m256d p = _mm256_mul_pd(a, b);
        const __m256d q = _mm256_floor_pd(_mm256_mul_pd(p, inv_m));
        return reduce_once(_mm256_fnmadd_pd(q, m, p));
    }

    __m256d add(__m256d a, __m256d b) const
    {
        const __m256d s = _mm256_add_pd(a, b);
        const __m256d over = _mm256_cmp_pd(s, m, _CMP_GE_OQ);
        return _mm256_sub_pd(s, _mm256_and_pd(over, m));
    }

    __m256d pow(__m256d base, std::uint64_t exponent) const
    {
        __m256d result = _mm256_set1_pd(1.0);
        while (exponent) {
            if (exponent & 1) result = mul(result, base);
            base = mul(base, base);
            exponent >>= 1;
        }
        return result;
    }
};

void check_modulus(std::uint64_t modulus)
{
    if (modulus == 0) throw std::invalid_argument("avx2 kernel: zero modulus");
    if (modulus >= kSimdModulusLimit) throw std::invalid_argument("avx2 kernel: modulus too large");
}

}  // namespace

std::uint64_t power_sum_mod(std::uint64_t exponent, std::uint64_t upper, std::uint64_t modulus)
{
    check_modulus(modulus);
    if (modulus == 1) return 0;
    const ModContext ctx(modulus);
    __m256d acc = _mm256_setzero_pd();
    std::uint64_t k = 1;
    for (; k + 3 < upper; k += 4) {
        const __m256d base = _mm256_set_pd(static_cast<double>((k + 3) % modulus), static_cast<double>((k + 2) % modulus),
                                           static_cast<double>((k + 1) % modulus), static_cast<double>(k % modulus));
        acc = ctx.add(acc, ctx.pow(base, exponent));
    }
    alignas(32) std::array<double, 4> lanes{};
    _mm256_store_pd(lanes.data(), acc);
    std::uint64_t total = 0;
    for (double v : lanes) {
        total += static_cast<std::uint64_t>(v);
        if (total >= modulus) total -= modulus;
    }
    for (; k < upper; ++k) {
        total += pow_mod(k, exponent, modulus);
        if (total >= modulus) total -= modulus;
    }
    return total;
}

void pow_mod_batch(std::span<const std::uint64_t> bases, std::uint64_t exponent, std::uint64_t modulus,
                   std::span<std::uint64_t> out)
{
    check_modulus(modulus);
    if (out.size() != bases.size()) throw std::invalid_argument("pow_mod_batch: size mismatch");
    if (modulus == 1) {
        for (auto& v : out) v = 0;
        return;
    }
    const ModContext ctx(modulus);
    std::size_t i = 0;
    alignas(32) std::array<double, 4> lanes{};
    for (; i + 4 <= bases.size(); i += 4) {
        const __m256d base =
            _mm256_set_pd(static_cast<double>(bases[i + 3] % modulus), static_cast<double>(bases[i + 2] % modulus),
                          static_cast<double>(bases[i + 1] % modulus), static_cast<double>(bases[i] % modulus));
        _mm256_store_pd(lanes.data(), ctx.pow(base, exponent));
        for (std::size_t j = 0; j < 4; ++j) out[i + j] = static_cast<std::uint64_t>(lanes[j]);
    }
    for (; i < bases.size(); ++i) out[i] = pow_mod(bases[i], exponent, modulus);
}

}  // namespace giuga::kernels::avx2
