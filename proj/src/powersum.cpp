#include "giuga/powersum.hpp"

#include <vector>

#include "giuga/bernoulli.hpp"
#include "giuga/kernels.hpp"
#include "giuga/stirling.hpp"

namespace giuga {

Int powersum_direct(unsigned n, const Int& m)
{
    if (m < 1) throw std::invalid_argument("powersum_direct needs m >= 1");
    Int out = 0;
    Int power;
    for (Int k = 1; k < m; ++k) {
        mpz_pow_ui(power.get_mpz_t(), k.get_mpz_t(), n);
        out += power;
    }
    return out;
}

Rat powersum_binomial(unsigned n, const Rat& x)
{
    if (n < 1) throw std::invalid_argument("powersum_binomial needs n >= 1");
    Rat out = 0;
    for (unsigned k = 1; k <= n; ++k) out += Rat(t_big(n, k)) * binomial(x, k + 1);
    return out;
}

Rat powersum_bernoulli(unsigned n, const Rat& x)
{
    if (n < 1) throw std::invalid_argument("powersum_bernoulli needs n >= 1");
    return (bernoulli_poly(n + 1, x) - bernoulli(n + 1)) / Rat(long{n} + 1);
}

Int powersum_iterated(unsigned n, unsigned r, std::uint64_t m)
{
    if (m < 1) throw std::invalid_argument("powersum_iterated needs m >= 1");
    // level[k-1] holds S_{n,level}(k) for k = 1..m; each level is a prefix sum
    // of the previous one shifted by one.
    std::vector<Int> level(m);
    for (std::uint64_t k = 1; k <= m; ++k) mpz_ui_pow_ui(level[k - 1].get_mpz_t(), k, n);
    for (unsigned depth = 1; depth <= r; ++depth) {
        std::vector<Int> next(m);
        Int running = 0;
        for (std::uint64_t k = 1; k <= m; ++k) {
            next[k - 1] = running;
            running += level[k - 1];
        }
        level = std::move(next);
    }
    return level[m - 1];
}

Residue powersum_mod(unsigned n, const Int& m, const Int& modulus)
{
    if (m < 1) throw std::invalid_argument("powersum_mod needs m >= 1");
    if (fits_u64(m) && fits_u64(modulus)) {
        return Residue(from_u64(kernels::power_sum_mod(n, to_u64(m), to_u64(modulus))), modulus);
    }
    Int acc = 0;
    const Int exponent = n;
    for (Int k = 1; k < m; ++k) acc = (acc + pow_mod(k, exponent, modulus)) % modulus;
    return Residue(acc, modulus);
}

}  // namespace giuga
