#include "giuga/congruence.hpp"

#include "giuga/bernoulli.hpp"
#include "giuga/powersum.hpp"

namespace giuga {

namespace {

void require_even(unsigned n, const char* what)
{
    if (n < 2 || n % 2 != 0) throw std::invalid_argument(std::string(what) + " needs even n >= 2");
}

// Primes p with (p-1) | n, ascending.
std::vector<unsigned> staudt_primes(unsigned n)
{
    std::vector<unsigned> out;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d == 0 && is_prime(std::uint64_t{d} + 1)) out.push_back(d + 1);
    }
    return out;
}

}  // namespace

Residue prime_sum_residue(const Int& m, const Factorization& f, const Int& n)
{
    Int sum = 0;
    for (const auto& pp : f.factors) {
        if (mpz_divisible_p(n.get_mpz_t(), Int(pp.prime - 1).get_mpz_t())) sum += m / pp.prime;
    }
    return Residue(-sum, m);
}

CongruenceTriple theorem2_triple(unsigned n, const Int& m)
{
    require_even(n, "theorem2_triple");
    if (m <= 1) throw std::invalid_argument("theorem2_triple needs m > 1");
    return CongruenceTriple{
        n,
        m,
        powersum_mod(n, m, m),
        residue_of_rat(Rat(m) * bernoulli(n), m),
        prime_sum_residue(m, factorize(m), Int(n)),
    };
}

Residue theorem4_delta(unsigned n)
{
    if (n < 2) throw std::invalid_argument("theorem4_delta needs n >= 2");
    const Int modulus = n;
    const Residue sum = powersum_mod(n - 1, modulus, modulus);
    const Residue bern = residue_of_rat(Rat(modulus) * bernoulli(n - 1), modulus);
    return sum - bern;
}

Residue theorem4_expected(unsigned n)
{
    if (n < 2) throw std::invalid_argument("theorem4_expected needs n >= 2");
    const bool half = n > 2 && n % 4 == 2;
    return Residue(half ? Int(n / 2) : Int(0), Int(n));
}

bool divided_congruence_check(const Int& c, const Int& c_prime, const Int& a, const Int& m)
{
    if (a < 1 || m < 1) throw std::invalid_argument("divided congruence needs a, m >= 1");
    if (!mpz_divisible_p(m.get_mpz_t(), a.get_mpz_t())) throw std::invalid_argument("divided congruence needs a | m");
    if (!mpz_congruent_p(c.get_mpz_t(), c_prime.get_mpz_t(), a.get_mpz_t())) {
        throw std::invalid_argument("divided congruence needs c == c' (mod a)");
    }
    const Int cofactor = m / a;
    return mpz_congruent_p(Int(c * cofactor).get_mpz_t(), Int(c_prime * cofactor).get_mpz_t(), m.get_mpz_t()) != 0;
}

NumeratorCongruence numerator_congruence_check(unsigned n)
{
    require_even(n, "numerator_congruence_check");
    const Rat b = bernoulli(n);
    const Int& v = b.den();
    Int sum = 0;
    for (unsigned p : staudt_primes(n)) sum += v / p;
    return NumeratorCongruence{Residue(b.num(), v), Residue(-sum, v)};
}

StaudtCheck clausen_staudt_check(unsigned n)
{
    require_even(n, "clausen_staudt_check");
    const Rat b = bernoulli(n);
    Rat sum = b;
    for (unsigned p : staudt_primes(n)) sum += Rat(Int(1), Int(p));
    return StaudtCheck{n, sum, b.den(), staudt_denominator(n)};
}

}  // namespace giuga
