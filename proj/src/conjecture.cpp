#include "giuga/conjecture.hpp"

#include <algorithm>

#include "giuga/kernels.hpp"

namespace giuga {

namespace {

bool divides(const Int& d, const Int& x)
{
    return mpz_divisible_p(x.get_mpz_t(), d.get_mpz_t()) != 0;
}

void require_matching(const Int& n, const Factorization& f)
{
    for (std::size_t i = 1; i < f.factors.size(); ++i) {
        if (f.factors[i - 1].prime >= f.factors[i].prime) {
            throw std::invalid_argument("factorization primes must be strictly increasing");
        }
    }
    if (f.factors.empty() || f.value() != n) {
        throw std::invalid_argument("factorization does not multiply out to " + n.get_str());
    }
}

Rat reciprocal_sum(const Factorization& f)
{
    Rat sum = 0;
    for (const auto& pp : f.factors) sum += Rat(Int(1), pp.prime);
    return sum;
}

GiugaAgohVerdict verdict_from(const Int& n, const Factorization& f)
{
    GiugaAgohVerdict v{n, giuga_agoh_residue(n, f)};
    v.indicator = v.residue.value() == 1;
    v.is_prime = is_prime(n);
    v.primality_deterministic = primality_is_deterministic(n);
    if (v.indicator != v.is_prime) {
        v.classification = Classification::counterexample;
    } else {
        v.classification = v.is_prime ? Classification::prime_consistent : Classification::composite_consistent;
    }
    return v;
}

template <typename Predicate>
std::vector<Int> sweep(std::uint64_t max, Predicate&& keep)
{
    std::vector<Int> out;
    if (max < 2) return out;
    const SpfTable table = build_spf(max);
    for (std::uint64_t n = 2; n <= max; ++n) {
        const Int value = from_u64(n);
        if (keep(value, factorize(value, table))) out.push_back(value);
    }
    return out;
}

}  // namespace

std::string_view classification_name(Classification c)
{
    switch (c) {
    case Classification::prime_consistent: return "prime_consistent";
    case Classification::composite_consistent: return "composite_consistent";
    case Classification::counterexample: return "COUNTEREXAMPLE";
    }
    return "unknown";
}

Residue giuga_agoh_residue(const Int& n, const Factorization& f)
{
    if (n < 2) throw std::invalid_argument("giuga_agoh_residue needs n >= 2");
    require_matching(n, f);
    const Int n_minus_1 = n - 1;
    Int sum = 0;
    for (const auto& pp : f.factors) {
        if (divides(Int(pp.prime - 1), n_minus_1)) sum += n / pp.prime;
    }
    return Residue(sum, n);
}

GiugaAgohVerdict classify(const Int& n)
{
    if (n < 2) throw std::invalid_argument("classify needs n >= 2");
    return verdict_from(n, factorize(n));
}

GiugaAgohVerdict classify(const Int& n, const SpfTable& hint)
{
    if (n < 2) throw std::invalid_argument("classify needs n >= 2");
    return verdict_from(n, factorize(n, hint));
}

bool is_giuga_number(const Int& n, const Factorization& f)
{
    require_matching(n, f);
    if (f.is_prime_power_one()) return false;
    // The product runs over prime factors with multiplicity, i.e. it is 1/n.
    // Over distinct primes only, 60 = 2^2*3*5 would qualify alongside 30.
    const Rat value = reciprocal_sum(f) - Rat(Int(1), n);
    return value.is_integer() && value.sign() > 0;
}

bool is_carmichael(const Int& n, const Factorization& f)
{
    require_matching(n, f);
    if (f.is_prime_power_one() || !f.squarefree()) return false;
    const Int n_minus_1 = n - 1;
    return std::all_of(f.factors.begin(), f.factors.end(),
                       [&](const PrimePower& pp) { return divides(Int(pp.prime - 1), n_minus_1); });
}

bool fermat_witness_check(const Int& n, std::span<const Int> bases)
{
    if (n < 2) throw std::invalid_argument("fermat_witness_check needs n >= 2");
    for (const Int& a : bases) {
        Int g;
        mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
        if (g != 1) throw std::invalid_argument("base " + a.get_str() + " is not coprime to " + n.get_str());
    }
    const bool machine_sized =
        fits_u64(n) && std::all_of(bases.begin(), bases.end(), [](const Int& a) { return fits_u64(a); });
    if (machine_sized) {
        std::vector<std::uint64_t> small(bases.size());
        std::transform(bases.begin(), bases.end(), small.begin(), [](const Int& a) { return to_u64(a); });
        std::vector<std::uint64_t> powers(bases.size());
        kernels::pow_mod_batch(small, to_u64(n) - 1, to_u64(n), powers);
        return std::all_of(powers.begin(), powers.end(), [&](std::uint64_t v) { return v == 1 % to_u64(n); });
    }
    const Int exponent = n - 1;
    return std::all_of(bases.begin(), bases.end(), [&](const Int& a) { return pow_mod(a, exponent, n) == 1; });
}

CandidateReport candidate_report(const Int& n)
{
    if (n < 2) throw std::invalid_argument("candidate_report needs n >= 2");
    const Factorization f = factorize(n);
    CandidateReport r;
    r.n = n;
    r.composite = !is_prime(n);
    r.odd = mpz_odd_p(n.get_mpz_t()) != 0;
    r.squarefree = f.squarefree();
    r.prime_factor_count = f.distinct_primes();
    const Int n_minus_1 = n - 1;
    for (const auto& pp : f.factors) {
        const Int p_minus_1 = pp.prime - 1;
        const Int cofactor_minus_1 = n / pp.prime - 1;
        r.primes.push_back(PrimeRecord{
            pp.prime,
            divides(pp.prime, cofactor_minus_1),
            divides(p_minus_1, n_minus_1),
            divides(p_minus_1, cofactor_minus_1),
        });
    }
    r.is_giuga_number = is_giuga_number(n, f);
    r.is_carmichael = is_carmichael(n, f);
    r.reciprocal_sum_exceeds_one = reciprocal_sum(f) > Rat(1);
    r.at_least_nine_prime_factors = r.prime_factor_count >= 9;
    r.no_prime_congruent_one_mod_another = true;
    for (const auto& p : f.factors) {
        for (const auto& q : f.factors) {
            if (p.prime != q.prime && divides(p.prime, Int(q.prime - 1))) r.no_prime_congruent_one_mod_another = false;
        }
    }
    return r;
}

std::vector<Int> butske_search(ButskeSign sign, std::uint64_t max)
{
    return sweep(max, [sign](const Int& n, const Factorization& f) {
        const Rat correction(Int(1), n);
        const Rat total = sign == ButskeSign::plus ? reciprocal_sum(f) + correction : reciprocal_sum(f) - correction;
        return total == Rat(1);
    });
}

std::vector<Int> find_giuga_numbers(std::uint64_t max)
{
    return sweep(max, [](const Int& n, const Factorization& f) { return is_giuga_number(n, f); });
}

std::vector<Int> find_carmichael_numbers(std::uint64_t max)
{
    return sweep(max, [](const Int& n, const Factorization& f) { return is_carmichael(n, f); });
}

}  // namespace giuga
