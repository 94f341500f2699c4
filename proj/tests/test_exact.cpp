#include <random>

#include "doctest.h"
#include "giuga/exact.hpp"
#include "oracles.hpp"

using namespace giuga;

TEST_CASE("Rat is reduced with positive denominator")
{
    const Rat r(Int(6), Int(-4));
    CHECK(r.num() == -3);
    CHECK(r.den() == 2);
    CHECK(r == Rat(Int(-3), Int(2)));
    CHECK(r.str() == "-3/2");
    CHECK(Rat(Int(10), Int(5)).str() == "2");
    CHECK_THROWS_AS(Rat(Int(1), Int(0)), std::domain_error);
    CHECK_THROWS_AS(Rat(1) / Rat(0), std::domain_error);
}

TEST_CASE("binomial")
{
    CHECK(binomial(Int(5), 2) == 10);
    CHECK(binomial(Int(-1), 3) == -1);
    CHECK(binomial(Rat(Int(1), Int(2)), 2) == Rat(Int(-1), Int(8)));
    CHECK(binomial(Int(7), 0) == 1);
    CHECK(binomial(Int(3), 5) == 0);
    CHECK_THROWS_AS(binomial(Int(5), -1), std::invalid_argument);
    CHECK_THROWS_AS(binomial(Rat(5), -2), std::invalid_argument);

    SUBCASE("C(-1,k) = (-1)^k")
    {
        for (long k = 0; k <= 20; ++k) CHECK(binomial(Int(-1), k) == (k % 2 ? -1 : 1));
    }
    SUBCASE("agrees with Pascal's triangle")
    {
        for (unsigned n = 0; n <= 30; ++n) {
            for (unsigned k = 0; k <= n + 2; ++k) CHECK(binomial(Int(n), k) == oracle::pascal(n, k));
        }
    }
}

TEST_CASE("falling factorial")
{
    CHECK(falling_factorial(Rat(5), 3) == Rat(60));
    CHECK(falling_factorial(Rat(Int(7), Int(2)), 0) == Rat(1));
    CHECK(falling_factorial(Rat(3), 5) == Rat(0));
    CHECK(falling_factorial(Rat(Int(1), Int(2)), 2) == Rat(Int(-1), Int(4)));
    CHECK_THROWS_AS(falling_factorial(Rat(3), -1), std::invalid_argument);
}

TEST_CASE("residue_of_rat")
{
    CHECK(residue_of_rat(Rat(Int(-1), Int(3)), Int(10)).value() == 3);
    CHECK(residue_of_rat(Rat(55), Int(6)).value() == 1);
    CHECK_THROWS_AS(residue_of_rat(Rat(Int(1), Int(2)), Int(4)), NonInvertibleDenominator);
    CHECK_THROWS_AS(residue_of_rat(Rat(1), Int(1)), std::invalid_argument);

    SUBCASE("matches exhaustive search")
    {
        for (long long m = 2; m <= 40; ++m) {
            for (long long den = 1; den <= 12; ++den) {
                for (long long num = -15; num <= 15; ++num) {
                    const Rat q(Int(static_cast<long>(num)), Int(static_cast<long>(den)));
                    if (std::gcd(static_cast<long long>(q.den().get_si()), m) != 1) {
                        CHECK_THROWS_AS(residue_of_rat(q, Int(static_cast<long>(m))), NonInvertibleDenominator);
                        continue;
                    }
                    const long long expected = oracle::modular_solution(q.num().get_si(), q.den().get_si(), m);
                    CHECK(residue_of_rat(q, Int(static_cast<long>(m))).value() == Int(static_cast<long>(expected)));
                }
            }
        }
    }

    SUBCASE("additive homomorphism")
    {
        std::mt19937_64 rng(0x5eed);
        std::uniform_int_distribution<long> num(-1000, 1000), den(1, 60), mod(2, 500);
        for (int i = 0; i < 2000; ++i) {
            const Rat a(Int(num(rng)), Int(den(rng)));
            const Rat b(Int(num(rng)), Int(den(rng)));
            const Int m = mod(rng);
            try {
                const Residue lhs = residue_of_rat(a, m) + residue_of_rat(b, m);
                CHECK(lhs == residue_of_rat(a + b, m));
            } catch (const NonInvertibleDenominator&) {
                // one side undefined
            }
        }
    }
}

TEST_CASE("Residue rejects mismatched moduli")
{
    const Residue a(Int(3), Int(7)), b(Int(3), Int(8));
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * b, std::invalid_argument);
    CHECK_THROWS_AS(a - b, std::invalid_argument);
    CHECK_FALSE(a == b);
    CHECK(Residue(Int(-1), Int(5)).value() == 4);
    CHECK(Residue(Int(3), Int(7)).pow(Int(6)).value() == 1);
    CHECK_THROWS_AS(Residue(Int(0), Int(1)), std::invalid_argument);
}

TEST_CASE("is_prime")
{
    CHECK_FALSE(is_prime(Int(561)));
    CHECK(is_prime(Int(2)));
    CHECK_FALSE(is_prime(Int(1)));
    CHECK_FALSE(is_prime(Int(0)));
    CHECK_FALSE(is_prime(Int(-7)));

    SUBCASE("agrees with trial division below 2*10^5")
    {
        for (std::uint64_t n = 0; n <= 200000; ++n) CHECK(is_prime(n) == oracle::is_prime_trial(n));
    }
    SUBCASE("strong pseudoprimes and large values")
    {
        // 3215031751 is a strong pseudoprime to bases 2, 3, 5, 7.
        CHECK_FALSE(is_prime(std::uint64_t{3215031751}));
        CHECK(is_prime(std::uint64_t{18446744073709551557ull}));  // largest prime below 2^64
        CHECK_FALSE(is_prime(std::uint64_t{18446744073709551557ull} - 2));
        const Int mersenne_127 = (Int(1) << 127) - 1;
        CHECK(is_prime(mersenne_127));
        CHECK_FALSE(is_prime(Int(mersenne_127 * 3)));
        CHECK(primality_is_deterministic(Int(1000)));
        CHECK_FALSE(primality_is_deterministic(mersenne_127));
    }
}

TEST_CASE("factorize")
{
    auto pp = [](long p, unsigned long e) { return PrimePower{Int(p), e}; };
    CHECK(factorize(Int(1722)).factors == std::vector<PrimePower>{pp(2, 1), pp(3, 1), pp(7, 1), pp(41, 1)});
    CHECK(factorize(Int(4)).factors == std::vector<PrimePower>{pp(2, 2)});
    CHECK(factorize(Int(1729)).factors == std::vector<PrimePower>{pp(7, 1), pp(13, 1), pp(19, 1)});
    CHECK_THROWS_AS(factorize(Int(1)), std::invalid_argument);

    SUBCASE("reconstructs n with prime bases, with and without table")
    {
        const SpfTable table = build_spf(100000);
        for (long n = 2; n <= 100000; ++n) {
            const Factorization f = factorize(Int(n));
            REQUIRE(f.value() == n);
            for (std::size_t i = 0; i < f.factors.size(); ++i) {
                CHECK(is_prime(f.factors[i].prime));
                if (i) CHECK(f.factors[i - 1].prime < f.factors[i].prime);
            }
            CHECK(f == factorize(Int(n), table));
        }
    }
    SUBCASE("rho splits products of large primes")
    {
        const Int p("1000000007"), q("998244353"), r("18446744073709551557");
        const Factorization f = factorize(Int(p * q * q * r));
        REQUIRE(f.factors.size() == 3);
        CHECK(f.factors[0] == PrimePower{q, 2});
        CHECK(f.factors[1] == PrimePower{p, 1});
        CHECK(f.factors[2] == PrimePower{r, 1});
    }
}

TEST_CASE("build_spf")
{
    const SpfTable ten = build_spf(10);
    CHECK(ten.smallest_prime_factor(9) == 3);
    CHECK(ten.smallest_prime_factor(7) == 7);
    CHECK_THROWS_AS(ten.smallest_prime_factor(11), std::out_of_range);
    CHECK_THROWS_AS(ten.smallest_prime_factor(1), std::out_of_range);
    CHECK(build_spf(100).smallest_prime_factor(91) == 7);
    CHECK_THROWS_AS(build_spf(1), std::invalid_argument);

    const SpfTable big = build_spf(20000);
    for (std::uint64_t k = 2; k <= 20000; ++k) {
        const std::uint32_t p = big.smallest_prime_factor(k);
        CHECK(k % p == 0);
        CHECK(oracle::is_prime_trial(p));
        for (std::uint64_t d = 2; d < p; ++d) CHECK(k % d != 0);
    }
}

TEST_CASE("binomial(r p - 1, nu) == (-1)^nu mod p")
{
    for (unsigned p = 2; p <= 97; ++p) {
        if (!is_prime(std::uint64_t{p})) continue;
        for (long r = 1; r <= 5; ++r) {
            for (long nu = 0; nu < p; ++nu) {
                const Residue lhs(binomial(Int(r * p - 1), nu), Int(p));
                CHECK(lhs == Residue(Int(nu % 2 ? -1 : 1), Int(p)));
            }
        }
    }
}
