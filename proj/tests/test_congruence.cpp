#include <random>

#include "doctest.h"
#include "giuga/bernoulli.hpp"
#include "giuga/congruence.hpp"
#include "giuga/powersum.hpp"

using namespace giuga;

TEST_CASE("theorem2 triples from worked examples")
{
    auto triple_values = [](unsigned n, long m) {
        const CongruenceTriple t = theorem2_triple(n, Int(m));
        return std::vector<Int>{t.lhs_sum.value(), t.mid_bernoulli.value(), t.rhs_prime_sum.value()};
    };
    CHECK(triple_values(2, 6) == std::vector<Int>{1, 1, 1});
    CHECK(triple_values(4, 10) == std::vector<Int>{3, 3, 3});
    CHECK(triple_values(8, 9) == std::vector<Int>{6, 6, 6});
    CHECK(Residue(powersum_direct(8, Int(9)), Int(9)).value() == 6);
    CHECK_THROWS_AS(theorem2_triple(3, Int(10)), std::invalid_argument);
    CHECK_THROWS_AS(theorem2_triple(4, Int(1)), std::invalid_argument);
}

TEST_CASE("theorem2 over the grid, against the exact power sum")
{
    for (unsigned n = 2; n <= 60; n += 2) {
        for (long m = 2; m <= 300; ++m) {
            const CongruenceTriple t = theorem2_triple(n, Int(m));
            CHECK(t.holds());
            CHECK(t.lhs_sum == Residue(powersum_direct(n, Int(m)), Int(m)));
            // The reduced denominator of m B_n is coprime to m.
            const Rat scaled = Rat(Int(m)) * bernoulli(n);
            Int g;
            mpz_gcd(g.get_mpz_t(), scaled.den().get_mpz_t(), Int(m).get_mpz_t());
            CHECK(g == 1);
        }
    }
}

TEST_CASE("theorem2 with a modulus beyond the SIMD range")
{
    // 2^26 + 2 = 2 * 3 * 11 * 251 * 4051 takes the scalar kernel path.
    const CongruenceTriple t = theorem2_triple(4, Int((1L << 26) + 2));
    CHECK(t.holds());
    CHECK(t.rhs_prime_sum == Residue(-Int((1L << 26) + 2) / 2 - Int((1L << 26) + 2) / 3, t.m));
}

TEST_CASE("theorem4 delta")
{
    CHECK(theorem4_delta(6).value() == 3);
    CHECK(Residue(powersum_direct(5, Int(6)), Int(6)).value() == 3);
    CHECK(theorem4_delta(8).value() == 0);
    CHECK(theorem4_delta(2).value() == 0);
    CHECK(Residue(powersum_direct(1, Int(2)), Int(2)).value() == 1);
    CHECK(residue_of_rat(Rat(2) * bernoulli(1), Int(2)).value() == 1);
    CHECK_THROWS_AS(theorem4_delta(1), std::invalid_argument);

    for (unsigned n = 2; n <= 2000; ++n) {
        const Int expected = (n > 2 && n % 4 == 2) ? Int(n / 2) : Int(0);
        CHECK(theorem4_delta(n).value() == expected);
        CHECK(theorem4_expected(n).value() == expected);
    }
}

TEST_CASE("divided congruence lemma")
{
    CHECK(divided_congruence_check(Int(7), Int(1), Int(3), Int(12)));
    CHECK(divided_congruence_check(Int(5), Int(2), Int(3), Int(6)));
    CHECK(divided_congruence_check(Int(9), Int(9), Int(4), Int(20)));
    CHECK_THROWS_AS(divided_congruence_check(Int(7), Int(1), Int(5), Int(12)), std::invalid_argument);
    CHECK_THROWS_AS(divided_congruence_check(Int(7), Int(2), Int(3), Int(12)), std::invalid_argument);

    std::mt19937_64 rng(1722);
    std::uniform_int_distribution<long> a_dist(1, 1'000'000), c_dist(-1'000'000'000, 1'000'000'000), r_dist(-1000, 1000);
    for (int i = 0; i < 1000; ++i) {
        const long a = a_dist(rng);
        const long multiple = std::uniform_int_distribution<long>(1, 1'000'000 / a)(rng);
        const long m = a * multiple;
        const long c = c_dist(rng);
        const long c_prime = c + a * r_dist(rng);
        CHECK(divided_congruence_check(Int(c), Int(c_prime), Int(a), Int(m)));
    }
}

TEST_CASE("numerator congruence")
{
    const NumeratorCongruence twelve = numerator_congruence_check(12);
    CHECK(twelve.lhs.modulus() == 2730);
    CHECK(twelve.lhs.value() == 2039);
    CHECK(twelve.rhs.value() == 2039);
    // 1365 + 910 + 546 + 390 + 210 = 3421; -3421 mod 2730 = 2039.
    CHECK(Residue(Int(-(1365 + 910 + 546 + 390 + 210)), Int(2730)).value() == 2039);
    CHECK(numerator_congruence_check(2).lhs.value() == 1);
    CHECK(numerator_congruence_check(2).rhs.value() == 1);
    CHECK(numerator_congruence_check(4).lhs.value() == 29);
    CHECK(numerator_congruence_check(4).rhs.value() == 29);
    CHECK_THROWS_AS(numerator_congruence_check(5), std::invalid_argument);
    for (unsigned n = 2; n <= 60; n += 2) CHECK(numerator_congruence_check(n).holds());
}

TEST_CASE("Clausen-von Staudt check")
{
    for (unsigned n = 2; n <= 100; n += 2) {
        const StaudtCheck c = clausen_staudt_check(n);
        CHECK(c.sum_is_integer());
        CHECK(c.denominator_matches());
    }
    CHECK(clausen_staudt_check(12).predicted_denominator == 2730);
    CHECK_THROWS_AS(clausen_staudt_check(7), std::invalid_argument);
}

TEST_CASE("prime sum residue uses only primes with p-1 | n")
{
    // m = 9, n = 8: p = 3 qualifies, -9/3 = -3 == 6 (mod 9).
    CHECK(prime_sum_residue(Int(9), factorize(Int(9)), Int(8)).value() == 6);
    // m = 10, n = 2: p = 2 qualifies (1 | 2), p = 5 does not (4 does not divide 2).
    CHECK(prime_sum_residue(Int(10), factorize(Int(10)), Int(2)).value() == 5);
}
