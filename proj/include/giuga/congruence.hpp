#pragma once

// The power-sum / Bernoulli / prime-sum congruences and their corollaries.
// Every routine computes each side independently and reports the outcome;
// none of them asserts equality.

#include "giuga/exact.hpp"

namespace giuga {

/// S_n(m), m B_n and -sum_{p|m, p-1|n} m/p, each reduced mod m.
struct CongruenceTriple {
    unsigned n = 0;
    Int m;
    Residue lhs_sum;
    Residue mid_bernoulli;
    Residue rhs_prime_sum;

    bool holds() const { return lhs_sum == mid_bernoulli && mid_bernoulli == rhs_prime_sum; }
};

/// -sum_{p | m, (p-1) | n} m/p mod m, over the prime factors in f.
Residue prime_sum_residue(const Int& m, const Factorization& f, const Int& n);

/// Requires even n >= 2 and m > 1. NonInvertibleDenominator from the middle
/// term propagates: it would contradict the theorem being checked.
CongruenceTriple theorem2_triple(unsigned n, const Int& m);

/// S_{n-1}(n) - n B_{n-1} mod n. Requires n >= 2.
Residue theorem4_delta(unsigned n);

/// n/2 when n = 2 (mod 4) and n > 2, else 0; as a residue mod n.
Residue theorem4_expected(unsigned n);

/// c (m/a) == c' (m/a) (mod m). Rejects a not dividing m and c != c' (mod a).
bool divided_congruence_check(const Int& c, const Int& c_prime, const Int& a, const Int& m);

struct NumeratorCongruence {
    Residue lhs;  ///< U_n mod V_n
    Residue rhs;  ///< -sum_{(p-1)|n} V_n/p mod V_n

    bool holds() const { return lhs == rhs; }
};

/// B_n = U_n / V_n in lowest terms; requires even n >= 2.
NumeratorCongruence numerator_congruence_check(unsigned n);

struct StaudtCheck {
    unsigned n = 0;
    Rat bernoulli_plus_reciprocals;  ///< B_n + sum_{(p-1)|n} 1/p
    Int denominator;                 ///< denom(B_n)
    Int predicted_denominator;       ///< prod_{(p-1)|n} p

    bool sum_is_integer() const { return bernoulli_plus_reciprocals.is_integer(); }
    bool denominator_matches() const { return denominator == predicted_denominator; }
    bool holds() const { return sum_is_integer() && denominator_matches(); }
};

/// Requires even n >= 2.
StaudtCheck clausen_staudt_check(unsigned n);

}  // namespace giuga
