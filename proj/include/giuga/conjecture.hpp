#pragma once

// The Giuga-Agoh criterion
//
//     sum_{p | n, (p-1) | (n-1)} n/p == 1 (mod n)   <=>   n is prime
//
// together with detectors for the structural conditions a composite solution
// would have to satisfy (Giuga numbers, Carmichael numbers, Butske sums).

#include <span>
#include <string_view>
#include <vector>

#include "giuga/exact.hpp"

namespace giuga {

enum class Classification { prime_consistent, composite_consistent, counterexample };

std::string_view classification_name(Classification c);

struct GiugaAgohVerdict {
    Int n;
    Residue residue;
    bool indicator = false;  // residue == 1
    bool is_prime = false;
    bool primality_deterministic = true;
    Classification classification = Classification::composite_consistent;
};

struct PrimeRecord {
    Int p;
    bool p_divides_cofactor_minus_one = false;            // p | n/p - 1
    bool p_minus_one_divides_n_minus_one = false;         // p-1 | n-1
    bool p_minus_one_divides_cofactor_minus_one = false;  // p-1 | n/p - 1
};

struct CandidateReport {
    Int n;
    bool composite = false;
    bool odd = false;
    bool squarefree = false;
    std::size_t prime_factor_count = 0;
    std::vector<PrimeRecord> primes;
    bool is_giuga_number = false;
    bool is_carmichael = false;
    bool reciprocal_sum_exceeds_one = false;
    bool at_least_nine_prime_factors = false;
    bool no_prime_congruent_one_mod_another = false;  // no p, q | n with q == 1 (mod p)
};

/// Filtered prime sum mod n. f must be the factorization of n.
Residue giuga_agoh_residue(const Int& n, const Factorization& f);

GiugaAgohVerdict classify(const Int& n);
GiugaAgohVerdict classify(const Int& n, const SpfTable& hint);

/// Composite n with sum 1/p - prod 1/p a positive integer.
bool is_giuga_number(const Int& n, const Factorization& f);

/// Korselt: composite, squarefree, and (p-1) | (n-1) for every p | n.
bool is_carmichael(const Int& n, const Factorization& f);

/// a^{n-1} == 1 (mod n) for every base. Each base must be coprime to n.
bool fermat_witness_check(const Int& n, std::span<const Int> bases);

CandidateReport candidate_report(const Int& n);

enum class ButskeSign { plus, minus };

/// All n <= max with sum_{p|n} 1/p +- 1/n == 1, ascending.
std::vector<Int> butske_search(ButskeSign sign, std::uint64_t max);

std::vector<Int> find_giuga_numbers(std::uint64_t max);
std::vector<Int> find_carmichael_numbers(std::uint64_t max);

}  // namespace giuga
