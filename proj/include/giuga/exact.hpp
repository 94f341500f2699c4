#pragma once

// Exact integer and rational arithmetic, residues, primality and factorization.
//
// Everything above this layer is written against Int/Rat/Residue; nothing in
// the library touches floating point except the SIMD kernels, which are
// restricted to inputs where double arithmetic is exact.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace giuga {

using Int = mpz_class;

/// Raised when a rational is reduced modulo m but its denominator shares a
/// factor with m.
class NonInvertibleDenominator : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Reduced rational with positive denominator. Equality is structural.
class Rat {
public:
    Rat() = default;
    Rat(long v) : value_(v) {}
    Rat(const Int& v) : value_(v) {}
    Rat(const Int& num, const Int& den);

    const Int& num() const { return value_.get_num(); }
    const Int& den() const { return value_.get_den(); }
    bool is_integer() const { return den() == 1; }
    int sign() const { return sgn(value_); }

    /// "num/den", or just "num" when the value is integral.
    std::string str() const;

    friend Rat operator+(const Rat& a, const Rat& b) { return Rat(mpq_class(a.value_ + b.value_)); }
    friend Rat operator-(const Rat& a, const Rat& b) { return Rat(mpq_class(a.value_ - b.value_)); }
    friend Rat operator*(const Rat& a, const Rat& b) { return Rat(mpq_class(a.value_ * b.value_)); }
    friend Rat operator/(const Rat& a, const Rat& b);
    Rat operator-() const { return Rat(mpq_class(-value_)); }

    Rat& operator+=(const Rat& o) { value_ += o.value_; return *this; }
    Rat& operator-=(const Rat& o) { value_ -= o.value_; return *this; }
    Rat& operator*=(const Rat& o) { value_ *= o.value_; return *this; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.value_ == b.value_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.value_ < b.value_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.value_ > b.value_; }

private:
    explicit Rat(mpq_class v) : value_(std::move(v)) {}

    mpq_class value_{0};
};

/// Canonical residue class: 0 <= value < modulus, modulus > 1.
/// Arithmetic between residues with different moduli throws std::invalid_argument.
class Residue {
public:
    Residue(const Int& value, const Int& modulus);

    const Int& value() const { return value_; }
    const Int& modulus() const { return modulus_; }

    friend Residue operator+(const Residue& a, const Residue& b);
    friend Residue operator-(const Residue& a, const Residue& b);
    friend Residue operator*(const Residue& a, const Residue& b);
    Residue operator-() const { return Residue(-value_, modulus_); }
    Residue pow(const Int& exponent) const;

    friend bool operator==(const Residue& a, const Residue& b)
    {
        return a.modulus_ == b.modulus_ && a.value_ == b.value_;
    }

    std::string str() const { return value_.get_str(); }

private:
    Int value_;
    Int modulus_;
};

struct PrimePower {
    Int prime;
    unsigned long exponent = 0;

    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime-power decomposition with strictly increasing primes.
struct Factorization {
    std::vector<PrimePower> factors;

    Int value() const;
    std::size_t distinct_primes() const { return factors.size(); }
    bool squarefree() const;
    bool is_prime_power_one() const { return factors.size() == 1 && factors[0].exponent == 1; }

    friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Dense smallest-prime-factor table for 2 <= k <= limit. Read-only once built.
class SpfTable {
public:
    std::uint64_t limit() const { return limit_; }
    bool covers(std::uint64_t k) const { return k >= 2 && k <= limit_; }
    std::uint32_t smallest_prime_factor(std::uint64_t k) const;

private:
    friend SpfTable build_spf(std::uint64_t limit);
    std::uint64_t limit_ = 0;
    std::vector<std::uint32_t> spf_;
};

// Strong-pseudoprime rounds applied above 2^64, where no witness set is known
// to be deterministic. Bases are the first kProbabilisticRounds primes.
inline constexpr int kProbabilisticRounds = 32;

bool fits_u64(const Int& n);
std::uint64_t to_u64(const Int& n);
Int from_u64(std::uint64_t v);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);
Int pow_mod(const Int& base, const Int& exponent, const Int& m);

/// Exact C(top, k) = top (top-1) ... (top-k+1) / k!. Negative k is rejected.
Int binomial(const Int& top, long k);
Rat binomial(const Rat& top, long k);

/// (x)_n = x (x-1) ... (x-n+1), with (x)_0 = 1.
Rat falling_factorial(const Rat& x, long n);

Int factorial(unsigned long n);

Residue residue_of(const Int& a, const Int& m);

/// q.num * q.den^{-1} mod m. Throws NonInvertibleDenominator when gcd(q.den, m) > 1.
Residue residue_of_rat(const Rat& q, const Int& m);

bool is_prime(std::uint64_t n);
bool is_prime(const Int& n);

/// True when is_prime(n) is a proof rather than a strong-pseudoprime verdict.
bool primality_is_deterministic(const Int& n);

SpfTable build_spf(std::uint64_t limit);

Factorization factorize(const Int& n);
Factorization factorize(const Int& n, const SpfTable& hint);

}  // namespace giuga
