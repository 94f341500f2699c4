#include "giuga/exact.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace giuga {

namespace {

void require_same_modulus(const Residue& a, const Residue& b)
{
    if (a.modulus() != b.modulus()) {
        throw std::invalid_argument("residue moduli differ: " + a.modulus().get_str() + " vs " +
                                    b.modulus().get_str());
    }
}

const std::vector<std::uint32_t>& small_primes()
{
    // Primes below 2^16; enough trial division for everything the scans touch.
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t bound = 1u << 16;
        std::vector<bool> composite(bound, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t i = 2; i < bound; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (std::uint64_t j = std::uint64_t{i} * i; j < bound; j += i) composite[j] = true;
        }
        return out;
    }();
    return primes;
}

bool strong_probable_prime(const Int& n, const Int& base)
{
    Int d = n - 1;
    unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
    mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
    Int x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    const Int n_minus_1 = n - 1;
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n_minus_1) return true;
        if (x == 1) return false;
    }
    return false;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n,
// or n itself if this polynomial constant fails.
Int rho_split(const Int& n, unsigned long c)
{
    constexpr unsigned long batch = 128;
    Int y = 2, x, ys, q = 1, g = 1;
    unsigned long r = 1;
    auto step = [&](Int& v) { v = (v * v + c) % n; };
    do {
        x = y;
        for (unsigned long i = 0; i < r; ++i) step(y);
        unsigned long k = 0;
        while (k < r && g == 1) {
            ys = y;
            for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
                step(y);
                Int diff = abs(x - y);
                q = (q * diff) % n;
            }
            mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            k += batch;
        }
        r *= 2;
    } while (g == 1);
    if (g == n) {
        // Batched product collapsed; backtrack one step at a time.
        do {
            step(ys);
            Int diff = abs(x - ys);
            mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
        } while (g == 1);
    }
    return g;
}

void split_into(const Int& n, std::map<Int, unsigned long>& out)
{
    if (n == 1) return;
    if (is_prime(n)) {
        ++out[n];
        return;
    }
    Int factor = n;
    for (unsigned long c = 1; factor == n; ++c) factor = rho_split(n, c);
    split_into(factor, out);
    split_into(Int(n / factor), out);
}

Factorization from_map(const std::map<Int, unsigned long>& m)
{
    Factorization f;
    f.factors.reserve(m.size());
    for (const auto& [p, e] : m) f.factors.push_back({p, e});
    return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// Rat

Rat::Rat(const Int& num, const Int& den)
{
    if (den == 0) throw std::domain_error("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
}

Rat operator/(const Rat& a, const Rat& b)
{
    if (b.num() == 0) throw std::domain_error("division by zero rational");
    return Rat(mpq_class(a.value_ / b.value_));
}

std::string Rat::str() const
{
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

// ---------------------------------------------------------------------------
// Residue

Residue::Residue(const Int& value, const Int& modulus) : modulus_(modulus)
{
    if (modulus <= 1) throw std::invalid_argument("residue modulus must exceed 1, got " + modulus.get_str());
    mpz_fdiv_r(value_.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
}

Residue operator+(const Residue& a, const Residue& b)
{
    require_same_modulus(a, b);
    return Residue(a.value_ + b.value_, a.modulus_);
}

Residue operator-(const Residue& a, const Residue& b)
{
    require_same_modulus(a, b);
    return Residue(a.value_ - b.value_, a.modulus_);
}

Residue operator*(const Residue& a, const Residue& b)
{
    require_same_modulus(a, b);
    return Residue(a.value_ * b.value_, a.modulus_);
}

Residue Residue::pow(const Int& exponent) const
{
    if (exponent < 0) throw std::invalid_argument("negative residue exponent");
    return Residue(pow_mod(value_, exponent, modulus_), modulus_);
}

// ---------------------------------------------------------------------------
// Factorization / SpfTable

Int Factorization::value() const
{
    Int out = 1;
    for (const auto& pp : factors) {
        Int power;
        mpz_pow_ui(power.get_mpz_t(), pp.prime.get_mpz_t(), pp.exponent);
        out *= power;
    }
    return out;
}

bool Factorization::squarefree() const
{
    return std::all_of(factors.begin(), factors.end(), [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::uint32_t SpfTable::smallest_prime_factor(std::uint64_t k) const
{
    if (!covers(k)) throw std::out_of_range("spf table does not cover " + std::to_string(k));
    return spf_[k];
}

SpfTable build_spf(std::uint64_t limit)
{
    if (limit < 2) throw std::invalid_argument("spf limit must be at least 2");
    if (limit > 0xFFFFFFFFull) throw std::invalid_argument("spf limit exceeds 32-bit table entries");
    SpfTable t;
    t.limit_ = limit;
    t.spf_.assign(limit + 1, 0);
    std::vector<std::uint32_t> primes;
    // Linear sieve: every composite is struck exactly once, by its smallest prime.
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (t.spf_[i] == 0) {
            t.spf_[i] = static_cast<std::uint32_t>(i);
            primes.push_back(static_cast<std::uint32_t>(i));
        }
        for (std::uint32_t p : primes) {
            const std::uint64_t composite = i * p;
            if (p > t.spf_[i] || composite > limit) break;
            t.spf_[composite] = p;
        }
    }
    return t;
}

// ---------------------------------------------------------------------------
// Machine-word helpers

bool fits_u64(const Int& n)
{
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

std::uint64_t to_u64(const Int& n)
{
    if (!fits_u64(n)) throw std::out_of_range("value does not fit in 64 bits: " + n.get_str());
    static_assert(sizeof(unsigned long) == 8, "expects LP64");
    return n.get_ui();
}

Int from_u64(std::uint64_t v)
{
    return Int(static_cast<unsigned long>(v));
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m)
{
    if (m == 1) return 0;
    std::uint64_t result = 1;
    base %= m;
    while (exponent) {
        if (exponent & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

Int pow_mod(const Int& base, const Int& exponent, const Int& m)
{
    Int out;
    mpz_powm(out.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
    return out;
}

// ---------------------------------------------------------------------------
// Combinatorics

Int factorial(unsigned long n)
{
    Int out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return out;
}

Int binomial(const Int& top, long k)
{
    if (k < 0) throw std::invalid_argument("binomial: negative k");
    Int numerator = 1;
    for (long i = 0; i < k; ++i) numerator *= top - i;
    Int out;
    mpz_divexact(out.get_mpz_t(), numerator.get_mpz_t(), factorial(static_cast<unsigned long>(k)).get_mpz_t());
    return out;
}

Rat binomial(const Rat& top, long k)
{
    if (k < 0) throw std::invalid_argument("binomial: negative k");
    return falling_factorial(top, k) / Rat(factorial(static_cast<unsigned long>(k)));
}

Rat falling_factorial(const Rat& x, long n)
{
    if (n < 0) throw std::invalid_argument("falling factorial: negative length");
    Rat out = 1;
    for (long i = 0; i < n; ++i) out *= x - Rat(i);
    return out;
}

// ---------------------------------------------------------------------------
// Residues of rationals

Residue residue_of(const Int& a, const Int& m)
{
    return Residue(a, m);
}

Residue residue_of_rat(const Rat& q, const Int& m)
{
    if (m <= 1) throw std::invalid_argument("residue modulus must exceed 1");
    Int inverse;
    if (mpz_invert(inverse.get_mpz_t(), q.den().get_mpz_t(), m.get_mpz_t()) == 0) {
        throw NonInvertibleDenominator("denominator " + q.den().get_str() + " is not invertible mod " + m.get_str());
    }
    return Residue(q.num() * inverse, m);
}

// ---------------------------------------------------------------------------
// Primality

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    if (n < 41 * 41) return true;
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Witness set deterministic for all n < 2^64 (Jim Sinclair).
    constexpr std::array<std::uint64_t, 7> witnesses{2, 325, 9375, 28178, 450775, 9780504, 1795265022};
    for (std::uint64_t a : witnesses) {
        a %= n;
        if (a == 0) continue;
        std::uint64_t x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime(const Int& n)
{
    if (n < 2) return false;
    if (fits_u64(n)) return is_prime(to_u64(n));
    const auto& primes = small_primes();
    for (std::size_t i = 0; i < 64; ++i) {
        if (mpz_divisible_ui_p(n.get_mpz_t(), primes[i])) return false;
    }
    for (int i = 0; i < kProbabilisticRounds; ++i) {
        if (!strong_probable_prime(n, Int(primes[static_cast<std::size_t>(i)]))) return false;
    }
    return true;
}

bool primality_is_deterministic(const Int& n)
{
    return n < 0 || fits_u64(n);
}

// ---------------------------------------------------------------------------
// Factorization

Factorization factorize(const Int& n)
{
    if (n < 2) throw std::invalid_argument("factorize requires n >= 2, got " + n.get_str());
    std::map<Int, unsigned long> found;
    Int rest = n;
    for (std::uint32_t p : small_primes()) {
        if (Int(p) * p > rest) break;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
            mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
            ++e;
        }
        if (e) found[Int(p)] = e;
    }
    split_into(rest, found);
    return from_map(found);
}

Factorization factorize(const Int& n, const SpfTable& hint)
{
    if (n < 2) throw std::invalid_argument("factorize requires n >= 2, got " + n.get_str());
    if (!fits_u64(n) || !hint.covers(to_u64(n))) return factorize(n);
    std::uint64_t rest = to_u64(n);
    Factorization f;
    while (rest > 1) {
        const std::uint32_t p = hint.smallest_prime_factor(rest);
        unsigned long e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        f.factors.push_back({Int(p), e});
    }
    return f;
}

}  // namespace giuga
