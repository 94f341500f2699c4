#pragma once

// Exact Bernoulli numbers (B_1 = -1/2 convention) and Bernoulli polynomials.

#include <map>
#include <optional>
#include <shared_mutex>
#include <string_view>

#include "giuga/exact.hpp"
#include "giuga/stirling.hpp"

namespace giuga {

enum class BernoulliMethod {
    stirling,   ///< B_n = sum_{k=1}^n T(n,k) (-1)^k / (k+1), memoized
    worpitzky,  ///< double sum over binomials and powers, no memo
};

std::string_view method_name(BernoulliMethod m);
std::optional<BernoulliMethod> parse_method(std::string_view s);

/// Monotone memo n -> B_n filled by streaming scaled Stirling rows.
/// Entries are immutable once stored; concurrent readers are fine.
class BernoulliTable {
public:
    Rat get(unsigned n);
    bool contains(unsigned n) const;
    std::size_t size() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<unsigned, Rat> entries_;
    ScaledStirlingRows rows_;
    bool row_consumed_ = false;
};

BernoulliTable& bernoulli_table();

/// B_n from a row of T(n, 0..n).
Rat bernoulli_from_scaled_row(unsigned n, const std::vector<Int>& row);

Rat bernoulli(unsigned n, BernoulliMethod method = BernoulliMethod::stirling);

/// B_n(x) = sum_{k=0}^n C(n,k) B_k x^{n-k}.
Rat bernoulli_poly(unsigned n, const Rat& x);

/// Product of the primes p with (p-1) | n. Requires even n >= 2.
Int staudt_denominator(unsigned n);

}  // namespace giuga
