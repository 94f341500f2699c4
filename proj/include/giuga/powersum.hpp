#pragma once

// S_n(m) = sum_{k=1}^{m-1} k^n by three independent routes, plus the
// iterated sums S_{n,r}.

#include "giuga/exact.hpp"

namespace giuga {

/// Literal sum; m = 1 is the empty sum.
Int powersum_direct(unsigned n, const Int& m);

/// sum_{k=1}^n T(n,k) C(x, k+1); valid for any rational x.
Rat powersum_binomial(unsigned n, const Rat& x);

/// (B_{n+1}(x) - B_{n+1}) / (n+1).
Rat powersum_bernoulli(unsigned n, const Rat& x);

/// S_{n,0}(m) = m^n, S_{n,r}(m) = sum_{k=1}^{m-1} S_{n,r-1}(k).
Int powersum_iterated(unsigned n, unsigned r, std::uint64_t m);

/// S_n(m) mod modulus, term-by-term reduced. Uses the SIMD kernel when the
/// modulus fits.
Residue powersum_mod(unsigned n, const Int& m, const Int& modulus);

}  // namespace giuga
