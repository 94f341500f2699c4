#pragma once

// Stirling numbers of both kinds and the scaled numbers T(n,k) = k! S2(n,k).
//
// Conventions:
//   (x)_n = sum_k s1(n,k) x^k        (signed first kind)
//   x^n   = sum_k s2(n,k) (x)_k
// with s(n,n) = 1 for n >= 0 and s(n,0) = 0 for n >= 1, s(n,k) = 0 for k > n.

#include <vector>

#include "giuga/exact.hpp"

namespace giuga {

enum class StirlingKind { first, second };

class StirlingTriangle {
public:
    /// Rows 0..n_max, built by the three-term recurrence for the given kind.
    static StirlingTriangle build(StirlingKind kind, unsigned n_max);

    StirlingKind kind() const { return kind_; }
    unsigned n_max() const { return static_cast<unsigned>(rows_.size()) - 1; }

    /// Entry (n,k); zero for k > n. Throws std::out_of_range for n > n_max().
    const Int& at(unsigned n, unsigned k) const;

private:
    StirlingKind kind_ = StirlingKind::second;
    std::vector<std::vector<Int>> rows_;
};

// Memoized; safe to call from several threads.
Int s1(unsigned n, unsigned k);
Int s2(unsigned n, unsigned k);

/// T(n,k) = k! * s2(n,k).
Int t_big(unsigned n, unsigned k);

/// Predicted T(n, k-1) mod k for even n: k-1 when k is prime and (k-1) | n,
/// 0 otherwise. Requires even n >= 2 and k >= 2.
Residue t_congruence_expected(unsigned n, unsigned k);

/// Streams rows of T(n, 0..n) for n = 0, 1, 2, ... keeping one row in memory.
/// Uses T(n,k) = k (T(n-1,k) + T(n-1,k-1)).
class ScaledStirlingRows {
public:
    ScaledStirlingRows() : row_{Int(1)} {}

    unsigned n() const { return n_; }
    const std::vector<Int>& row() const { return row_; }
    void advance();

private:
    unsigned n_ = 0;
    std::vector<Int> row_;
};

}  // namespace giuga
