#include "giuga/stirling.hpp"

#include <mutex>
#include <shared_mutex>
#include <string>

namespace giuga {

namespace {

const Int kZero = 0;

std::vector<Int> next_row(StirlingKind kind, const std::vector<Int>& prev)
{
    const unsigned n = static_cast<unsigned>(prev.size());  // building row n from row n-1
    std::vector<Int> row(n + 1);
    row[0] = 0;
    for (unsigned k = 1; k <= n; ++k) {
        const Int& diag = prev[k - 1];
        const Int& same = k < n ? prev[k] : kZero;
        if (kind == StirlingKind::second) {
            row[k] = k * same + diag;
        } else {
            row[k] = diag - (n - 1) * same;
        }
    }
    return row;
}

// Rows grow monotonically under a writer lock; readers copy the entry out.
class TriangleCache {
public:
    explicit TriangleCache(StirlingKind kind) : kind_(kind), rows_{{Int(1)}} {}

    Int get(unsigned n, unsigned k)
    {
        if (k > n) return 0;
        {
            std::shared_lock lock(mutex_);
            if (n < rows_.size()) return rows_[n][k];
        }
        std::unique_lock lock(mutex_);
        while (rows_.size() <= n) rows_.push_back(next_row(kind_, rows_.back()));
        return rows_[n][k];
    }

private:
    StirlingKind kind_;
    std::shared_mutex mutex_;
    std::vector<std::vector<Int>> rows_;
};

TriangleCache& cache(StirlingKind kind)
{
    static TriangleCache first(StirlingKind::first);
    static TriangleCache second(StirlingKind::second);
    return kind == StirlingKind::first ? first : second;
}

}  // namespace

StirlingTriangle StirlingTriangle::build(StirlingKind kind, unsigned n_max)
{
    StirlingTriangle t;
    t.kind_ = kind;
    t.rows_.reserve(n_max + 1);
    t.rows_.push_back({Int(1)});
    for (unsigned n = 1; n <= n_max; ++n) t.rows_.push_back(next_row(kind, t.rows_.back()));
    return t;
}

const Int& StirlingTriangle::at(unsigned n, unsigned k) const
{
    if (n >= rows_.size()) throw std::out_of_range("stirling triangle row " + std::to_string(n) + " not built");
    if (k > n) return kZero;
    return rows_[n][k];
}

Int s1(unsigned n, unsigned k)
{
    return cache(StirlingKind::first).get(n, k);
}

Int s2(unsigned n, unsigned k)
{
    return cache(StirlingKind::second).get(n, k);
}

Int t_big(unsigned n, unsigned k)
{
    if (k > n) return 0;
    return factorial(k) * s2(n, k);
}

Residue t_congruence_expected(unsigned n, unsigned k)
{
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("stirling congruence needs even n >= 2");
    if (k < 2) throw std::invalid_argument("stirling congruence needs k >= 2");
    const bool prime_with_divisor = is_prime(std::uint64_t{k}) && n % (k - 1) == 0;
    return Residue(prime_with_divisor ? Int(-1) : Int(0), Int(k));
}

void ScaledStirlingRows::advance()
{
    ++n_;
    std::vector<Int> next(n_ + 1);
    next[0] = 0;
    for (unsigned k = 1; k <= n_; ++k) {
        if (k < n_) {
            next[k] = row_[k] + row_[k - 1];
        } else {
            next[k] = row_[k - 1];
        }
        next[k] *= k;
    }
    row_ = std::move(next);
}

}  // namespace giuga
