#include "giuga/bernoulli.hpp"

#include <mutex>

namespace giuga {

namespace {

Rat worpitzky(unsigned n)
{
    if (n == 0) return 1;
    Rat out = 0;
    for (unsigned k = 1; k <= n; ++k) {
        Int inner = 0;
        Int choose = 1;  // C(k, nu), updated incrementally
        for (unsigned nu = 1; nu <= k; ++nu) {
            choose = choose * (k - nu + 1) / nu;
            Int power;
            mpz_ui_pow_ui(power.get_mpz_t(), nu, n);
            if (nu % 2 == 0) {
                inner += choose * power;
            } else {
                inner -= choose * power;
            }
        }
        out += Rat(inner, Int(k + 1));
    }
    return out;
}

}  // namespace

std::string_view method_name(BernoulliMethod m)
{
    return m == BernoulliMethod::stirling ? "stirling" : "worpitzky";
}

std::optional<BernoulliMethod> parse_method(std::string_view s)
{
    if (s == "stirling") return BernoulliMethod::stirling;
    if (s == "worpitzky") return BernoulliMethod::worpitzky;
    return std::nullopt;
}

Rat bernoulli_from_scaled_row(unsigned n, const std::vector<Int>& row)
{
    if (n == 0) return 1;
    // Split each T(n,k)/(k+1) into quotient and remainder so that only the
    // few non-integral terms go through rational addition.
    Int whole = 0;
    Rat fractional = 0;
    Int q, r;
    for (unsigned k = 1; k <= n; ++k) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), row[k].get_mpz_t(), k + 1);
        if (k % 2 == 1) {
            q = -q;
            r = -r;
        }
        whole += q;
        if (r != 0) fractional += Rat(r, Int(k + 1));
    }
    return Rat(whole) + fractional;
}

Rat BernoulliTable::get(unsigned n)
{
    {
        std::shared_lock lock(mutex_);
        if (auto it = entries_.find(n); it != entries_.end()) return it->second;
    }
    std::unique_lock lock(mutex_);
    if (auto it = entries_.find(n); it != entries_.end()) return it->second;
    // The stream only moves forward, so every row it passes is recorded.
    while (true) {
        if (!row_consumed_) {
            entries_.emplace(rows_.n(), bernoulli_from_scaled_row(rows_.n(), rows_.row()));
            row_consumed_ = true;
        }
        if (rows_.n() >= n) break;
        rows_.advance();
        row_consumed_ = false;
    }
    return entries_.at(n);
}

bool BernoulliTable::contains(unsigned n) const
{
    std::shared_lock lock(mutex_);
    return entries_.count(n) != 0;
}

std::size_t BernoulliTable::size() const
{
    std::shared_lock lock(mutex_);
    return entries_.size();
}

BernoulliTable& bernoulli_table()
{
    static BernoulliTable table;
    return table;
}

Rat bernoulli(unsigned n, BernoulliMethod method)
{
    if (method == BernoulliMethod::worpitzky) return worpitzky(n);
    return bernoulli_table().get(n);
}

Rat bernoulli_poly(unsigned n, const Rat& x)
{
    Rat out = 0;
    Rat x_power = 1;  // x^{n-k}, walking k downward
    for (unsigned j = 0; j <= n; ++j) {
        const unsigned k = n - j;
        const Rat& b = bernoulli(k);
        if (b.num() != 0) out += Rat(binomial(Int(n), k)) * b * x_power;
        x_power *= x;
    }
    return out;
}

Int staudt_denominator(unsigned n)
{
    if (n < 2 || n % 2 != 0) throw std::invalid_argument("staudt_denominator needs even n >= 2");
    Int out = 1;
    for (unsigned d = 1; d <= n; ++d) {
        if (n % d == 0 && is_prime(std::uint64_t{d} + 1)) out *= d + 1;
    }
    return out;
}

}  // namespace giuga
