#include "bernden/bernoulli.hpp"

#include "bernden/arith.hpp"
#include "bernden/errors.hpp"
#include "bernden/primes.hpp"

#include <string>

namespace bernden {

namespace {

Natural binomial(std::size_t n, std::size_t k)
{
    Natural c;
    mpz_bin_uiui(c.get_mpz_t(), n, k);
    return c;
}

// Coefficients C(n, k) B_k x^(n-k) for the selected k, accumulated into one polynomial.
template <typename Predicate>
RationalPolynomial bernoulli_terms(std::size_t n, const BernoulliTable& table, Predicate keep)
{
    if (table.max_index() < n)
        throw DomainError("Bernoulli table holds B_0..B_" + std::to_string(table.max_index())
                          + ", need B_" + std::to_string(n));
    std::vector<Rational> coeffs(n + 1);
    for (std::size_t k = 0; k <= n; ++k) {
        if (keep(k))
            coeffs[n - k] = Rational(binomial(n, k)) * table[k];
    }
    return RationalPolynomial(std::move(coeffs));
}

DenominatorFactorization collect(std::uint64_t n, std::uint64_t search_limit)
{
    if (n == 0)
        throw DomainError("denominator formula requires n >= 1");
    DenominatorFactorization out;
    out.n = n;
    const Natural big_n(static_cast<unsigned long>(n));
    for (auto p : primes_up_to(search_limit)) {
        if (digit_sum(big_n, p) >= p) {
            out.primes.push_back(p);
            out.product *= static_cast<unsigned long>(p);
        }
    }
    return out;
}

} // namespace

BernoulliTable::BernoulliTable(std::vector<Rational> values) : values_(std::move(values))
{
    if (values_.empty())
        throw DomainError("Bernoulli table needs at least B_0");
}

BernoulliTable BernoulliTable::extended_to(std::size_t n) const
{
    std::vector<Rational> values = values_;
    values.reserve(n + 1);
    for (std::size_t m = values.size(); m <= n; ++m) {
        Rational acc = 0;
        for (std::size_t k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * values[k];
        acc /= Rational(static_cast<unsigned long>(m + 1));
        values.push_back(-acc);
    }
    return BernoulliTable(std::move(values));
}

BernoulliTable bernoulli_numbers(std::size_t n, std::size_t cap)
{
    if (n > cap)
        throw DomainError("Bernoulli index " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    return BernoulliTable({Rational(1)}).extended_to(n);
}

std::shared_ptr<const BernoulliTable> BernoulliCache::up_to(std::size_t n)
{
    if (n > cap_)
        throw DomainError("Bernoulli index " + std::to_string(n) + " exceeds cap " + std::to_string(cap_));
    std::lock_guard lock(mutex_);
    if (!table_)
        table_ = std::make_shared<const BernoulliTable>(BernoulliTable({Rational(1)}));
    if (table_->max_index() < n)
        table_ = std::make_shared<const BernoulliTable>(table_->extended_to(n));
    return table_;
}

BernoulliCache& BernoulliCache::global()
{
    static BernoulliCache cache;
    return cache;
}

std::vector<std::uint64_t> clausen_primes(std::uint64_t n)
{
    if (n == 0 || n % 2 != 0)
        throw DomainError("von Staudt-Clausen denominator requires even n >= 2");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t d = 1; d <= n; ++d) {
        if (n % d == 0 && is_prime(d + 1))
            primes.push_back(d + 1);
    }
    return primes;
}

Natural clausen_denominator(std::uint64_t n)
{
    Natural product = 1;
    for (auto p : clausen_primes(n))
        product *= static_cast<unsigned long>(p);
    return product;
}

RationalPolynomial bernoulli_poly(std::size_t n, const BernoulliTable& table)
{
    return bernoulli_terms(n, table, [](std::size_t) { return true; });
}

RationalPolynomial bernoulli_poly(std::size_t n)
{
    return bernoulli_poly(n, *BernoulliCache::global().up_to(n));
}

RationalPolynomial bt_poly(std::size_t n, const BernoulliTable& table)
{
    if (n == 0)
        throw DomainError("B_0(x) - B_0 is the zero polynomial; n must be >= 1");
    return bernoulli_terms(n, table, [n](std::size_t k) { return k < n; });
}

RationalPolynomial bt_poly(std::size_t n)
{
    return bt_poly(n, *BernoulliCache::global().up_to(n));
}

RationalPolynomial bt_np_poly(std::size_t n, std::uint64_t p, const BernoulliTable& table)
{
    require_prime(p);
    if (n < 3)
        throw DomainError("partial sum over (p-1) | k requires n >= 3");
    return bernoulli_terms(n, table, [n, p](std::size_t k) {
        return k >= 2 && k < n && k % 2 == 0 && k % (p - 1) == 0;
    });
}

RationalPolynomial bt_np_poly(std::size_t n, std::uint64_t p)
{
    return bt_np_poly(n, p, *BernoulliCache::global().up_to(n));
}

std::uint64_t lambda_n(std::uint64_t n)
{
    return n % 2 == 1 ? 2 : 3;
}

std::uint64_t prime_bound(std::uint64_t n)
{
    return (n + 1) / lambda_n(n);
}

DenominatorFactorization denom_formula(std::uint64_t n)
{
    return collect(n, prime_bound(n));
}

DenominatorFactorization denom_formula_unbounded(std::uint64_t n)
{
    return collect(n, n);
}

bool denom_formula_contains(const Natural& n, std::uint64_t p)
{
    require_prime(p);
    if (n < 1)
        throw DomainError("denominator formula requires n >= 1");
    const unsigned long lambda = mpz_odd_p(n.get_mpz_t()) ? 2 : 3;
    if (Natural(static_cast<unsigned long>(p)) * lambda > n + 1)
        return false;
    return digit_sum(n, p) >= p;
}

} // namespace bernden
