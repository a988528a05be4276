#pragma once

// Bernoulli numbers and polynomials over exact rationals, the brute-force
// denominator of B_n(x) - B_n, and its closed form as a product of primes
// selected by base-p digit sums.
//
// Convention: B_1 = -1/2, i.e. the generating function t e^{xt} / (e^t - 1).

#include "bernden/numeric.hpp"
#include "bernden/rational_poly.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <vector>

namespace bernden {

/// Largest index bernoulli_numbers() computes unless told otherwise.
inline constexpr std::size_t kDefaultBernoulliCap = 5000;

/// B_0 .. B_max_index.
class BernoulliTable {
public:
    /// Takes the values as given; used for injected (e.g. deliberately corrupted) tables.
    explicit BernoulliTable(std::vector<Rational> values);

    std::size_t max_index() const { return values_.size() - 1; }
    /// Throws std::out_of_range past max_index().
    const Rational& operator[](std::size_t k) const { return values_.at(k); }
    const std::vector<Rational>& values() const { return values_; }

    /// A copy extended to max_index = n with sum_{k=0}^{m} C(m+1, k) B_k = 0.
    BernoulliTable extended_to(std::size_t n) const;

private:
    std::vector<Rational> values_;
};

/// Exact B_0 .. B_n. Throws DomainError when n exceeds cap.
BernoulliTable bernoulli_numbers(std::size_t n, std::size_t cap = kDefaultBernoulliCap);

/// Process-wide memoized table. Grows under a lock; handed-out snapshots are immutable.
class BernoulliCache {
public:
    explicit BernoulliCache(std::size_t cap = kDefaultBernoulliCap) : cap_(cap) {}

    /// A table with max_index() >= n. Throws DomainError when n exceeds the cap.
    std::shared_ptr<const BernoulliTable> up_to(std::size_t n);

    static BernoulliCache& global();

private:
    std::mutex mutex_;
    std::size_t cap_;
    std::shared_ptr<const BernoulliTable> table_;
};

/// Denominator of B_n for even n >= 2: product of primes p with (p - 1) | n.
/// Throws DomainError for odd or zero n.
Natural clausen_denominator(std::uint64_t n);
std::vector<std::uint64_t> clausen_primes(std::uint64_t n);

/// B_n(x) = sum_k C(n, k) B_k x^(n-k)
RationalPolynomial bernoulli_poly(std::size_t n, const BernoulliTable& table);
RationalPolynomial bernoulli_poly(std::size_t n);

/// B_n(x) - B_n. Throws DomainError for n = 0.
RationalPolynomial bt_poly(std::size_t n, const BernoulliTable& table);
RationalPolynomial bt_poly(std::size_t n);

/// sum of C(n, k) B_k x^(n-k) over even k in [2, n-1] with (p - 1) | k.
/// Throws DomainError for n < 3.
RationalPolynomial bt_np_poly(std::size_t n, std::uint64_t p, const BernoulliTable& table);
RationalPolynomial bt_np_poly(std::size_t n, std::uint64_t p);

/// 2 for odd n, 3 for even n.
std::uint64_t lambda_n(std::uint64_t n);

/// floor((n + 1) / lambda_n): no prime above it divides the denominator.
std::uint64_t prime_bound(std::uint64_t n);

struct DenominatorFactorization {
    std::uint64_t n = 0;
    std::vector<std::uint64_t> primes;
    Natural product = 1;
};

/// denom(B_n(x) - B_n) as the product of primes p <= (n + 1) / lambda_n with s_p(n) >= p.
/// Throws DomainError for n = 0.
DenominatorFactorization denom_formula(std::uint64_t n);

/// Same product with the search widened to every prime p <= n.
DenominatorFactorization denom_formula_unbounded(std::uint64_t n);

/// Whether p divides denom(B_n(x) - B_n) according to the digit-sum formula.
/// Works for n far beyond what denom_formula() could enumerate.
bool denom_formula_contains(const Natural& n, std::uint64_t p);

} // namespace bernden
