#include "bernden/arith.hpp"

#include "bernden/errors.hpp"
#include "bernden/primes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace bernden {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t inverse_mod_prime(std::uint64_t a, std::uint64_t p)
{
    std::uint64_t result = 1, base = a % p, exp = p - 2;
    while (exp) {
        if (exp & 1)
            result = mul_mod(result, base, p);
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    return result;
}

// C(a, b) mod p for a, b < p, where no factor of p can appear.
std::uint64_t small_binom_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p)
{
    if (b > a)
        return 0;
    b = std::min(b, a - b);
    std::uint64_t num = 1 % p, den = 1 % p;
    for (std::uint64_t i = 1; i <= b; ++i) {
        num = mul_mod(num, a + 1 - i, p);
        den = mul_mod(den, i, p);
    }
    return mul_mod(num, inverse_mod_prime(den, p), p);
}

void require_binomial_args(const Natural& n, const Natural& k)
{
    require_natural(n, "n");
    require_natural(k, "k");
    if (k > n)
        throw DomainError("binomial requires k <= n");
}

Natural legendre_sum(const Natural& n, std::uint64_t p)
{
    Natural total = 0;
    Natural q = n;
    while (q > 0) {
        mpz_fdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), p);
        total += q;
    }
    return total;
}

} // namespace

DigitExpansion::DigitExpansion(const Natural& n, std::uint64_t base) : base_(base)
{
    require_natural(n, "n");
    Natural q = n;
    while (q > 0)
        digits_.push_back(mpz_fdiv_q_ui(q.get_mpz_t(), q.get_mpz_t(), base));
}

std::uint64_t DigitExpansion::digit_sum() const
{
    return std::accumulate(digits_.begin(), digits_.end(), std::uint64_t{0});
}

Natural DigitExpansion::value() const
{
    Natural v = 0;
    for (auto it = digits_.rbegin(); it != digits_.rend(); ++it) {
        v *= static_cast<unsigned long>(base_);
        v += static_cast<unsigned long>(*it);
    }
    return v;
}

DigitExpansion digit_expansion(const Natural& n, std::uint64_t p)
{
    require_prime(p);
    return DigitExpansion(n, p);
}

std::uint64_t digit_sum(const Natural& n, std::uint64_t p)
{
    return digit_expansion(n, p).digit_sum();
}

Natural ord_factorial(const Natural& n, std::uint64_t p)
{
    const auto s = digit_sum(n, p);
    Natural via_digits = n - static_cast<unsigned long>(s);
    mpz_divexact_ui(via_digits.get_mpz_t(), via_digits.get_mpz_t(), p - 1);
    Natural via_legendre = legendre_sum(n, p);
    if (via_digits != via_legendre)
        throw std::logic_error("Legendre forms disagree for ord_p(n!)");
    return via_legendre;
}

Rational frac_sum_from_digits(const Natural& n, std::uint64_t p)
{
    const auto s = digit_sum(n, p);
    return make_rational(Natural(static_cast<unsigned long>(s)), Natural(static_cast<unsigned long>(p - 1)));
}

Rational frac_sum_direct(const Natural& n, std::uint64_t p)
{
    require_prime(p);
    require_natural(n, "n");
    if (n == 0)
        return Rational(0);

    // l with p^l <= n < p^(l+1)
    Natural pl = 1;
    std::size_t ell = 0;
    while (pl * static_cast<unsigned long>(p) <= n) {
        pl *= static_cast<unsigned long>(p);
        ++ell;
    }

    Rational total = make_rational(n, pl * static_cast<unsigned long>(p - 1));
    Natural pv = 1;
    for (std::size_t v = 1; v <= ell; ++v) {
        pv *= static_cast<unsigned long>(p);
        Natural rem = n % pv;
        total += make_rational(rem, pv);
    }
    return total;
}

FracSum frac_sum(const Natural& n, std::uint64_t p)
{
    require_prime(p);
    require_natural(n, "n");
    FracSum fs{make_rational(n, Natural(static_cast<unsigned long>(p - 1))) - Rational(ord_factorial(n, p))};
#ifdef BERNDEN_SELF_CHECK
    if (fs.value != frac_sum_from_digits(n, p) || fs.value != frac_sum_direct(n, p))
        throw std::logic_error("fractional-part sum forms disagree");
#endif
    return fs;
}

bool fracsum_is_integer(const Natural& n, std::uint64_t p)
{
    return frac_sum(n, p).is_integer();
}

bool frac_sum_exceeds_one(const Natural& n, std::uint64_t p)
{
    return digit_sum(n, p) >= p;
}

Natural ord_binomial(const Natural& n, const Natural& k, std::uint64_t p)
{
    require_binomial_args(n, k);
    return ord_factorial(n, p) - ord_factorial(k, p) - ord_factorial(n - k, p);
}

std::uint64_t kummer_carries(const Natural& n, const Natural& k, std::uint64_t p)
{
    require_binomial_args(n, k);
    const auto a = digit_expansion(k, p).digits();
    const auto b = digit_expansion(n - k, p).digits();
    std::uint64_t carries = 0;
    std::uint64_t carry = 0;
    for (std::size_t j = 0; j < std::max(a.size(), b.size()); ++j) {
        const u128 column = static_cast<u128>(j < a.size() ? a[j] : 0)
                          + (j < b.size() ? b[j] : 0) + carry;
        carry = column >= p ? 1 : 0;
        carries += carry;
    }
    return carries;
}

std::uint64_t lucas_binom_mod(const Natural& n, const Natural& k, std::uint64_t p)
{
    require_binomial_args(n, k);
    const auto nd = digit_expansion(n, p).digits();
    const auto kd = digit_expansion(k, p).digits();
    std::uint64_t result = 1 % p;
    for (std::size_t j = 0; j < nd.size() && result != 0; ++j) {
        const std::uint64_t kj = j < kd.size() ? kd[j] : 0;
        result = mul_mod(result, small_binom_mod(nd[j], kj, p), p);
    }
    return result;
}

std::optional<Natural> witness_k(const Natural& n, std::uint64_t p)
{
    require_prime(p);
    require_natural(n, "n");
    const auto expansion = digit_expansion(n, p);
    if (expansion.digit_sum() < p)
        return std::nullopt;

    std::uint64_t budget = p - 1;
    std::vector<std::uint64_t> chosen;
    for (auto d : expansion.digits()) {
        const auto take = std::min(d, budget);
        chosen.push_back(take);
        budget -= take;
        if (budget == 0)
            break;
    }
    Natural k = 0;
    for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) {
        k *= static_cast<unsigned long>(p);
        k += static_cast<unsigned long>(*it);
    }
    return k;
}

bool is_power_of(const Natural& n, std::uint64_t p)
{
    require_prime(p);
    if (n < 1)
        return false;
    Natural rest = n;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p))
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    return rest == 1;
}

} // namespace bernden
