#include "bernden/arith.hpp"
#include "bernden/bernoulli.hpp"
#include "bernden/errors.hpp"
#include "bernden/primes.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <future>

using namespace bernden;

namespace {

Rational q(long num, unsigned long den = 1)
{
    return make_rational(Natural(num), Natural(den));
}

RationalPolynomial poly(std::vector<Rational> c)
{
    return RationalPolynomial(std::move(c));
}

Rational evaluate(const RationalPolynomial& f, const Rational& x)
{
    Rational acc = 0;
    const auto& c = f.coefficients();
    for (auto it = c.rbegin(); it != c.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

} // namespace

TEST_CASE("RationalPolynomial basics")
{
    RationalPolynomial zero;
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.degree().has_value());
    CHECK(poly({q(0), q(0)}).is_zero());
    CHECK(poly({q(1), q(2), q(0)}).degree() == 1);
    CHECK(poly({q(2, 4)}).coefficient(0).get_den() == 2);
    CHECK((poly({q(1), q(1)}) - poly({q(0), q(1)})) == poly({q(1)}));
    CHECK((poly({q(0), q(1)}) - poly({q(0), q(1)})).is_zero());
    CHECK(poly({q(0), q(1, 2), q(-3, 2), q(1)}).to_string() == "x^3 - 3/2*x^2 + 1/2*x");
    CHECK(zero.to_string() == "0");
}

TEST_CASE("poly_denominator and ord_poly")
{
    CHECK(poly_denominator(RationalPolynomial{}) == 1);
    CHECK(ord_poly(RationalPolynomial{}, 7).is_infinite());
    CHECK(poly_denominator(poly({q(1, 4), q(1, 6)})) == 12);
    CHECK(ord_poly(poly({q(1, 4), q(3)}), 2) == -2);
    CHECK(ord_poly(poly({q(9), q(0), q(6)}), 3) == 1);
    CHECK_THROWS_AS(ord_poly(poly({q(1)}), 4), NotPrime);
}

TEST_CASE("bernoulli_numbers")
{
    const auto t = bernoulli_numbers(12);
    CHECK(t.max_index() == 12);
    CHECK(t[0] == 1);
    CHECK(t[1] == q(-1, 2));
    CHECK(t[2] == q(1, 6));
    CHECK(t[3] == 0);
    CHECK(t[4] == q(-1, 30));
    CHECK(t[12] == q(-691, 2730));
    CHECK_THROWS_AS(t[13], std::out_of_range);

    CHECK_THROWS_AS(bernoulli_numbers(11, 10), DomainError);
    CHECK(bernoulli_numbers(10, 10).max_index() == 10);
    CHECK(bernoulli_numbers(0).values() == std::vector<Rational>{Rational(1)});
}

TEST_CASE("bernoulli_numbers match the Akiyama-Tanigawa oracle")
{
    const std::size_t n = 120;
    const auto expected = oracle::bernoulli(n);
    const auto t = bernoulli_numbers(n);
    for (std::size_t k = 0; k <= n; ++k)
        REQUIRE(t[k] == expected[k]);
    for (std::size_t k = 3; k <= n; k += 2)
        REQUIRE(t[k] == 0);
}

TEST_CASE("BernoulliCache grows and shares snapshots")
{
    BernoulliCache cache(50);
    const auto small = cache.up_to(10);
    CHECK(small->max_index() >= 10);
    const auto big = cache.up_to(40);
    CHECK(big->max_index() >= 40);
    CHECK(small->max_index() == 10); // old snapshot untouched
    CHECK((*big)[10] == (*small)[10]);
    CHECK_THROWS_AS(cache.up_to(51), DomainError);

    BernoulliCache shared(200);
    std::vector<std::future<Rational>> readers;
    for (std::size_t i = 0; i < 8; ++i)
        readers.push_back(std::async(std::launch::async, [&shared, i] { return (*shared.up_to(20 * i + 20))[20]; }));
    for (auto& r : readers)
        CHECK(r.get() == q(-174611, 330));
}

TEST_CASE("clausen_denominator")
{
    CHECK(clausen_denominator(2) == 6);
    CHECK(clausen_denominator(12) == 2730);
    CHECK(clausen_denominator(4) == 30);
    CHECK(clausen_primes(12) == std::vector<std::uint64_t>{2, 3, 5, 7, 13});
    CHECK_THROWS_AS(clausen_denominator(0), DomainError);
    CHECK_THROWS_AS(clausen_denominator(7), DomainError);

    const auto t = bernoulli_numbers(200);
    for (std::uint64_t n = 2; n <= 200; n += 2) {
        REQUIRE(clausen_denominator(n) == t[n].get_den());
        Rational shifted = t[n];
        for (auto p : clausen_primes(n))
            shifted += Rational(1, static_cast<unsigned long>(p));
        shifted.canonicalize();
        REQUIRE(shifted.get_den() == 1);
    }
}

TEST_CASE("bernoulli_poly")
{
    CHECK(bernoulli_poly(0) == poly({q(1)}));
    CHECK(bernoulli_poly(1) == poly({q(-1, 2), q(1)}));
    CHECK(bernoulli_poly(3) == poly({q(0), q(1, 2), q(-3, 2), q(1)}));
    CHECK(bernoulli_poly(5) == poly({q(0), q(-1, 6), q(0), q(5, 3), q(-5, 2), q(1)}));
    for (std::size_t n = 0; n <= 40; ++n) {
        const auto f = bernoulli_poly(n);
        REQUIRE(f.degree() == n);
        REQUIRE(f.coefficient(n) == 1);
    }
}

TEST_CASE("Bernoulli polynomials satisfy B_n(x+1) - B_n(x) = n x^(n-1)")
{
    for (std::size_t n = 1; n <= 40; ++n) {
        const auto f = bernoulli_poly(n);
        for (const Rational& x : {q(0), q(1), q(-3), q(2, 7), q(-5, 3)}) {
            Rational power = 1;
            for (std::size_t i = 1; i < n; ++i)
                power *= x;
            REQUIRE(evaluate(f, x + 1) - evaluate(f, x) == Rational(static_cast<unsigned long>(n)) * power);
        }
    }
}

TEST_CASE("bt_poly")
{
    CHECK(bt_poly(1) == poly({q(0), q(1)}));
    CHECK(bt_poly(2) == poly({q(0), q(-1), q(1)}));
    CHECK(bt_poly(4) == poly({q(0), q(0), q(1), q(-2), q(1)}));
    CHECK_THROWS_AS(bt_poly(0), DomainError);
    for (std::size_t n = 1; n <= 60; ++n) {
        const auto f = bt_poly(n);
        REQUIRE(f.coefficient(0) == 0);
        REQUIRE(f.degree() == n);
    }

    const auto short_table = bernoulli_numbers(5);
    CHECK_THROWS_AS(bt_poly(6, short_table), DomainError);
}

TEST_CASE("denominators of B_n(x) - B_n")
{
    CHECK(poly_denominator(bt_poly(3)) == 2);
    CHECK(poly_denominator(bt_poly(5)) == 6);
    CHECK(ord_poly(bt_poly(3), 2) == -1);
    for (auto p : primes_up_to(50))
        CHECK(ord_poly(bt_poly(2), p) == 0);
}

TEST_CASE("bt_np_poly")
{
    const auto f = bt_np_poly(9, 5);
    // k = 4 and k = 8: C(9,4) B_4 x^5 and C(9,8) B_8 x
    CHECK(f == poly({q(0), q(-3, 10), q(0), q(0), q(0), q(-21, 5)}));
    CHECK(ord_poly(f, 5) == -1);

    const auto g = bt_np_poly(9, 2);
    for (std::size_t j = 0; j <= 9; ++j)
        CHECK((g.coefficient(j) != 0) == (j == 1 || j == 3 || j == 5 || j == 7));

    CHECK(bt_np_poly(10, 11).is_zero());
    CHECK(bt_np_poly(7, 13).is_zero());
    CHECK(ord_poly(bt_np_poly(7, 13), 13).is_infinite());
    CHECK_THROWS_AS(bt_np_poly(2, 2), DomainError);
    CHECK_THROWS_AS(bt_np_poly(9, 6), NotPrime);
}

TEST_CASE("partial sum valuation and the min formula")
{
    for (std::size_t n = 3; n <= 120; ++n) {
        const auto full = bt_poly(n);
        for (auto p : primes_up_to(n + 1)) {
            const auto partial = ord_poly(bt_np_poly(n, p), p);
            if (frac_sum_exceeds_one(Natural(static_cast<unsigned long>(n)), p))
                REQUIRE(partial == -1);
            else
                REQUIRE(partial >= Valuation::finite(0));
            const auto predicted = std::min({Valuation::finite(0), ord_p(Rational(static_cast<unsigned long>(n), 2), p), partial});
            REQUIRE(ord_poly(full, p) == predicted);
        }
        if (n % 2 == 1)
            REQUIRE(ord_poly(bt_np_poly(n, 2), 2) == -1);
    }
}

TEST_CASE("denom_formula examples")
{
    CHECK(denom_formula(1).product == 1);
    CHECK(denom_formula(1).primes.empty());
    CHECK(denom_formula(3).product == 2);
    CHECK(denom_formula(5).product == 6);
    CHECK(denom_formula(5).primes == std::vector<std::uint64_t>{2, 3});
    CHECK(denom_formula(9).product == 10);
    CHECK(denom_formula(9).primes == std::vector<std::uint64_t>{2, 5});
    CHECK_THROWS_AS(denom_formula(0), DomainError);
    CHECK(lambda_n(9) == 2);
    CHECK(lambda_n(10) == 3);
    CHECK(prime_bound(9) == 5);
    CHECK(prime_bound(14) == 5);
}

TEST_CASE("denom_formula matches the brute-force denominator")
{
    for (std::uint64_t n = 1; n <= 150; ++n) {
        const auto formula = denom_formula(n);
        REQUIRE(formula.product == poly_denominator(bt_poly(n)));
        REQUIRE(formula.product == denom_formula_unbounded(n).product);
        for (auto p : formula.primes) {
            REQUIRE(digit_sum(Natural(static_cast<unsigned long>(n)), p) >= p);
            REQUIRE(p * lambda_n(n) <= n + 1);
        }
    }
}

TEST_CASE("the prime bound is attained at 2p - 1 and 3p - 1")
{
    for (auto p : primes_up_to(50)) {
        if (p == 2)
            continue;
        const auto odd = denom_formula(2 * p - 1);
        CHECK(mpz_divisible_ui_p(odd.product.get_mpz_t(), p));
        CHECK(odd.primes.back() == p);
        CHECK(prime_bound(2 * p - 1) == p);
        const auto even = denom_formula(3 * p - 1);
        CHECK(mpz_divisible_ui_p(even.product.get_mpz_t(), p));
        CHECK(even.primes.back() == p);
        CHECK(prime_bound(3 * p - 1) == p);
    }
}

TEST_CASE("denom_formula_contains")
{
    for (std::uint64_t n = 1; n <= 400; ++n) {
        const auto f = denom_formula(n);
        for (auto p : primes_up_to(n + 1)) {
            const bool listed = std::find(f.primes.begin(), f.primes.end(), p) != f.primes.end();
            REQUIRE(denom_formula_contains(Natural(static_cast<unsigned long>(n)), p) == listed);
        }
    }
    Natural big;
    mpz_ui_pow_ui(big.get_mpz_t(), 10, 40);
    CHECK(denom_formula_contains(big, 3) == (digit_sum(big, 3) >= 3));
    CHECK_THROWS_AS(denom_formula_contains(Natural(0), 2), DomainError);
}
