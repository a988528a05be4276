#include "bernden/arith.hpp"
#include "bernden/bernoulli.hpp"
#include "bernden/errors.hpp"
#include "bernden/lab.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace bernden;

namespace {

Natural nat(std::uint64_t v)
{
    return Natural(static_cast<unsigned long>(v));
}

std::vector<std::uint64_t> sums(const GrowthSeries& s)
{
    std::vector<std::uint64_t> out;
    for (const auto& pt : s.points)
        out.push_back(pt.digit_sum);
    return out;
}

} // namespace

TEST_CASE("suite names")
{
    for (auto id : all_theorems())
        CHECK(theorem_from_name(theorem_name(id)) == id);
    CHECK_FALSE(theorem_from_name("bogus").has_value());
    CHECK(theorem_name(TheoremId::MainCorrespondence) == "main");
}

TEST_CASE("main correspondence on small cases")
{
    CHECK(frac_sum(nat(9), 5).value == Rational(5, 4));
    CHECK(mpz_divisible_ui_p(poly_denominator(bt_poly(9)).get_mpz_t(), 5));
    CHECK_FALSE(frac_sum(nat(2), 3).exceeds_one());
    CHECK(poly_denominator(bt_poly(2)) == 1);

    const auto r = verify_main_theorem(1, 50);
    CHECK(r.passed());
    CHECK(r.cases_failed() == 0);
    // 50 values of n times the 15 primes up to 51
    CHECK(r.cases_total == 50 * 15);
    CHECK(r.range == "n in [1, 50]");

    const auto single = verify_main_theorem(1, 1);
    CHECK(single.passed());
    CHECK(single.cases_total == 1); // n = 1, p = 2
}

TEST_CASE("verifiers reject bad ranges")
{
    CHECK_THROWS_AS(verify_main_theorem(0, 5), DomainError);
    CHECK_THROWS_AS(verify_main_theorem(6, 5), DomainError);
    CHECK_THROWS_AS(verify_squarefree(0, 0), DomainError);
    CHECK_NOTHROW(verify_binomial(0, 3));
}

TEST_CASE("lemma bound")
{
    // n = 4, p = 3 > 5/3: <4|3> = s_3(4)/2 = 1
    CHECK(frac_sum(nat(4), 3).value == 1);
    // n = 4, p = 2 with p^2 = n: <4|2> = 1/(p-1) = 1
    CHECK(frac_sum(nat(4), 2).value == 1);
    const auto r = verify_lemma_bound(1, 120);
    CHECK(r.passed());
    CHECK(r.cases_total > 0);
}

TEST_CASE("squarefree, clausen, witness, partial sums and binomial suites pass")
{
    CHECK(poly_denominator(bt_poly(3)) == 2);
    CHECK(poly_denominator(bt_poly(1)) == 1);
    for (auto id : all_theorems()) {
        const auto r = run_suite(id, 1, 60);
        CHECK_MESSAGE(r.passed(), theorem_name(id));
        CHECK(r.cases_total > 0);
        CHECK(r.theorem == id);
    }
}

TEST_CASE("reports are independent of the number of jobs")
{
    for (auto id : all_theorems()) {
        const auto one = run_suite(id, 1, 40, VerifyOptions{1, std::nullopt});
        const auto many = run_suite(id, 1, 40, VerifyOptions{5, std::nullopt});
        CHECK(one.cases_total == many.cases_total);
        CHECK(one.failures == many.failures);
        CHECK(one.range == many.range);
    }
}

TEST_CASE("report merge keeps every failure in case order")
{
    VerificationReport a, b;
    a.cases_total = 3;
    a.failures = {{1, 2, "x", "y"}, {5, 3, "x", "y"}};
    b.cases_total = 4;
    b.failures = {{2, 7, "x", "y"}, {5, 2, "x", "y"}};
    a.merge(b);
    CHECK(a.cases_total == 7);
    CHECK(a.cases_failed() == 4);
    CHECK_FALSE(a.passed());
    std::vector<std::pair<std::uint64_t, std::uint64_t>> order;
    for (const auto& f : a.failures)
        order.emplace_back(f.n, f.p);
    CHECK(order == std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 2}, {2, 7}, {5, 2}, {5, 3}});
}

TEST_CASE("power_scan")
{
    const auto r = power_scan(nat(10), {2, 3, 5, 7}, 64);
    CHECK_FALSE(r.capped);
    CHECK(r.per_prime_min_k == std::map<std::uint64_t, std::uint64_t>{{2, 1}, {3, 2}, {5, 6}, {7, 3}});
    CHECK(r.per_prime_stable_k == std::map<std::uint64_t, std::uint64_t>{{2, 1}, {3, 2}, {5, 9}, {7, 3}});
    CHECK(r.first_exceedance_max == 6);
    CHECK(r.M == 9);

    const auto seven = power_scan(nat(7), {5}, 16);
    CHECK(seven.per_prime_min_k.at(5) == 2);
    CHECK(seven.M == 2);
    CHECK_FALSE(seven.capped);

    CHECK_THROWS_AS(power_scan(nat(8), {2}, 64), PreconditionError);
    CHECK_THROWS_AS(power_scan(nat(9), {2, 3}), PreconditionError);
    CHECK_THROWS_AS(power_scan(nat(1), {2}), DomainError);
    CHECK_THROWS_AS(power_scan(nat(10), {4}), NotPrime);
}

TEST_CASE("power_scan capping")
{
    const auto never = power_scan(nat(10), {5}, 5);
    CHECK(never.capped);
    CHECK(never.per_prime_min_k.empty());
    CHECK(never.per_prime_stable_k.empty());

    // Exceeds at k = 6, drops back at k = 7 and 8.
    const auto unstable = power_scan(nat(10), {2, 5}, 8);
    CHECK(unstable.capped);
    CHECK(unstable.per_prime_min_k.at(5) == 6);
    CHECK_FALSE(unstable.per_prime_stable_k.count(5));
    CHECK(unstable.per_prime_stable_k.at(2) == 1);
}

TEST_CASE("power_scan results are consistent with digit sums")
{
    for (std::uint64_t n : {6, 10, 12, 15, 21, 30, 77}) {
        std::vector<std::uint64_t> primes;
        for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
            if (!is_power_of(nat(n), p))
                primes.push_back(p);
        }
        const auto r = power_scan(nat(n), primes, 48);
        for (const auto& [p, k] : r.per_prime_min_k) {
            Natural power;
            mpz_ui_pow_ui(power.get_mpz_t(), n, k);
            REQUIRE(digit_sum(power, p) >= p);
            for (std::uint64_t j = 1; j < k; ++j) {
                mpz_ui_pow_ui(power.get_mpz_t(), n, j);
                REQUIRE(digit_sum(power, p) < p);
            }
        }
        for (const auto& [p, k] : r.per_prime_stable_k) {
            REQUIRE(k >= r.per_prime_min_k.at(p));
            for (std::uint64_t j = k; j <= 48; ++j) {
                Natural power;
                mpz_ui_pow_ui(power.get_mpz_t(), n, j);
                REQUIRE(denom_formula_contains(power, p));
            }
        }
    }
}

TEST_CASE("digit_sum_growth")
{
    const auto ten = digit_sum_growth(nat(10), 3, 20);
    CHECK(sums(ten) == std::vector<std::uint64_t>{2, 4, 4, 8, 10, 14, 12, 20, 14, 24, 18, 24, 30, 30, 28, 36, 44, 40, 42, 42});
    CHECK(ten.running_max_increased);
    CHECK(ten.points.back().running_max == 44);

    CHECK(sums(digit_sum_growth(nat(2), 3, 10)) == std::vector<std::uint64_t>{2, 2, 4, 4, 4, 4, 6, 4, 8, 8});
    CHECK(sums(digit_sum_growth(nat(6), 2, 5)) == std::vector<std::uint64_t>{2, 2, 4, 3, 6});

    CHECK_THROWS_AS(digit_sum_growth(nat(27), 3, 5), PreconditionError);
    CHECK_THROWS_AS(digit_sum_growth(nat(1), 3, 5), DomainError);
}

TEST_CASE("digit_sum_growth ignores the p-power part of n")
{
    // n = m * p^r with p not dividing m gives s_p(n^k) = s_p(m^k)
    struct Case { std::uint64_t n, m, p; };
    for (auto c : {Case{12, 3, 2}, Case{20, 5, 2}, Case{18, 2, 3}, Case{50, 2, 5}, Case{98, 2, 7}}) {
        CHECK(sums(digit_sum_growth(nat(c.n), c.p, 30)) == sums(digit_sum_growth(nat(c.m), c.p, 30)));
    }
}

TEST_CASE("stewart_bound")
{
    CHECK(std::isfinite(stewart_bound(nat(26), 1.0)));
    CHECK_THROWS_AS(stewart_bound(nat(25), 1.0), DomainError);
    CHECK_THROWS_AS(stewart_bound(nat(100), 0.0), DomainError);
    CHECK(stewart_bound(nat(1000000), 1.0) > stewart_bound(nat(100), 1.0));
    double previous = stewart_bound(nat(26), 2.5);
    for (std::uint64_t n = 27; n < 5000; n += 7) {
        const double b = stewart_bound(nat(n), 2.5);
        REQUIRE(b > previous);
        previous = b;
    }
    Natural huge;
    mpz_ui_pow_ui(huge.get_mpz_t(), 10, 5000);
    CHECK(std::isfinite(stewart_bound(huge, 1.0)));
    CHECK(stewart_bound(huge, 1.0) > stewart_bound(nat(1000000), 1.0));
}
