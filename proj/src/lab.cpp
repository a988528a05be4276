#include "bernden/lab.hpp"

#include "bernden/arith.hpp"
#include "bernden/bernoulli.hpp"
#include "bernden/errors.hpp"
#include "bernden/primes.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <future>
#include <thread>
#include <tuple>

namespace bernden {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::array<std::pair<TheoremId, std::string_view>, 8> kNames{{
    {TheoremId::MainCorrespondence, "main"},
    {TheoremId::LemmaBound, "bound"},
    {TheoremId::Squarefree, "squarefree"},
    {TheoremId::Binomial, "binom"},
    {TheoremId::FracSumIdentity, "fracsum"},
    {TheoremId::Clausen, "clausen"},
    {TheoremId::Witness, "witness"},
    {TheoremId::PartialSum, "btnp"},
}};

Natural nat(std::uint64_t v)
{
    return Natural(static_cast<unsigned long>(v));
}

std::string bool_str(bool b)
{
    return b ? "true" : "false";
}

void require_range(std::uint64_t n_lo, std::uint64_t n_hi, std::uint64_t min_lo)
{
    if (n_lo < min_lo || n_lo > n_hi)
        throw DomainError("invalid range [" + std::to_string(n_lo) + ", " + std::to_string(n_hi)
                          + "]; need " + std::to_string(min_lo) + " <= n_lo <= n_hi");
}

unsigned effective_jobs(unsigned jobs)
{
    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    return jobs;
}

// Runs check(n, shard) for every n in [n_lo, n_hi]. Worker w takes n = n_lo + w (mod jobs),
// which balances suites whose per-n cost grows with n.
template <typename Check>
VerificationReport sharded(TheoremId id, std::uint64_t n_lo, std::uint64_t n_hi, unsigned jobs, Check check)
{
    const auto start = Clock::now();
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(effective_jobs(jobs), n_hi - n_lo + 1));

    auto run_shard = [&](unsigned w) {
        VerificationReport shard;
        shard.theorem = id;
        for (std::uint64_t n = n_lo + w; n <= n_hi; n += jobs)
            check(n, shard);
        return shard;
    };

    VerificationReport report;
    report.theorem = id;
    if (jobs <= 1) {
        report.merge(run_shard(0));
    } else {
        std::vector<std::future<VerificationReport>> futures;
        for (unsigned w = 0; w < jobs; ++w)
            futures.push_back(std::async(std::launch::async, run_shard, w));
        for (auto& f : futures)
            report.merge(f.get());
    }
    report.range = "n in [" + std::to_string(n_lo) + ", " + std::to_string(n_hi) + "]";
    report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
    return report;
}

void expect(VerificationReport& r, bool ok, std::uint64_t n, std::uint64_t p, std::string lhs, std::string rhs)
{
    ++r.cases_total;
    if (!ok)
        r.failures.push_back(Failure{n, p, std::move(lhs), std::move(rhs)});
}

std::vector<std::uint64_t> primes_at_most(const std::vector<std::uint64_t>& primes, std::uint64_t limit)
{
    return {primes.begin(), std::upper_bound(primes.begin(), primes.end(), limit)};
}

void check_not_power(const Natural& n, std::uint64_t p)
{
    if (is_power_of(n, p))
        throw PreconditionError(n.get_str() + " is a power of " + std::to_string(p)
                                + "; growth of digit sums needs n not a power of p");
}

} // namespace

std::string_view theorem_name(TheoremId id)
{
    for (const auto& [tid, name] : kNames) {
        if (tid == id)
            return name;
    }
    return "unknown";
}

std::optional<TheoremId> theorem_from_name(std::string_view name)
{
    for (const auto& [tid, tname] : kNames) {
        if (tname == name)
            return tid;
    }
    return std::nullopt;
}

const std::vector<TheoremId>& all_theorems()
{
    static const std::vector<TheoremId> ids = [] {
        std::vector<TheoremId> v;
        for (const auto& entry : kNames)
            v.push_back(entry.first);
        return v;
    }();
    return ids;
}

void VerificationReport::merge(const VerificationReport& other)
{
    cases_total += other.cases_total;
    const auto mid = failures.size();
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    auto by_case = [](const Failure& a, const Failure& b) { return std::tie(a.n, a.p) < std::tie(b.n, b.p); };
    std::stable_sort(failures.begin() + static_cast<std::ptrdiff_t>(mid), failures.end(), by_case);
    std::inplace_merge(failures.begin(), failures.begin() + static_cast<std::ptrdiff_t>(mid), failures.end(), by_case);
    elapsed += other.elapsed;
}

VerificationReport verify_main_theorem(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts)
{
    require_range(n_lo, n_hi, 1);
    const auto primes = primes_up_to(opts.prime_ceiling.value_or(n_hi + 1));
    const auto table = BernoulliCache::global().up_to(n_hi);

    return sharded(TheoremId::MainCorrespondence, n_lo, n_hi, opts.jobs, [&](std::uint64_t n, VerificationReport& r) {
        const Natural denom = poly_denominator(bt_poly(n, *table));
        for (auto p : primes) {
            const FracSum fs = frac_sum(nat(n), p);
            const bool divides = mpz_divisible_ui_p(denom.get_mpz_t(), p) != 0;
            expect(r, fs.exceeds_one() == divides, n, p,
                   "frac_sum=" + to_string(fs.value) + " gt_one=" + bool_str(fs.exceeds_one()),
                   "denom=" + denom.get_str() + " divisible=" + bool_str(divides));
        }
    });
}

VerificationReport verify_lemma_bound(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts)
{
    require_range(n_lo, n_hi, 1);
    const auto primes = primes_up_to(opts.prime_ceiling.value_or(2 * n_hi));

    return sharded(TheoremId::LemmaBound, n_lo, n_hi, opts.jobs, [&](std::uint64_t n, VerificationReport& r) {
        for (auto p : primes) {
            if (p * lambda_n(n) <= n + 1)
                continue;
            const FracSum fs = frac_sum(nat(n), p);
            expect(r, !fs.exceeds_one(), n, p, "frac_sum=" + to_string(fs.value),
                   "bound=(n+1)/" + std::to_string(lambda_n(n)));
        }
    });
}

VerificationReport verify_squarefree(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts)
{
    require_range(n_lo, n_hi, 1);
    const auto all_primes = primes_up_to(opts.prime_ceiling.value_or(n_hi + 1));
    const auto table = BernoulliCache::global().up_to(n_hi);

    return sharded(TheoremId::Squarefree, n_lo, n_hi, opts.jobs, [&](std::uint64_t n, VerificationReport& r) {
        const auto poly = bt_poly(n, *table);
        const Natural denom = poly_denominator(poly);
        Natural radical = 1;
        for (auto p : primes_at_most(all_primes, n + 1)) {
            const Valuation v = ord_poly(poly, p);
            expect(r, v == -1 || v == 0, n, p, "ord_p=" + v.to_string(), "expected -1 or 0");
            if (v == -1)
                radical *= static_cast<unsigned long>(p);
        }
        if (!opts.prime_ceiling || *opts.prime_ceiling >= n + 1)
            expect(r, radical == denom, n, 0, "denom=" + denom.get_str(), "product of primes with ord -1 = " + radical.get_str());
    });
}

VerificationReport verify_binomial(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts)
{
    require_range(n_lo, n_hi, 0);
    const auto primes = opts.prime_ceiling ? primes_up_to(*opts.prime_ceiling)
                                           : std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13};

    return sharded(TheoremId::Binomial, n_lo, n_hi, opts.jobs, [&](std::uint64_t n, VerificationReport& r) {
        for (std::uint64_t k = 0; k <= n; ++k) {
            Natural exact;
            mpz_bin_uiui(exact.get_mpz_t(), n, k);
            for (auto p : primes) {
                const Natural legendre = ord_binomial(nat(n), nat(k), p);
                const auto carries = kummer_carries(nat(n), nat(k), p);
                const auto factor_count = ord_p(exact, p).value();
                const auto lucas = lucas_binom_mod(nat(n), nat(k), p);
                const auto residue = mpz_fdiv_ui(exact.get_mpz_t(), p);
                const std::string at = "k=" + std::to_string(k) + " ";
                expect(r, legendre == nat(carries) && carries == static_cast<std::uint64_t>(factor_count), n, p,
                       at + "legendre=" + legendre.get_str() + " carries=" + std::to_string(carries),
                       "exact=" + std::to_string(factor_count));
                expect(r, lucas == residue, n, p, at + "lucas=" + std::to_string(lucas),
                       "C(n,k) mod p=" + std::to_string(residue));
                expect(r, (lucas != 0) == (carries == 0), n, p, at + "lucas=" + std::to_string(lucas),
                       "carries=" + std::to_string(carries));
            }
        }
    });
}

VerificationReport verify_fracsum_identity(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts)
{
    require_range(n_lo, n_hi, 0);
    const auto primes = primes_up_to(opts.prime_ceiling.value_or(100));

    return sharded(TheoremId::FracSumIdentity, n_lo, n_hi, opts.jobs, [&](std::uint64_t n, VerificationReport& r) {
        for (auto p : primes) {
            const Rational closed = frac_sum(nat(n), p).value;
            const Rational digits = frac_sum_from_digits(nat(n), p);
            const Rational direct = frac_sum_direct(nat(n), p);
            expect(r, closed == digits && digits == direct, n, p, "closed=" + to_string(closed),
                   "digits=" + to_string(digits) + " direct=" + to_string(direct));
            const bool integral = fracsum_is_integer(nat(n), p);
            expect(r, integral == (n % (p - 1) == 0), n, p, "integer=" + bool_str(integral),
                   "(p-1)|n=" + bool_str(n % (p - 1) == 0));
        }
    });
}

VerificationReport verify_clausen(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts)
{
    require_range(n_lo, n_hi, 1);
    const auto table = BernoulliCache::global().up_to(n_hi);

    return sharded(TheoremId::Clausen, n_lo, n_hi, opts.jobs, [&](std::uint64_t n, VerificationReport& r) {
        const Rational& b = (*table)[n];
        if (n % 2 == 1) {
            if (n >= 3)
                expect(r, b == 0, n, 0, "B_n=" + to_string(b), "0");
            return;
        }
        Rational shifted = b;
        for (auto p : clausen_primes(n))
            shifted += Rational(1, static_cast<unsigned long>(p));
        shifted.canonicalize();
        expect(r, shifted.get_den() == 1, n, 0, "B_n + sum 1/p=" + to_string(shifted), "integer");
        const Natural predicted = clausen_denominator(n);
        expect(r, predicted == b.get_den(), n, 0, "clausen=" + predicted.get_str(), "denom(B_n)=" + b.get_den().get_str());
    });
}

VerificationReport verify_witness(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts)
{
    require_range(n_lo, n_hi, 1);
    const auto all_primes = primes_up_to(n_hi);

    return sharded(TheoremId::Witness, std::max<std::uint64_t>(n_lo, 2), std::max<std::uint64_t>(n_hi, 2), opts.jobs,
                   [&](std::uint64_t n, VerificationReport& r) {
        if (n > n_hi)
            return;
        for (auto p : primes_at_most(all_primes, n)) {
            const FracSum fs = frac_sum(nat(n), p);
            const auto witness = witness_k(nat(n), p);
            if (fs.exceeds_one()) {
                bool ok = witness.has_value();
                std::string shown = "none";
                if (ok) {
                    const Natural& k = *witness;
                    shown = k.get_str();
                    ok = k > 0 && k < nat(n) && mpz_divisible_ui_p(k.get_mpz_t(), p - 1) != 0
                      && ord_binomial(nat(n), k, p) == 0;
                }
                expect(r, ok, n, p, "frac_sum=" + to_string(fs.value), "witness k=" + shown);
            } else {
                std::uint64_t offending = 0;
                for (std::uint64_t k = p - 1; k < n && offending == 0; k += p - 1) {
                    if (ord_binomial(nat(n), nat(k), p) == 0)
                        offending = k;
                }
                expect(r, offending == 0 && !witness, n, p, "frac_sum=" + to_string(fs.value),
                       "k with p not dividing C(n,k)=" + std::to_string(offending));
            }
        }
    });
}

VerificationReport verify_partial_sums(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts)
{
    require_range(n_lo, n_hi, 1);
    const auto all_primes = primes_up_to(opts.prime_ceiling.value_or(n_hi + 1));
    const auto table = BernoulliCache::global().up_to(n_hi);

    return sharded(TheoremId::PartialSum, std::max<std::uint64_t>(n_lo, 3), std::max<std::uint64_t>(n_hi, 3), opts.jobs,
                   [&](std::uint64_t n, VerificationReport& r) {
        if (n > n_hi)
            return;
        const auto full = bt_poly(n, *table);
        const Rational half_n(static_cast<unsigned long>(n), 2);
        for (auto p : primes_at_most(all_primes, n + 1)) {
            const Valuation partial = ord_poly(bt_np_poly(n, p, *table), p);
            const bool gt_one = frac_sum_exceeds_one(nat(n), p);
            const bool ok = gt_one ? partial == -1 : partial >= Valuation::finite(0);
            expect(r, ok, n, p, "ord_p(partial)=" + partial.to_string(), "frac_sum>1=" + bool_str(gt_one));

            const Valuation whole = ord_poly(full, p);
            const Valuation predicted = std::min({Valuation::finite(0), ord_p(half_n, p), partial});
            expect(r, whole == predicted, n, p, "ord_p(BT_n)=" + whole.to_string(),
                   "min(0, ord_p(n/2), ord_p(partial))=" + predicted.to_string());
        }
    });
}

VerificationReport run_suite(TheoremId id, std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts)
{
    switch (id) {
    case TheoremId::MainCorrespondence: return verify_main_theorem(n_lo, n_hi, opts);
    case TheoremId::LemmaBound: return verify_lemma_bound(n_lo, n_hi, opts);
    case TheoremId::Squarefree: return verify_squarefree(n_lo, n_hi, opts);
    case TheoremId::Binomial: return verify_binomial(n_lo, n_hi, opts);
    case TheoremId::FracSumIdentity: return verify_fracsum_identity(n_lo, n_hi, opts);
    case TheoremId::Clausen: return verify_clausen(n_lo, n_hi, opts);
    case TheoremId::Witness: return verify_witness(n_lo, n_hi, opts);
    case TheoremId::PartialSum: return verify_partial_sums(n_lo, n_hi, opts);
    }
    throw DomainError("unknown suite");
}

PowerScanResult power_scan(const Natural& n, const std::vector<std::uint64_t>& prime_set, std::uint64_t k_cap)
{
    if (n <= 1)
        throw DomainError("power scan requires n > 1");
    for (auto p : prime_set) {
        require_prime(p);
        check_not_power(n, p);
    }

    PowerScanResult result;
    result.n = n;
    result.prime_set = prime_set;
    std::sort(result.prime_set.begin(), result.prime_set.end());
    result.prime_set.erase(std::unique(result.prime_set.begin(), result.prime_set.end()), result.prime_set.end());
    result.k_cap = k_cap;

    // Last k <= k_cap at which the sum was still <= 1.
    std::map<std::uint64_t, std::uint64_t> last_below;
    Natural power = 1;
    for (std::uint64_t k = 1; k <= k_cap; ++k) {
        power *= n;
        for (auto p : result.prime_set) {
            if (frac_sum_exceeds_one(power, p))
                result.per_prime_min_k.try_emplace(p, k);
            else
                last_below[p] = k;
        }
    }

    for (auto p : result.prime_set) {
        const auto below = last_below.find(p);
        const std::uint64_t stable = below == last_below.end() ? 1 : below->second + 1;
        if (stable > k_cap) {
            result.capped = true;
            continue;
        }
        result.per_prime_stable_k[p] = stable;
    }
    for (const auto& [p, k] : result.per_prime_min_k)
        result.first_exceedance_max = std::max(result.first_exceedance_max, k);
    for (const auto& [p, k] : result.per_prime_stable_k)
        result.M = std::max(result.M, k);
    return result;
}

GrowthSeries digit_sum_growth(const Natural& n, std::uint64_t p, std::uint64_t k_cap)
{
    if (n <= 1)
        throw DomainError("digit sum growth requires n > 1");
    require_prime(p);
    check_not_power(n, p);

    GrowthSeries series;
    series.n = n;
    series.p = p;
    Natural power = 1;
    std::uint64_t best = 0;
    for (std::uint64_t k = 1; k <= k_cap; ++k) {
        power *= n;
        const auto s = digit_sum(power, p);
        if (k > 1 && s > best)
            ++series.record_count;
        best = std::max(best, s);
        series.points.push_back({k, s, best});
    }
    if (!series.points.empty())
        series.running_max_increased = series.points.back().running_max > series.points.front().digit_sum;
    return series;
}

double stewart_bound(const Natural& n, double c)
{
    if (n <= 25)
        throw DomainError("Stewart's estimate applies to n > 25");
    if (!(c > 0))
        throw DomainError("constant c must be positive");
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, n.get_mpz_t());
    const double log_n = std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
    const double loglog = std::log(log_n);
    return loglog / (std::log(loglog) + c) - 1.0;
}

} // namespace bernden
