#pragma once

// Exhaustive checks of the correspondence between fractional-part sums and
// denominators of B_n(x) - B_n, plus the supporting lemmas, over finite
// ranges of n. Each verifier returns a report listing every failing case.

#include "bernden/numeric.hpp"

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bernden {

enum class TheoremId {
    MainCorrespondence, // <n|p> > 1  <=>  p | denom(B_n(x) - B_n)
    LemmaBound,         // p > (n+1)/lambda_n  =>  <n|p> <= 1
    Squarefree,         // ord_p(B_n(x) - B_n) in {-1, 0}
    Binomial,           // Legendre = Kummer = exact valuation; Lucas residues
    FracSumIdentity,    // three forms of <n|p> agree; integrality iff (p-1) | n
    Clausen,            // von Staudt-Clausen
    Witness,            // constructive k with p not dividing C(n, k)
    PartialSum,         // valuation of the (p-1) | k partial sum, and the min formula
};

std::string_view theorem_name(TheoremId id);
std::optional<TheoremId> theorem_from_name(std::string_view name);
/// Every suite, in the order `verify all` runs them.
const std::vector<TheoremId>& all_theorems();

struct Failure {
    std::uint64_t n = 0;
    std::uint64_t p = 0;
    std::string lhs;
    std::string rhs;

    friend bool operator==(const Failure&, const Failure&) = default;
};

struct VerificationReport {
    TheoremId theorem = TheoremId::MainCorrespondence;
    std::string range;
    std::uint64_t cases_total = 0;
    std::vector<Failure> failures;
    std::chrono::milliseconds elapsed{0};

    std::uint64_t cases_failed() const { return failures.size(); }
    bool passed() const { return failures.empty(); }

    /// Combines shard results. Failures are kept sorted by (n, p).
    void merge(const VerificationReport& other);
};

struct VerifyOptions {
    /// Worker threads; 0 means std::thread::hardware_concurrency().
    unsigned jobs = 1;
    /// Overrides the default prime ceiling of a suite.
    std::optional<std::uint64_t> prime_ceiling;
};

/// For each n in [n_lo, n_hi] and prime p <= ceiling (default n_hi + 1):
/// <n|p> > 1 iff p divides the brute-force denominator. Primes above n need
/// no loop: <n|p> = n/(p-1) <= 1 and the denominator only has primes <= n.
VerificationReport verify_main_theorem(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts = {});

/// Every prime p with p > (n+1)/lambda_n, up to 2 * n_hi (or the ceiling), has <n|p> <= 1.
VerificationReport verify_lemma_bound(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts = {});

/// ord_p(B_n(x) - B_n) in {-1, 0} for p <= n + 1, and the denominator is the
/// product of the primes with valuation -1.
VerificationReport verify_squarefree(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts = {});

/// For 0 <= k <= n and p in {2, 3, 5, 7, 11, 13} (or primes up to the ceiling).
VerificationReport verify_binomial(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts = {});

/// Primes up to 100 unless a ceiling is given.
VerificationReport verify_fracsum_identity(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts = {});

VerificationReport verify_clausen(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts = {});

/// Both directions of the binomial characterisation of <n|p> <= 1, for primes p <= n.
VerificationReport verify_witness(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts = {});

/// For n >= 3 and p <= n + 1: the partial sum has valuation -1 exactly when
/// <n|p> > 1, and ord_p(B_n(x) - B_n) = min(0, ord_p(n/2), that valuation).
VerificationReport verify_partial_sums(std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts = {});

VerificationReport run_suite(TheoremId id, std::uint64_t n_lo, std::uint64_t n_hi, const VerifyOptions& opts = {});

inline constexpr std::uint64_t kDefaultKCap = 64;

/// Smallest powers of n whose fractional-part sums exceed 1, per prime.
///
/// min_k is the first k with s_p(n^k) >= p. The sum can drop back to <= 1
/// afterwards (s_5(10^6) = 8 but s_5(10^7) = 4), so stable_k records the
/// smallest m with s_p(n^k) >= p for every k in [m, k_cap]. M is the maximum
/// of the stable thresholds: p divides denom(B_{n^k}(x) - B_{n^k}) for every
/// p in the set and M <= k <= k_cap. Nothing past k_cap is claimed.
struct PowerScanResult {
    Natural n;
    std::vector<std::uint64_t> prime_set;
    std::map<std::uint64_t, std::uint64_t> per_prime_min_k;
    std::map<std::uint64_t, std::uint64_t> per_prime_stable_k;
    /// Max of per_prime_min_k.
    std::uint64_t first_exceedance_max = 0;
    /// Max of per_prime_stable_k.
    std::uint64_t M = 0;
    std::uint64_t k_cap = kDefaultKCap;
    /// Some prime has no stable threshold within k_cap; maps then hold partial data.
    bool capped = false;
};

/// Throws DomainError for n <= 1 and PreconditionError when n is a power of a listed prime.
PowerScanResult power_scan(const Natural& n, const std::vector<std::uint64_t>& prime_set,
                           std::uint64_t k_cap = kDefaultKCap);

struct GrowthPoint {
    std::uint64_t k = 0;
    std::uint64_t digit_sum = 0;
    std::uint64_t running_max = 0;
};

/// s_p(n^k) for k = 1..k_cap. Empirical only; no finite sample decides the limit.
struct GrowthSeries {
    Natural n;
    std::uint64_t p = 0;
    std::vector<GrowthPoint> points;
    /// Number of k > 1 at which the running maximum strictly increased.
    std::uint64_t record_count = 0;
    /// The running maximum at k_cap exceeds s_p(n).
    bool running_max_increased = false;
};

/// Throws DomainError for n <= 1 and PreconditionError when n is a power of p.
GrowthSeries digit_sum_growth(const Natural& n, std::uint64_t p, std::uint64_t k_cap);

/// log log n / (log log log n + c) - 1, the only floating-point quantity here.
/// Throws DomainError for n <= 25 or c <= 0.
double stewart_bound(const Natural& n, double c);

} // namespace bernden
