#pragma once

// Base-p digit arithmetic: expansions, factorial and binomial valuations,
// and the fractional-part sum <n|p> = sum_{v>=1} {n / p^v}.
//
// Every function taking a prime validates it (InvalidBase for p < 2,
// NotPrime for composites) and every natural argument must be >= 0.

#include "bernden/numeric.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace bernden {

/// Little-endian base-p digits of a natural number. Empty for zero.
class DigitExpansion {
public:
    DigitExpansion(const Natural& n, std::uint64_t base);

    std::uint64_t base() const { return base_; }
    const std::vector<std::uint64_t>& digits() const { return digits_; }

    /// Number of stored digits; l + 1 where p^l <= n < p^(l+1), and 0 for n = 0.
    std::size_t length() const { return digits_.size(); }
    std::uint64_t digit_sum() const;

    /// sum digits[j] * base^j
    Natural value() const;

private:
    std::uint64_t base_;
    std::vector<std::uint64_t> digits_;
};

DigitExpansion digit_expansion(const Natural& n, std::uint64_t p);

/// s_p(n)
std::uint64_t digit_sum(const Natural& n, std::uint64_t p);

/// ord_p(n!). Evaluates Legendre's sum and (n - s_p(n)) / (p - 1) and checks they agree.
Natural ord_factorial(const Natural& n, std::uint64_t p);

/// <n|p>, always equal to s_p(n) / (p - 1).
struct FracSum {
    Rational value;

    bool exceeds_one() const { return value > 1; }
    bool is_integer() const { return value.get_den() == 1; }
};

/// n / (p - 1) - ord_p(n!). In debug builds also checks the other two forms.
FracSum frac_sum(const Natural& n, std::uint64_t p);

/// s_p(n) / (p - 1)
Rational frac_sum_from_digits(const Natural& n, std::uint64_t p);

/// n / (p^l (p - 1)) + sum_{v=1}^{l} {n / p^v} with p^l <= n < p^(l+1).
Rational frac_sum_direct(const Natural& n, std::uint64_t p);

/// True iff <n|p> is a natural number.
bool fracsum_is_integer(const Natural& n, std::uint64_t p);

/// <n|p> > 1, decided exactly as s_p(n) >= p.
bool frac_sum_exceeds_one(const Natural& n, std::uint64_t p);

/// ord_p C(n, k) from factorial valuations. Throws DomainError for k > n.
Natural ord_binomial(const Natural& n, const Natural& k, std::uint64_t p);

/// Carries produced when adding k and n - k in base p. Throws DomainError for k > n.
std::uint64_t kummer_carries(const Natural& n, const Natural& k, std::uint64_t p);

/// C(n, k) mod p as a product of digitwise binomials. Throws DomainError for k > n.
std::uint64_t lucas_binom_mod(const Natural& n, const Natural& k, std::uint64_t p);

/// A k with 0 < k < n, (p - 1) | k and p not dividing C(n, k), or nothing
/// when <n|p> <= 1. Digits of k are taken greedily from the least significant
/// end, k_j = min(n_j, budget), with budget starting at p - 1.
std::optional<Natural> witness_k(const Natural& n, std::uint64_t p);

/// True iff n = p^r for some r >= 0 (n >= 1).
bool is_power_of(const Natural& n, std::uint64_t p);

} // namespace bernden
