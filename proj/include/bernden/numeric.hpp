#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace bernden {

/// Arbitrary-precision integer. Operations documented as taking a natural reject negatives.
using Natural = mpz_class;

/// Exact rational, always kept in canonical (reduced, positive denominator) form.
using Rational = mpq_class;

/// Builds a canonical rational num/den.
Rational make_rational(const Natural& num, const Natural& den);

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Natural& n);

/// Parses the format produced by to_string(Rational).
Rational parse_rational(const std::string& text);

/// p-adic valuation: an integer, or +infinity for zero.
class Valuation {
public:
    static Valuation infinity() { return Valuation{}; }
    static Valuation finite(std::int64_t v) { return Valuation{v}; }

    bool is_infinite() const { return !value_.has_value(); }
    /// Precondition: !is_infinite().
    std::int64_t value() const { return *value_; }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b)
    {
        if (a.is_infinite() && b.is_infinite())
            return std::strong_ordering::equal;
        if (a.is_infinite())
            return std::strong_ordering::greater;
        if (b.is_infinite())
            return std::strong_ordering::less;
        return *a.value_ <=> *b.value_;
    }
    friend bool operator==(const Valuation& a, std::int64_t v) { return a.value_ == v; }

    std::string to_string() const;

private:
    Valuation() = default;
    explicit Valuation(std::int64_t v) : value_(v) {}

    std::optional<std::int64_t> value_;
};

std::ostream& operator<<(std::ostream& os, const Valuation& v);

/// Exponent of p in an integer; +infinity for zero.
Valuation ord_p(const Natural& n, std::uint64_t p);

/// ord_p(numerator) - ord_p(denominator); +infinity for zero.
Valuation ord_p(const Rational& q, std::uint64_t p);

/// Throws DomainError when n is negative.
void require_natural(const Natural& n, const char* what);

} // namespace bernden
