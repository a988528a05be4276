#pragma once

#include "bernden/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace bernden {

/// Dense univariate polynomial over Q. Coefficient j multiplies x^j.
/// Trailing zero coefficients are never stored, so the zero polynomial has
/// no coefficients at all.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coefficients);

    static RationalPolynomial monomial(const Rational& c, std::size_t power);

    bool is_zero() const { return coeffs_.empty(); }
    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;

    /// Zero beyond the degree.
    Rational coefficient(std::size_t power) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    RationalPolynomial& operator+=(const RationalPolynomial& other);
    RationalPolynomial& operator-=(const RationalPolynomial& other);
    friend RationalPolynomial operator+(RationalPolynomial a, const RationalPolynomial& b) { return a += b; }
    friend RationalPolynomial operator-(RationalPolynomial a, const RationalPolynomial& b) { return a -= b; }
    friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

    /// Human-readable, highest power first: "x^3 - 3/2*x^2 + 1/2*x".
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> coeffs_;
};

/// lcm of the reduced coefficient denominators; 1 for the zero polynomial.
Natural poly_denominator(const RationalPolynomial& f);

/// Minimum coefficient valuation; +infinity for the zero polynomial.
Valuation ord_poly(const RationalPolynomial& f, std::uint64_t p);

} // namespace bernden
