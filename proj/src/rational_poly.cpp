#include "bernden/rational_poly.hpp"

#include "bernden/primes.hpp"

#include <algorithm>
#include <sstream>

namespace bernden {

RationalPolynomial::RationalPolynomial(std::vector<Rational> coefficients)
    : coeffs_(std::move(coefficients))
{
    for (auto& c : coeffs_)
        c.canonicalize();
    trim();
}

RationalPolynomial RationalPolynomial::monomial(const Rational& c, std::size_t power)
{
    std::vector<Rational> coeffs(power + 1);
    coeffs[power] = c;
    return RationalPolynomial(std::move(coeffs));
}

std::optional<std::size_t> RationalPolynomial::degree() const
{
    if (coeffs_.empty())
        return std::nullopt;
    return coeffs_.size() - 1;
}

Rational RationalPolynomial::coefficient(std::size_t power) const
{
    return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
        coeffs_[j] += other.coeffs_[j];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
        coeffs_[j] -= other.coeffs_[j];
    trim();
    return *this;
}

void RationalPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::string RationalPolynomial::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = coeffs_.size(); j-- > 0;) {
        const Rational& c = coeffs_[j];
        if (c == 0)
            continue;
        Rational mag = abs(c);
        if (first)
            os << (sgn(c) < 0 ? "-" : "");
        else
            os << (sgn(c) < 0 ? " - " : " + ");
        first = false;
        if (j == 0) {
            os << bernden::to_string(mag);
            continue;
        }
        if (mag != 1)
            os << bernden::to_string(mag) << "*";
        os << "x";
        if (j > 1)
            os << "^" << j;
    }
    return os.str();
}

Natural poly_denominator(const RationalPolynomial& f)
{
    Natural d = 1;
    for (const auto& c : f.coefficients())
        d = lcm(d, c.get_den());
    return d;
}

Valuation ord_poly(const RationalPolynomial& f, std::uint64_t p)
{
    require_prime(p);
    Valuation best = Valuation::infinity();
    for (const auto& c : f.coefficients()) {
        if (c != 0)
            best = std::min(best, ord_p(c, p));
    }
    return best;
}

} // namespace bernden
