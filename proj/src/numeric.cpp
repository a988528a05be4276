#include "bernden/numeric.hpp"

#include "bernden/errors.hpp"
#include "bernden/primes.hpp"

namespace bernden {

Rational make_rational(const Natural& num, const Natural& den)
{
    if (den == 0)
        throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Natural& n)
{
    return n.get_str();
}

std::string to_string(const Rational& q)
{
    if (q.get_den() == 1)
        return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text)
{
    Rational q;
    if (q.set_str(text, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string Valuation::to_string() const
{
    return is_infinite() ? std::string("inf") : std::to_string(*value_);
}

std::ostream& operator<<(std::ostream& os, const Valuation& v)
{
    return os << v.to_string();
}

Valuation ord_p(const Natural& n, std::uint64_t p)
{
    require_prime(p);
    if (n == 0)
        return Valuation::infinity();
    Natural rest = abs(n);
    Natural prime(static_cast<unsigned long>(p));
    auto count = mpz_remove(rest.get_mpz_t(), rest.get_mpz_t(), prime.get_mpz_t());
    return Valuation::finite(static_cast<std::int64_t>(count));
}

Valuation ord_p(const Rational& q, std::uint64_t p)
{
    if (q == 0) {
        require_prime(p);
        return Valuation::infinity();
    }
    return Valuation::finite(ord_p(q.get_num(), p).value() - ord_p(q.get_den(), p).value());
}

void require_natural(const Natural& n, const char* what)
{
    if (sgn(n) < 0)
        throw DomainError(std::string(what) + " must be non-negative");
}

} // namespace bernden
