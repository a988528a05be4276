#include "bernden/primes.hpp"

#include "bernden/errors.hpp"

#include <array>
#include <string>

namespace bernden {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m)
{
    return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m)
{
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1)
            result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

// Miller-Rabin witness loop for one base.
bool strong_probable_prime(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s)
{
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int r = 1; r < s; ++r) {
        x = mul_mod(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    constexpr std::array<std::uint64_t, 12> small{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (auto q : small) {
        if (n == q)
            return true;
        if (n % q == 0)
            return false;
    }
    if (n < 41 * 41)
        return true;

    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // The first twelve primes as bases are deterministic below 3.3e24.
    for (auto a : small) {
        if (!strong_probable_prime(n, a, d, s))
            return false;
    }
    return true;
}

void require_prime(std::uint64_t p)
{
    if (p < 2)
        throw InvalidBase("base must be at least 2, got " + std::to_string(p));
    if (!is_prime(p))
        throw NotPrime(std::to_string(p) + " is not prime");
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit)
{
    std::vector<std::uint64_t> out;
    if (limit < 2)
        return out;
    std::vector<bool> composite(limit + 1, false);
    for (std::uint64_t i = 2; i * i <= limit; ++i) {
        if (composite[i])
            continue;
        for (std::uint64_t j = i * i; j <= limit; j += i)
            composite[j] = true;
    }
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (!composite[i])
            out.push_back(i);
    }
    return out;
}

} // namespace bernden
