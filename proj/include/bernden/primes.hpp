#pragma once

#include <cstdint>
#include <vector>

namespace bernden {

/// Deterministic primality test, exact for the whole 64-bit range.
bool is_prime(std::uint64_t n);

/// Throws InvalidBase for p < 2 and NotPrime for composite p.
void require_prime(std::uint64_t p);

/// Sorted primes in [2, limit] by the sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

} // namespace bernden
