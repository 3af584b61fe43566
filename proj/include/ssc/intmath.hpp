#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace ssc {

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b); // throws on u64 overflow

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m);

/// a^e with overflow check; throws std::overflow_error past 2^63-1.
std::uint64_t ipow_checked(std::uint64_t a, unsigned e);

bool is_prime_u64(std::uint64_t n);

/// Prime factorization, sorted by prime. Miller-Rabin + Pollard rho.
std::vector<std::pair<std::uint64_t, int>> factor_u64(std::uint64_t n);

/// Divisors of n in increasing order.
std::vector<std::uint64_t> divisors_u64(std::uint64_t n);

/// Decompose q = p^m with p prime; throws if q is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

} // namespace ssc
