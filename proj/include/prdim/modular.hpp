#pragma once

#include <cstdint>
#include <vector>

namespace prdim {

bool is_prime(std::uint64_t n);

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

// Inverse of a modulo the prime p. a must be nonzero mod p.
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

std::vector<std::uint64_t> prime_factors(std::uint64_t n);

// If n = p^k returns k, otherwise -1. n = 1 gives 0.
int p_power_exponent(std::uint64_t n, std::uint64_t p);

// Smallest prime dividing n, or 0 for n <= 1.
std::uint64_t smallest_prime_factor(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

std::uint64_t isqrt(std::uint64_t n);

}  // namespace prdim
