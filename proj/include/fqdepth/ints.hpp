#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fqdepth {

/// Exact counter type for element/polynomial counts. 128 bits is plenty for
/// anything this library can enumerate or evaluate in closed form; all
/// arithmetic on it goes through the checked helpers below.
using BigCount = unsigned __int128;

std::string to_string(BigCount v);

BigCount checked_add(BigCount a, BigCount b);
BigCount checked_mul(BigCount a, BigCount b);
BigCount checked_pow(BigCount base, std::uint64_t exp);

bool is_prime(std::uint64_t n);

/// q = p^k with p prime, or nullopt when q is not a prime power (or q < 2).
struct PrimePower {
    std::uint64_t p;
    std::uint32_t k;
};
std::optional<PrimePower> prime_power_decompose(std::uint64_t q);

/// Largest e with p^e | n (n >= 1).
std::uint32_t valuation(std::uint64_t n, std::uint64_t p);

/// Multiplicative order of a modulo m; requires gcd(a, m) = 1, m >= 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Distinct prime divisors, ascending.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

} // namespace fqdepth
