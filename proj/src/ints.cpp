#include "fqdepth/ints.hpp"

#include "fqdepth/errors.hpp"

#include <algorithm>
#include <numeric>

namespace fqdepth {

std::string to_string(BigCount v)
{
    if (v == 0)
        return "0";
    std::string s;
    while (v > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

BigCount checked_add(BigCount a, BigCount b)
{
    BigCount r = a + b;
    if (r < a)
        throw OverflowError("count addition overflow");
    return r;
}

BigCount checked_mul(BigCount a, BigCount b)
{
    if (a == 0 || b == 0)
        return 0;
    BigCount r = a * b;
    if (r / a != b)
        throw OverflowError("count multiplication overflow");
    return r;
}

BigCount checked_pow(BigCount base, std::uint64_t exp)
{
    BigCount r = 1;
    while (exp > 0) {
        if (exp & 1)
            r = checked_mul(r, base);
        exp >>= 1;
        if (exp > 0)
            base = checked_mul(base, base);
    }
    return r;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    if (n % 2 == 0)
        return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0)
            return false;
    return true;
}

std::optional<PrimePower> prime_power_decompose(std::uint64_t q)
{
    if (q < 2)
        return std::nullopt;
    std::uint64_t p = q;
    for (std::uint64_t d = 2; d * d <= q; ++d) {
        if (q % d == 0) {
            p = d;
            break;
        }
    }
    std::uint32_t k = 0;
    std::uint64_t rest = q;
    while (rest % p == 0) {
        rest /= p;
        ++k;
    }
    if (rest != 1)
        return std::nullopt;
    return PrimePower{p, k};
}

std::uint32_t valuation(std::uint64_t n, std::uint64_t p)
{
    std::uint32_t e = 0;
    while (n % p == 0) {
        n /= p;
        ++e;
    }
    return e;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m)
{
    if (m == 1)
        return 1;
    a %= m;
    if (std::gcd(a, m) != 1)
        throw std::invalid_argument("multiplicative_order: arguments not coprime");
    std::uint64_t acc = a % m;
    std::uint64_t ord = 1;
    while (acc != 1) {
        acc = (acc * a) % m;
        ++ord;
    }
    return ord;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0)
                n /= d;
        }
    }
    if (n > 1)
        out.push_back(n);
    return out;
}

} // namespace fqdepth
