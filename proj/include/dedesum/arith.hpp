#ifndef DEDESUM_ARITH_HPP_INCLUDED
#define DEDESUM_ARITH_HPP_INCLUDED

// Small-integer number theory shared by the exact and numeric modules.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

namespace dedesum {

using Int = std::int64_t;

/// Non-negative residue of n modulo m (m > 0).
constexpr Int mod(Int n, Int m) noexcept
{
    const Int r = n % m;
    return r < 0 ? r + m : r;
}

constexpr Int gcd(Int a, Int b) noexcept { return std::gcd(a, b); }
constexpr Int lcm(Int a, Int b) noexcept { return std::lcm(a, b); }

struct PrimePower {
    Int prime;
    int exponent;
    Int value;
};

/// Trial-division factorization, primes ascending.
inline std::vector<PrimePower> factorize(Int n)
{
    if (n < 1)
        throw std::invalid_argument("factorize: n must be positive");
    std::vector<PrimePower> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        PrimePower pp{p, 0, 1};
        while (n % p == 0) {
            n /= p;
            ++pp.exponent;
            pp.value *= p;
        }
        out.push_back(pp);
    }
    if (n > 1)
        out.push_back({n, 1, n});
    return out;
}

inline Int euler_phi(Int n)
{
    Int result = n;
    for (const auto& pp : factorize(n))
        result = result / pp.prime * (pp.prime - 1);
    return result;
}

/// Positive divisors in increasing order.
inline std::vector<Int> divisors(Int n)
{
    std::vector<Int> small, large;
    for (Int d = 1; d * d <= n; ++d) {
        if (n % d != 0)
            continue;
        small.push_back(d);
        if (d != n / d)
            large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

inline Int pow_mod(Int base, Int exp, Int m)
{
    Int result = 1 % m;
    base = mod(base, m);
    while (exp > 0) {
        if (exp & 1)
            result = static_cast<Int>(static_cast<__int128>(result) * base % m);
        base = static_cast<Int>(static_cast<__int128>(base) * base % m);
        exp >>= 1;
    }
    return result;
}

/// Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b) >= 0.
struct Bezout {
    Int g, x, y;
};

inline Bezout extended_gcd(Int a, Int b)
{
    Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const Int q = old_r / r;
        old_r = std::exchange(r, old_r - q * r);
        old_s = std::exchange(s, old_s - q * s);
        old_t = std::exchange(t, old_t - q * t);
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

/// Inverse of a modulo m; throws if gcd(a, m) != 1.
inline Int inverse_mod(Int a, Int m)
{
    const auto [g, x, y] = extended_gcd(mod(a, m), m);
    (void)y;
    if (g != 1)
        throw std::invalid_argument("inverse_mod: argument not a unit");
    return mod(x, m);
}

} // namespace dedesum

#endif // DEDESUM_ARITH_HPP_INCLUDED
