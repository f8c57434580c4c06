#ifndef DEDESUM_MODGROUP_HPP_INCLUDED
#define DEDESUM_MODGROUP_HPP_INCLUDED

// Integer matrices in Gamma_0(N): determinant one, N | c.

#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <ostream>
#include <string>

#include "dedesum/arith.hpp"

namespace dedesum {

class GammaMatrix {
public:
    using Entry = mpz_class;

    /// Validated constructor; throws naming the failed condition.
    GammaMatrix(Entry a, Entry b, Entry c, Entry d, Int level)
        : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)), level_(level)
    {
        if (level_ < 1)
            throw std::invalid_argument("level must be positive");
        const Entry det = a_ * d_ - b_ * c_;
        if (det != 1)
            throw std::invalid_argument("not in Gamma_0(" + std::to_string(level_) + "): determinant "
                                        + det.get_str() + " != 1");
        if (mpz_divisible_ui_p(c_.get_mpz_t(), static_cast<unsigned long>(level_)) == 0)
            throw std::invalid_argument("not in Gamma_0(" + std::to_string(level_) + "): level "
                                        + std::to_string(level_) + " does not divide c = "
                                        + c_.get_str());
    }

    static GammaMatrix identity(Int level) { return {1, 0, 0, 1, level}; }
    static GammaMatrix translation(Int n, Int level) { return {1, n, 0, 1, level}; }

    const Entry& a() const noexcept { return a_; }
    const Entry& b() const noexcept { return b_; }
    const Entry& c() const noexcept { return c_; }
    const Entry& d() const noexcept { return d_; }
    Int level() const noexcept { return level_; }

    GammaMatrix inverse() const { return {d_, -b_, -c_, a_, level_}; }
    GammaMatrix operator-() const { return {-a_, -b_, -c_, -d_, level_}; }

    friend GammaMatrix operator*(const GammaMatrix& x, const GammaMatrix& y)
    {
        if (x.level_ != y.level_)
            throw std::invalid_argument("matrix product: level mismatch (" + std::to_string(x.level_)
                                        + " vs " + std::to_string(y.level_) + ")");
        return {x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_, x.c_ * y.a_ + x.d_ * y.c_,
                x.c_ * y.b_ + x.d_ * y.d_, x.level_};
    }

    friend bool operator==(const GammaMatrix& x, const GammaMatrix& y)
    {
        return x.level_ == y.level_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_ && x.d_ == y.d_;
    }

    friend std::ostream& operator<<(std::ostream& os, const GammaMatrix& x) { return os << x.to_string(); }

    std::string to_string() const
    {
        return "(" + a_.get_str() + "," + b_.get_str() + ";" + c_.get_str() + "," + d_.get_str()
               + ")";
    }

private:
    Entry a_, b_, c_, d_;
    Int level_;
};

inline GammaMatrix make_gamma(GammaMatrix::Entry a, GammaMatrix::Entry b, GammaMatrix::Entry c,
                              GammaMatrix::Entry d, Int level)
{
    return {std::move(a), std::move(b), std::move(c), std::move(d), level};
}

/// Canonical lift of a bottom row (c, d): 0 <= a < |c| for c != 0, (1, 0; 0, 1)-shaped for c = 0.
inline GammaMatrix complete_bottom_row(const mpz_class& c, const mpz_class& d, Int level)
{
    if (level < 1)
        throw std::invalid_argument("level must be positive");
    if (mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(level)) == 0)
        throw std::invalid_argument("level " + std::to_string(level) + " does not divide c = "
                                    + c.get_str());
    mpz_class g, s, t;
    // s*c + t*d = g
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), c.get_mpz_t(), d.get_mpz_t());
    if (g != 1)
        throw std::invalid_argument("bottom row (" + c.get_str() + "," + d.get_str()
                                    + ") is not coprime: gcd = " + g.get_str());
    if (c == 0) {
        // d = +-1; (d, 0; 0, d) has determinant 1.
        return {d, 0, 0, d, level};
    }
    // a*d - b*c = 1 with a = t, b = -s; shift a by multiples of c into [0, |c|).
    const mpz_class abs_c = abs(c);
    mpz_class a;
    mpz_fdiv_r(a.get_mpz_t(), t.get_mpz_t(), abs_c.get_mpz_t());
    // a*d - 1 is divisible by c
    mpz_class b = (a * d - 1) / c;
    return {std::move(a), std::move(b), c, d, level};
}

inline GammaMatrix complete_bottom_row(Int c, Int d, Int level)
{
    return complete_bottom_row(mpz_class(c), mpz_class(d), level);
}

/// gamma' with omega gamma = gamma' omega for the Fricke matrix omega = (0, -1; N, 0):
/// (a, b; cN, d) -> (d, -c; -bN, a). An involution on Gamma_0(N).
inline GammaMatrix gamma_prime(const GammaMatrix& g)
{
    const Int n = g.level();
    const mpz_class c_tilde = g.c() / n;
    return {g.d(), -c_tilde, -g.b() * n, g.a(), n};
}

namespace detail {

// Uniform draw in [0, bound) with rejection; independent of the standard library's
// distribution implementations so that seeds reproduce across toolchains.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound)
{
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

} // namespace detail

/// Deterministic sample: c a nonzero multiple of N with |c| <= c_bound (random sign),
/// d uniform among [1, |c|] coprime to c, then the canonical completion.
inline GammaMatrix random_gamma0(Int level, Int c_bound, std::uint64_t seed)
{
    if (level < 1)
        throw std::invalid_argument("level must be positive");
    if (c_bound < level)
        throw std::invalid_argument("random_gamma0: c_bound must be at least the level");
    std::mt19937_64 rng(seed);
    const Int multiples = c_bound / level;
    const Int abs_c = level * (1 + static_cast<Int>(detail::uniform_below(rng, static_cast<std::uint64_t>(multiples))));
    const Int c = (rng() & 1) ? -abs_c : abs_c;
    Int d;
    do {
        d = 1 + static_cast<Int>(detail::uniform_below(rng, static_cast<std::uint64_t>(abs_c)));
    } while (gcd(d, abs_c) != 1);
    return complete_bottom_row(c, d, level);
}

} // namespace dedesum

#endif // DEDESUM_MODGROUP_HPP_INCLUDED
