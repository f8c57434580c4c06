#ifndef DEDESUM_DEDEKIND_HPP_INCLUDED
#define DEDESUM_DEDEKIND_HPP_INCLUDED

// Generalized Dedekind sums S_{chi1,chi2}(gamma) on Gamma_0(q1 q2) and the exact
// structural laws they satisfy (cocycle, reciprocity under gamma -> gamma', Fricke value).
//
// For gamma = (a, b; c, d) with c >= 1,
//   S(gamma) = sum_{j mod c} sum_{n mod q1} conj(chi2)(j) conj(chi1)(n) B1(j/c) B1(n/q1 + a j/c).
// Conventions outside that range: S = 0 when c = 0, S(gamma) = S(-gamma) when c < 0.

#include <gmpxx.h>

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dedesum/bernoulli.hpp"
#include "dedesum/characters.hpp"
#include "dedesum/cyclotomic.hpp"
#include "dedesum/modgroup.hpp"

namespace dedesum {

/// Largest |c| accepted by the exact kernel (cost is O(|c| q1)).
inline constexpr Int max_dedekind_c = Int{1} << 32;

/// n mod m for a big integer n.
inline Int residue(const mpz_class& n, Int m)
{
    return static_cast<Int>(mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(m)));
}

inline Cyclotomic psi_eval(const CharacterPair& pair, const GammaMatrix& g)
{
    return pair.psi(residue(g.d(), pair.level()));
}

namespace detail {

inline BigInt to_bigint(__int128 v)
{
    const bool negative = v < 0;
    unsigned __int128 u = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    BigInt hi(static_cast<unsigned long>(u >> 64));
    BigInt lo(static_cast<unsigned long>(u & 0xffffffffffffffffULL));
    BigInt r = (hi << 64) + lo;
    return negative ? BigInt(-r) : r;
}

inline void check_level(const CharacterPair& pair, const GammaMatrix& g)
{
    if (g.level() != pair.level())
        throw std::invalid_argument("level mismatch: matrix in Gamma_0(" + std::to_string(g.level())
                                    + "), pair has level " + std::to_string(pair.level()));
}

// The double sum for c >= 1. Every term is conj(chi2)(j) conj(chi1)(n) times
// (2j - c)(2r - c) / (4c^2) with r = (n c/q1 + a j) mod c, so the sum is accumulated
// as integers per power of zeta_m and divided once at the end.
inline Cyclotomic dedekind_kernel(const CharacterPair& pair, Int a, Int c)
{
    const auto& chi1 = pair.chi1();
    const auto& chi2 = pair.chi2();
    const Int q1 = pair.q1();
    const Int m = pair.value_order();
    const Int s1 = m / chi1.order();
    const Int s2 = m / chi2.order();
    const Int c_over_q1 = c / q1;

    struct InnerTerm {
        Int shift;    // n c / q1 mod c
        Int exponent; // power of zeta_m for conj(chi1)(n)
    };
    std::vector<InnerTerm> inner;
    for (Int n = 1; n < q1; ++n)
        if (const auto k = chi1.exponent_at(n))
            inner.push_back({n * c_over_q1 % c, mod(-*k * s1, m)});

    std::vector<__int128> acc(static_cast<std::size_t>(m), 0);
    std::vector<__int128> row(static_cast<std::size_t>(m), 0);
    const Int a_mod = mod(a, c);
    Int aj = 0;
    for (Int j = 1; j < c; ++j) {
        aj += a_mod;
        if (aj >= c)
            aj -= c;
        const auto k2 = chi2.exponent_at(j);
        if (!k2)
            continue;
        const Int e2 = mod(-*k2 * s2, m);
        // Inner sum over n for this j, grouped by power of zeta_m.
        for (const auto& t : inner) {
            Int r = aj + t.shift;
            if (r >= c)
                r -= c;
            if (r == 0)
                continue;
            Int e = e2 + t.exponent;
            if (e >= m)
                e -= m;
            row[static_cast<std::size_t>(e)] += 2 * r - c;
        }
        const Int bj = 2 * j - c;
        for (std::size_t e = 0; e < row.size(); ++e) {
            acc[e] += row[e] * bj;
            row[e] = 0;
        }
    }
    std::vector<BigInt> numerators;
    numerators.reserve(acc.size());
    for (const auto v : acc)
        numerators.push_back(to_bigint(v));
#ifdef DEDESUM_MUTATE_B1
    const BigInt denom = BigInt(c) * BigInt(c); // test-only fault: both B1 factors doubled
#else
    const BigInt denom = BigInt(4) * BigInt(c) * BigInt(c);
#endif
    return Cyclotomic::from_integer_powers(m, std::move(numerators), denom);
}

} // namespace detail

struct DedekindSumValue {
    std::reference_wrapper<const CharacterPair> pair;
    GammaMatrix matrix;
    Cyclotomic value;

    std::complex<double> approx() const { return value.embed(); }
};

/// Exact S_{chi1,chi2}(g).
inline Cyclotomic dedekind_sum_value(const CharacterPair& pair, const GammaMatrix& g)
{
    detail::check_level(pair, g);
    const int sign = sgn(g.c());
    if (sign == 0)
        return Cyclotomic{};
    const mpz_class abs_c = abs(g.c());
    if (abs_c > max_dedekind_c)
        throw std::domain_error("dedekind_sum: |c| = " + abs_c.get_str() + " is beyond the exact kernel's range");
    const Int c = abs_c.get_si();
    const Int a = sign > 0 ? residue(g.a(), c) : residue(-g.a(), c);
    return detail::dedekind_kernel(pair, a, c);
}

inline DedekindSumValue dedekind_sum(const CharacterPair& pair, const GammaMatrix& g)
{
    return {std::cref(pair), g, dedekind_sum_value(pair, g)};
}

/// S(g1 g2) - S(g1) - psi(g1) S(g2); zero for a crossed homomorphism.
inline Cyclotomic cocycle_defect(const CharacterPair& pair, const GammaMatrix& g1, const GammaMatrix& g2)
{
    detail::check_level(pair, g1);
    detail::check_level(pair, g2);
    return dedekind_sum_value(pair, g1 * g2) - dedekind_sum_value(pair, g1)
           - psi_eval(pair, g1) * dedekind_sum_value(pair, g2);
}

/// S_{chi1,chi2}(omega) in closed form: 0 for an even pair, B_{1,chi1}(0) B_{1,chi2}(0) for an odd pair.
inline Cyclotomic fricke_value(const CharacterPair& pair)
{
    if (pair.both_even())
        return Cyclotomic{};
    return b1_chi(pair.chi1(), 0) * b1_chi(pair.chi2(), 0);
}

/// Reciprocity defect, zero for every g:
///   even pair: S_{chi1,chi2}(g) - S_{chi2,chi1}(g')
///   odd pair:  S_{chi1,chi2}(g) + S_{chi2,chi1}(g') - (1 - psi(g)) S_{chi1,chi2}(omega)
inline Cyclotomic reciprocity_defect(const CharacterPair& pair, const GammaMatrix& g)
{
    detail::check_level(pair, g);
    const CharacterPair swapped = pair.swapped();
    const Cyclotomic lhs = dedekind_sum_value(pair, g);
    const Cyclotomic rhs = dedekind_sum_value(swapped, gamma_prime(g));
    if (pair.both_even())
        return lhs - rhs;
    return lhs + rhs - (Cyclotomic(1) - psi_eval(pair, g)) * fricke_value(pair);
}

struct EqualityReport {
    bool equal;
    Cyclotomic lhs;
    Cyclotomic rhs;
};

/// Evaluates S on the canonical lift of (c, d) and on the lift shifted by (a, b) -> (a + k c, b + k d).
inline EqualityReport bottom_row_dependence_check(const CharacterPair& pair, const mpz_class& c,
                                                  const mpz_class& d, Int shift = 1)
{
    const GammaMatrix g = complete_bottom_row(c, d, pair.level());
    const GammaMatrix h(g.a() + shift * g.c(), g.b() + shift * g.d(), g.c(), g.d(), g.level());
    EqualityReport r{false, dedekind_sum_value(pair, g), dedekind_sum_value(pair, h)};
    r.equal = r.lhs == r.rhs;
    return r;
}

inline EqualityReport bottom_row_dependence_check(const CharacterPair& pair, Int c, Int d, Int shift = 1)
{
    return bottom_row_dependence_check(pair, mpz_class(c), mpz_class(d), shift);
}

} // namespace dedesum

#endif // DEDESUM_DEDEKIND_HPP_INCLUDED
