#ifndef DEDESUM_BERNOULLI_HPP_INCLUDED
#define DEDESUM_BERNOULLI_HPP_INCLUDED

#include <stdexcept>
#include <string>
#include <vector>

#include "dedesum/characters.hpp"
#include "dedesum/cyclotomic.hpp"

namespace dedesum {

/// Sawtooth: x - floor(x) - 1/2 off the integers, 0 on them.
inline Rational b1(const Rational& x)
{
    if (x.get_den() == 1)
        return 0;
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
#ifdef DEDESUM_MUTATE_B1
    return 2 * (x - fl) - 1; // test-only fault: B1 doubled
#else
    return x - fl - Rational(1, 2);
#endif
}

/// Twisted Bernoulli function B_{1,chi}(x) = sum_{n=1}^{q-1} conj(chi)(n) B1((x + n)/q).
inline Cyclotomic b1_chi(const DirichletCharacter& chi, const Rational& x)
{
    if (!chi.is_primitive())
        throw std::invalid_argument("b1_chi: character " + chi.label() + " is not primitive");
    const Int q = chi.modulus();
    const Int m = chi.order();
    std::vector<Rational> by_power(static_cast<std::size_t>(m));
    for (Int n = 1; n < q; ++n) {
        const auto k = chi.exponent_at(n);
        if (!k)
            continue;
        Rational arg = (x + n) / q;
        arg.canonicalize();
        by_power[static_cast<std::size_t>(mod(-*k, m))] += b1(arg);
    }
    return Cyclotomic::from_powers(m, std::move(by_power));
}

/// Cusp limit of theta_chi(a/c + iu, l) as u -> 0+:
///   -sum_{j mod c} conj(chi)(j) B1(j/c) zeta_c^(a l j).
/// Requires q | c, gcd(a, c) = 1 and l != 0 mod c/q (q the conductor of chi).
inline Cyclotomic theta_limit(const DirichletCharacter& chi, Int a, Int c, Int l)
{
    if (c < 1)
        throw std::invalid_argument("theta_limit: c must be positive");
    const Int q = chi.conductor();
    if (q != chi.modulus())
        throw std::invalid_argument("theta_limit: character must be primitive (conductor = q)");
    if (c % q != 0)
        throw std::invalid_argument("theta_limit: q must divide c");
    if (gcd(a, c) != 1)
        throw std::invalid_argument("theta_limit: gcd(a, c) must be 1");
    if (mod(l, c / q) == 0)
        throw std::invalid_argument("theta_limit: l must be nonzero mod c/q");
    const Int o = chi.order();
    const Int L = lcm(o, c);
    // -B1(j/c) = (c - 2j) / (2c) for 0 < j < c
    std::vector<BigInt> by_power(static_cast<std::size_t>(L));
    const Int alc = mod(mod(a, c) * mod(l, c), c);
    for (Int j = 1; j < c; ++j) {
        const auto k = chi.exponent_at(j);
        if (!k)
            continue;
        const Int e = mod(-*k * (L / o) + mod(alc * j, c) * (L / c), L);
        by_power[static_cast<std::size_t>(e)] += c - 2 * j;
    }
    return Cyclotomic::from_integer_powers(L, std::move(by_power), BigInt(2 * c));
}

} // namespace dedesum

#endif // DEDESUM_BERNOULLI_HPP_INCLUDED
