#ifndef DEDESUM_CHARACTERS_HPP_INCLUDED
#define DEDESUM_CHARACTERS_HPP_INCLUDED

// Dirichlet characters with exact root-of-unity values, and Gauss sums.
//
// Generator convention for (Z/q)^*: one factor per prime power of q, primes
// ascending, each generator lifted by CRT to be 1 modulo the other prime powers.
//   p^k, p odd   : least primitive root mod p^k, order phi(p^k)
//   2            : nothing
//   4            : 3, order 2
//   2^k, k >= 3  : 2^k - 1 (order 2), then 5 (order 2^(k-2))
// A character is the exponent tuple (e_i) with chi(g_i) = zeta_{o_i}^{e_i}, and
// is labelled "q:e1,e2,...".

#include <charconv>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "dedesum/arith.hpp"
#include "dedesum/cyclotomic.hpp"

namespace dedesum {

/// Cap on character moduli; discrete logs are table lookups.
inline constexpr Int max_character_modulus = 10000;

struct UnitGenerator {
    Int generator;
    Int order;

    friend bool operator==(const UnitGenerator&, const UnitGenerator&) = default;
};

namespace detail {

inline Int least_primitive_root(Int p, int k, Int pk)
{
    const Int group_order = pk / p * (p - 1);
    const auto primes = factorize(group_order);
    for (Int g = 2; g < pk; ++g) {
        if (g % p == 0)
            continue;
        bool generates = true;
        for (const auto& r : primes)
            if (pow_mod(g, group_order / r.prime, pk) == 1) {
                generates = false;
                break;
            }
        if (generates)
            return g;
    }
    (void)k;
    throw std::logic_error("no primitive root found");
}

// x = residue mod pk, x = 1 mod (q / pk).
inline Int crt_lift(Int residue, Int pk, Int q)
{
    const Int rest = q / pk;
    if (rest == 1)
        return mod(residue, q);
    // x = 1 + rest * t with 1 + rest*t = residue (mod pk)
    const Int t = mod((residue - 1) * inverse_mod(rest, pk), pk);
    return mod(1 + rest * t, q);
}

inline void check_modulus(Int q)
{
    if (q < 1)
        throw std::invalid_argument("character modulus must be positive");
    if (q > max_character_modulus)
        throw std::domain_error("character modulus exceeds " + std::to_string(max_character_modulus));
}

} // namespace detail

/// Generators of (Z/q)^* with their orders; the orders multiply to phi(q).
inline std::vector<UnitGenerator> unit_group_generators(Int q)
{
    detail::check_modulus(q);
    std::vector<UnitGenerator> gens;
    for (const auto& pp : factorize(q)) {
        if (pp.prime == 2) {
            if (pp.exponent == 2) {
                gens.push_back({detail::crt_lift(3, 4, q), 2});
            } else if (pp.exponent >= 3) {
                gens.push_back({detail::crt_lift(pp.value - 1, pp.value, q), 2});
                gens.push_back({detail::crt_lift(5, pp.value, q), pp.value / 4});
            }
            continue;
        }
        const Int g = detail::least_primitive_root(pp.prime, pp.exponent, pp.value);
        gens.push_back({detail::crt_lift(g, pp.value, q), pp.value / pp.prime * (pp.prime - 1)});
    }
    return gens;
}

class DirichletCharacter {
public:
    DirichletCharacter(Int modulus, std::vector<Int> exponents)
        : modulus_(modulus), basis_(unit_group_generators(modulus)), exponents_(std::move(exponents))
    {
        if (exponents_.size() != basis_.size())
            throw std::invalid_argument("character mod " + std::to_string(modulus_) + " needs "
                                        + std::to_string(basis_.size()) + " exponents");
        order_ = 1;
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            if (exponents_[i] < 0 || exponents_[i] >= basis_[i].order)
                throw std::invalid_argument("character exponent out of range");
            order_ = lcm(order_, basis_[i].order / gcd(basis_[i].order, exponents_[i]));
        }
        build_log_table();
        parity_ = modulus_ <= 2 || log_[static_cast<std::size_t>(modulus_ - 1)] == 0 ? 1 : -1;
    }

    /// Parses "q:e1,e2,...".
    static DirichletCharacter from_label(std::string_view label)
    {
        const auto colon = label.find(':');
        if (colon == std::string_view::npos)
            throw std::invalid_argument("character label must look like q:e1,e2,... (got '"
                                        + std::string(label) + "')");
        const Int q = parse_int(label.substr(0, colon), label);
        std::vector<Int> exps;
        std::string_view rest = label.substr(colon + 1);
        while (!rest.empty()) {
            const auto comma = rest.find(',');
            exps.push_back(parse_int(rest.substr(0, comma), label));
            if (comma == std::string_view::npos)
                break;
            rest = rest.substr(comma + 1);
        }
        return DirichletCharacter(q, std::move(exps));
    }

    Int modulus() const noexcept { return modulus_; }
    Int order() const noexcept { return order_; }
    int parity() const noexcept { return parity_; }
    const std::vector<Int>& exponents() const noexcept { return exponents_; }
    const std::vector<UnitGenerator>& generator_basis() const noexcept { return basis_; }
    bool is_even() const noexcept { return parity_ == 1; }
    bool is_principal() const noexcept { return order_ == 1; }

    std::string label() const
    {
        std::string s = std::to_string(modulus_) + ":";
        for (std::size_t i = 0; i < exponents_.size(); ++i)
            s += (i ? "," : "") + std::to_string(exponents_[i]);
        return s;
    }

    /// chi(n) = zeta_order^k; nullopt when gcd(n, q) > 1.
    std::optional<Int> exponent_at(Int n) const
    {
        const Int k = log_[static_cast<std::size_t>(mod(n, modulus_))];
        if (k < 0)
            return std::nullopt;
        return k;
    }

    Cyclotomic operator()(Int n) const
    {
        const auto k = exponent_at(n);
        if (!k)
            return Cyclotomic{};
        return root_of_unity(order_, *k);
    }

    /// Smallest f | q such that chi is trivial on units congruent to 1 mod f.
    Int conductor() const
    {
        for (Int f : divisors(modulus_)) {
            bool trivial = true;
            for (Int n = 1; n < modulus_ && trivial; n += f)
                if (log_[static_cast<std::size_t>(n)] > 0)
                    trivial = false;
            if (trivial)
                return f;
        }
        return modulus_;
    }

    bool is_primitive() const { return conductor() == modulus_; }

    DirichletCharacter conj() const
    {
        std::vector<Int> e(exponents_.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = mod(-exponents_[i], basis_[i].order);
        return DirichletCharacter(modulus_, std::move(e));
    }

    friend bool operator==(const DirichletCharacter& x, const DirichletCharacter& y)
    {
        return x.modulus_ == y.modulus_ && x.exponents_ == y.exponents_;
    }

private:
    static Int parse_int(std::string_view s, std::string_view whole)
    {
        Int v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw std::invalid_argument("malformed character label '" + std::string(whole) + "'");
        return v;
    }

    void build_log_table()
    {
        log_.assign(static_cast<std::size_t>(modulus_), -1);
        // Walk every unit as a product of generator powers, mixed-radix style.
        std::vector<Int> t(basis_.size(), 0);
        Int value = 1 % modulus_;
        Int exponent = 0;
        std::vector<Int> step(basis_.size());
        for (std::size_t i = 0; i < basis_.size(); ++i) {
            // chi(g_i) = exp(2 pi i e_i / o_i); e_i / o_i in lowest terms has denominator dividing order_
            const Int g = gcd(basis_[i].order, exponents_[i]);
            step[i] = exponents_[i] / g * (order_ / (basis_[i].order / g)) % order_;
        }
        while (true) {
            log_[static_cast<std::size_t>(value)] = exponent;
            std::size_t i = 0;
            for (; i < basis_.size(); ++i) {
                if (++t[i] < basis_[i].order) {
                    value = value * basis_[i].generator % modulus_;
                    exponent = (exponent + step[i]) % order_;
                    break;
                }
                // wrap digit i back to 0: multiply by g_i^{-(o_i - 1)} = g_i (g_i^{o_i} = 1)
                t[i] = 0;
                value = value * basis_[i].generator % modulus_;
                exponent = (exponent + step[i]) % order_;
            }
            if (i == basis_.size())
                break;
        }
        if (modulus_ == 1)
            log_[0] = 0;
    }

    Int modulus_;
    std::vector<UnitGenerator> basis_;
    std::vector<Int> exponents_;
    Int order_ = 1;
    int parity_ = 1;
    std::vector<Int> log_;
};

/// All phi(q) characters mod q in lexicographic exponent order; optionally only primitive ones.
inline std::vector<DirichletCharacter> enumerate_characters(Int q, bool primitive_only)
{
    const auto basis = unit_group_generators(q);
    std::vector<DirichletCharacter> out;
    std::vector<Int> e(basis.size(), 0);
    while (true) {
        DirichletCharacter chi(q, e);
        if (!primitive_only || chi.is_primitive())
            out.push_back(std::move(chi));
        std::size_t i = basis.size();
        while (i-- > 0) {
            if (++e[i] < basis[i].order)
                break;
            e[i] = 0;
        }
        if (i == static_cast<std::size_t>(-1))
            break;
    }
    return out;
}

/// tau(chi) = sum_{n mod q} chi(n) zeta_q^n, exact in Q(zeta_lcm(order, q)).
inline Cyclotomic gauss_sum(const DirichletCharacter& chi)
{
    const Int q = chi.modulus();
    const Int L = lcm(chi.order(), q);
    std::vector<BigInt> by_power(static_cast<std::size_t>(L));
    for (Int n = 0; n < q; ++n)
        if (const auto k = chi.exponent_at(n))
            by_power[static_cast<std::size_t>(mod(*k * (L / chi.order()) + n * (L / q), L))] += 1;
    return Cyclotomic::from_integer_powers(L, std::move(by_power), 1);
}

/// sum_{j mod c} conj(chi)(j) zeta_c^(a l j). Vanishes when q | c, gcd(a, c) = 1 and l != 0 mod c/q
/// for chi of conductor q.
inline Cyclotomic twisted_character_sum(const DirichletCharacter& chi, Int a, Int c, Int l)
{
    if (c < 1)
        throw std::invalid_argument("twisted_character_sum: c must be positive");
    const Int o = chi.order();
    const Int L = lcm(o, c);
    const Int step = mod(mod(a, c) * mod(l, c), c);
    std::vector<BigInt> by_power(static_cast<std::size_t>(L));
    for (Int j = 0; j < c; ++j)
        if (const auto k = chi.exponent_at(j))
            by_power[static_cast<std::size_t>(mod(-*k * (L / o) + (step * j % c) * (L / c), L))] += 1;
    return Cyclotomic::from_integer_powers(L, std::move(by_power), 1);
}

/// Admissible pair of primitive characters (chi1 mod q1, chi2 mod q2), q1, q2 > 1,
/// chi1 chi2(-1) = 1. Level N = q1 q2; central character psi = chi1 * conj(chi2) mod N.
class CharacterPair {
public:
    CharacterPair(DirichletCharacter chi1, DirichletCharacter chi2)
        : chi1_(std::move(chi1)), chi2_(std::move(chi2))
    {
        if (chi1_.modulus() <= 1 || chi2_.modulus() <= 1)
            throw std::invalid_argument("character pair requires conductors q1, q2 > 1");
        if (!chi1_.is_primitive())
            throw std::invalid_argument("chi1 " + chi1_.label() + " is not primitive");
        if (!chi2_.is_primitive())
            throw std::invalid_argument("chi2 " + chi2_.label() + " is not primitive");
        if (chi1_.parity() * chi2_.parity() != 1)
            throw std::invalid_argument("character pair violates the hypothesis chi1*chi2(-1) = 1 ("
                                        + chi1_.label() + ", " + chi2_.label() + ")");
        level_ = chi1_.modulus() * chi2_.modulus();
        value_order_ = lcm(chi1_.order(), chi2_.order());
    }

    static CharacterPair from_labels(std::string_view l1, std::string_view l2)
    {
        return CharacterPair(DirichletCharacter::from_label(l1), DirichletCharacter::from_label(l2));
    }

    const DirichletCharacter& chi1() const noexcept { return chi1_; }
    const DirichletCharacter& chi2() const noexcept { return chi2_; }
    Int q1() const noexcept { return chi1_.modulus(); }
    Int q2() const noexcept { return chi2_.modulus(); }
    Int level() const noexcept { return level_; }
    Int value_order() const noexcept { return value_order_; }
    bool both_even() const noexcept { return chi1_.is_even(); }

    /// psi(d) = zeta_{value_order}^k, nullopt when gcd(d, N) > 1.
    std::optional<Int> psi_exponent(Int d) const
    {
        const auto k1 = chi1_.exponent_at(d);
        const auto k2 = chi2_.exponent_at(d);
        if (!k1 || !k2)
            return std::nullopt;
        return mod(*k1 * (value_order_ / chi1_.order()) - *k2 * (value_order_ / chi2_.order()),
                   value_order_);
    }

    Cyclotomic psi(Int d) const
    {
        const auto k = psi_exponent(d);
        return k ? root_of_unity(value_order_, *k) : Cyclotomic{};
    }

    CharacterPair swapped() const { return CharacterPair(chi2_, chi1_); }
    CharacterPair conjugated() const { return CharacterPair(chi1_.conj(), chi2_.conj()); }

    std::string label() const { return "(" + chi1_.label() + ", " + chi2_.label() + ")"; }

private:
    DirichletCharacter chi1_;
    DirichletCharacter chi2_;
    Int level_ = 0;
    Int value_order_ = 1;
};

inline Cyclotomic psi_eval(const CharacterPair& pair, Int d) { return pair.psi(d); }

/// Every admissible pair with q1 q2 <= max_level, ordered by (q1, q2, chi1, chi2).
inline std::vector<CharacterPair> admissible_pairs(Int max_level)
{
    std::vector<CharacterPair> out;
    for (Int q1 = 2; q1 * 2 <= max_level; ++q1) {
        const auto first = enumerate_characters(q1, true);
        if (first.empty())
            continue;
        for (Int q2 = 2; q1 * q2 <= max_level; ++q2) {
            const auto second = enumerate_characters(q2, true);
            for (const auto& c1 : first)
                for (const auto& c2 : second)
                    if (c1.parity() == c2.parity())
                        out.emplace_back(c1, c2);
        }
    }
    return out;
}

} // namespace dedesum

#endif // DEDESUM_CHARACTERS_HPP_INCLUDED
