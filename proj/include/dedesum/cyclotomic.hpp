#ifndef DEDESUM_CYCLOTOMIC_HPP_INCLUDED
#define DEDESUM_CYCLOTOMIC_HPP_INCLUDED

// Exact arithmetic in Q and in the cyclotomic fields Q(zeta_m).
//
// An element of Q(zeta_m) is stored in the power basis 1, zeta, ..., zeta^(phi(m)-1),
// i.e. as a polynomial reduced modulo the m-th cyclotomic polynomial. Reduction is
// eager, so two elements of the same order are equal iff their coefficient vectors
// are equal. Operands of different orders are coerced into Q(zeta_L), L = lcm.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <span>
#include <stdexcept>
#include <ostream>
#include <string>
#include <vector>

#include "dedesum/arith.hpp"

namespace dedesum {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Hard cap on the order of any cyclotomic field we work in.
inline constexpr Int max_cyclotomic_order = 10000;

namespace detail {

inline void check_order(Int m)
{
    if (m < 1)
        throw std::invalid_argument("cyclotomic order must be positive");
    if (m > max_cyclotomic_order)
        throw std::domain_error("cyclotomic order " + std::to_string(m) + " exceeds the cap of "
                                + std::to_string(max_cyclotomic_order));
}

// Exact division of a by the monic b (coefficients low to high).
inline std::vector<Int> divide_monic(std::vector<Int> a, const std::vector<Int>& b)
{
    const std::size_t db = b.size() - 1;
    std::vector<Int> q(a.size() - db, 0);
    for (std::size_t k = a.size(); k-- > db;) {
        const Int t = a[k];
        q[k - db] = t;
        if (t == 0)
            continue;
        for (std::size_t i = 0; i <= db; ++i)
            a[k - db + i] -= t * b[i];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0)
            throw std::logic_error("divide_monic: non-zero remainder");
    return q;
}

inline const std::vector<Int>& cached_cyclotomic_polynomial(Int m);

inline std::vector<Int> compute_cyclotomic_polynomial(Int m)
{
    // x^m - 1 divided by Phi_d for every proper divisor d of m.
    std::vector<Int> p(static_cast<std::size_t>(m) + 1, 0);
    p[0] = -1;
    p[static_cast<std::size_t>(m)] = 1;
    for (Int d : divisors(m))
        if (d != m)
            p = divide_monic(std::move(p), cached_cyclotomic_polynomial(d));
    return p;
}

inline const std::vector<Int>& cached_cyclotomic_polynomial(Int m)
{
    static std::mutex mutex;
    static std::map<Int, std::unique_ptr<const std::vector<Int>>> cache;
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(m); it != cache.end())
            return *it->second;
    }
    auto poly = std::make_unique<const std::vector<Int>>(compute_cyclotomic_polynomial(m));
    std::lock_guard lock(mutex);
    auto [it, inserted] = cache.emplace(m, std::move(poly));
    return *it->second;
}

// Reduces sum v[k] x^k modulo Phi_m in place, first folding exponents mod m.
// Leaves exactly phi(m) coefficients.
template <typename T>
void reduce_mod_cyclotomic(std::vector<T>& v, Int m)
{
    const auto& phi_poly = cached_cyclotomic_polynomial(m);
    const std::size_t deg = phi_poly.size() - 1;
    const auto um = static_cast<std::size_t>(m);
    if (v.size() > um) {
        for (std::size_t k = um; k < v.size(); ++k)
            v[k % um] += v[k];
    }
    v.resize(um);
    for (std::size_t k = um; k-- > deg;) {
        if (v[k] == 0)
            continue;
        const T t = v[k];
        for (std::size_t i = 0; i <= deg; ++i)
            if (phi_poly[i] != 0)
                v[k - deg + i] -= t * phi_poly[i];
    }
    v.resize(deg);
}

} // namespace detail

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
inline std::vector<Int> cyclotomic_polynomial(Int m)
{
    detail::check_order(m);
    return detail::cached_cyclotomic_polynomial(m);
}

class Cyclotomic {
public:
    /// Zero.
    Cyclotomic() : order_(1), coeffs_(1) {}

    Cyclotomic(const Rational& r) : order_(1), coeffs_{r} {}
    Cyclotomic(long n) : order_(1), coeffs_{Rational(n)} {}

    /// The element sum_k by_power[k] * zeta_m^k (any length, exponents taken mod m).
    static Cyclotomic from_powers(Int m, std::vector<Rational> by_power)
    {
        detail::check_order(m);
        detail::reduce_mod_cyclotomic(by_power, m);
        return Cyclotomic(m, std::move(by_power));
    }

    /// (sum_k numerators[k] * zeta_m^k) / denominator, reduced in integer arithmetic.
    static Cyclotomic from_integer_powers(Int m, std::vector<BigInt> numerators,
                                          const BigInt& denominator)
    {
        detail::check_order(m);
        if (denominator == 0)
            throw std::domain_error("Cyclotomic: zero denominator");
        detail::reduce_mod_cyclotomic(numerators, m);
        std::vector<Rational> coeffs;
        coeffs.reserve(numerators.size());
        for (auto& n : numerators) {
            Rational r(n, denominator);
            r.canonicalize();
            coeffs.push_back(std::move(r));
        }
        return Cyclotomic(m, std::move(coeffs));
    }

    Int order() const noexcept { return order_; }
    const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

    bool is_zero() const
    {
        for (const auto& c : coeffs_)
            if (c != 0)
                return false;
        return true;
    }

    bool is_rational() const
    {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0)
                return false;
        return true;
    }

    Rational rational_value() const
    {
        if (!is_rational())
            throw std::domain_error("Cyclotomic: value is not rational");
        return coeffs_[0];
    }

    /// The same element written in Q(zeta_target); target must be a multiple of order().
    Cyclotomic in_order(Int target) const
    {
        if (target == order_)
            return *this;
        if (target % order_ != 0)
            throw std::invalid_argument("Cyclotomic::in_order: target not a multiple of order");
        detail::check_order(target);
        const Int step = target / order_;
        std::vector<Rational> v(static_cast<std::size_t>(target));
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            v[k * static_cast<std::size_t>(step)] = coeffs_[k];
        return from_powers(target, std::move(v));
    }

    /// Complex conjugation, zeta_m -> zeta_m^(m-1).
    Cyclotomic conj() const
    {
        if (is_rational())
            return *this;
        const auto m = static_cast<std::size_t>(order_);
        std::vector<Rational> v(m);
        for (std::size_t k = 0; k < coeffs_.size(); ++k)
            v[(m - k) % m] = coeffs_[k];
        return from_powers(order_, std::move(v));
    }

    /// Evaluation at zeta_m = exp(2 pi i / m) in double precision.
    std::complex<double> embed() const
    {
        std::complex<double> z{0.0, 0.0};
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            if (coeffs_[k] == 0)
                continue;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(k)
                                 / static_cast<double>(order_);
            z += coeffs_[k].get_d() * std::polar(1.0, angle);
        }
        return z;
    }

    Cyclotomic operator-() const
    {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_)
            c = -c;
        return r;
    }

    Cyclotomic& operator+=(const Cyclotomic& rhs) { return *this = *this + rhs; }
    Cyclotomic& operator-=(const Cyclotomic& rhs) { return *this = *this - rhs; }
    Cyclotomic& operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

    friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y)
    {
        if (y.is_rational()) {
            Cyclotomic r = x;
            r.coeffs_[0] += y.coeffs_[0];
            return r;
        }
        if (x.is_rational())
            return y + x;
        const Int L = lcm(x.order_, y.order_);
        Cyclotomic r = x.in_order(L);
        const Cyclotomic ys = y.in_order(L);
        for (std::size_t k = 0; k < r.coeffs_.size(); ++k)
            r.coeffs_[k] += ys.coeffs_[k];
        return r;
    }

    friend Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y) { return x + (-y); }

    friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y)
    {
        if (y.is_rational())
            return x.scaled(y.coeffs_[0]);
        if (x.is_rational())
            return y.scaled(x.coeffs_[0]);
        const Int L = lcm(x.order_, y.order_);
        const Cyclotomic xs = x.in_order(L);
        const Cyclotomic ys = y.in_order(L);
        std::vector<Rational> prod(xs.coeffs_.size() + ys.coeffs_.size() - 1);
        for (std::size_t i = 0; i < xs.coeffs_.size(); ++i) {
            if (xs.coeffs_[i] == 0)
                continue;
            for (std::size_t j = 0; j < ys.coeffs_.size(); ++j)
                if (ys.coeffs_[j] != 0)
                    prod[i + j] += xs.coeffs_[i] * ys.coeffs_[j];
        }
        return from_powers(L, std::move(prod));
    }

    friend bool operator==(const Cyclotomic& x, const Cyclotomic& y)
    {
        if (x.order_ == y.order_)
            return x.coeffs_ == y.coeffs_;
        if (x.is_rational() && y.is_rational())
            return x.coeffs_[0] == y.coeffs_[0];
        const Int L = lcm(x.order_, y.order_);
        return x.in_order(L).coeffs_ == y.in_order(L).coeffs_;
    }

    /// Human-readable form, e.g. "1/2 - 3*z12^2" where z12 = exp(2 pi i/12).
    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) { return os << x.to_string(); }

    std::string to_string() const
    {
        std::string out;
        for (std::size_t k = 0; k < coeffs_.size(); ++k) {
            const Rational& c = coeffs_[k];
            if (c == 0)
                continue;
            const bool negative = c < 0;
            if (out.empty())
                out += negative ? "-" : "";
            else
                out += negative ? " - " : " + ";
            const Rational mag = abs(c);
            if (k == 0) {
                out += mag.get_str();
                continue;
            }
            if (mag != 1)
                out += mag.get_str() + "*";
            out += "z" + std::to_string(order_);
            if (k > 1)
                out += "^" + std::to_string(k);
        }
        return out.empty() ? "0" : out;
    }

private:
    Cyclotomic(Int m, std::vector<Rational> coeffs) : order_(m), coeffs_(std::move(coeffs)) {}

    Cyclotomic scaled(const Rational& s) const
    {
        Cyclotomic r = *this;
        for (auto& c : r.coeffs_)
            c *= s;
        return r;
    }

    Int order_;
    std::vector<Rational> coeffs_;
};

/// zeta_m^k, reduced to the power basis.
inline Cyclotomic root_of_unity(Int m, Int k)
{
    detail::check_order(m);
    std::vector<Rational> v(static_cast<std::size_t>(m));
    v[static_cast<std::size_t>(mod(k, m))] = 1;
    return Cyclotomic::from_powers(m, std::move(v));
}

inline Cyclotomic conj(const Cyclotomic& x) { return x.conj(); }
inline std::complex<double> embed(const Cyclotomic& x) { return x.embed(); }

} // namespace dedesum

#endif // DEDESUM_CYCLOTOMIC_HPP_INCLUDED
