#ifndef DEDESUM_ORACLE_HPP_INCLUDED
#define DEDESUM_ORACLE_HPP_INCLUDED

// Floating-point verification channel. Nothing here feeds the exact computations;
// it evaluates truncated Fourier series at s = 1 and compares against them.
//
//   f_{chi1,chi2}(z) = sum_{n >= 1} (c_n / n) e(nz),   c_n = sum_{ab = n} chi1(a) conj(chi2)(b) b
//   E*(z, 1)         = f_{chi1,chi2}(z) + chi2(-1) conj(f_{conj chi1, conj chi2}(z))
//
// c_n / n is the coefficient lambda(n, 1) / sqrt(n) of the weight-zero series, and 2 c_n
// is the n-th coefficient of the weight-two series E_{2,chi1,chi2}.

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

#include "dedesum/bernoulli.hpp"
#include "dedesum/characters.hpp"
#include "dedesum/cyclotomic.hpp"
#include "dedesum/dedekind.hpp"
#include "dedesum/modgroup.hpp"

namespace dedesum {

using Complex = std::complex<double>;

/// Point x + iy of the upper half-plane with exact rational real part x = re_num / re_den.
/// Keeping x exact lets e(nx) be formed from (n re_num mod re_den) without phase drift.
struct HalfPlanePoint {
    Int re_num = 0;
    Int re_den = 1;
    double im = 1.0;

    Complex value() const
    {
        return {static_cast<double>(re_num) / static_cast<double>(re_den), im};
    }
};

namespace detail {

inline std::vector<Complex> character_values(const DirichletCharacter& chi)
{
    std::vector<Complex> v(static_cast<std::size_t>(chi.modulus()));
    for (Int n = 0; n < chi.modulus(); ++n)
        if (const auto k = chi.exponent_at(n))
            v[static_cast<std::size_t>(n)] = std::polar(
                1.0, 2.0 * std::numbers::pi * static_cast<double>(*k) / static_cast<double>(chi.order()));
    return v;
}

// Neumaier-compensated complex accumulator.
class CompensatedSum {
public:
    void add(Complex x)
    {
        add_part(re_, re_c_, x.real());
        add_part(im_, im_c_, x.imag());
    }
    Complex value() const { return {re_ + re_c_, im_ + im_c_}; }

private:
    static void add_part(double& s, double& c, double x)
    {
        const double t = s + x;
        c += std::abs(s) >= std::abs(x) ? (s - t) + x : (x - t) + s;
        s = t;
    }
    double re_ = 0, re_c_ = 0, im_ = 0, im_c_ = 0;
};

} // namespace detail

/// Truncated Fourier model of f_{chi1,chi2} at s = 1.
class EisensteinSeries {
public:
    EisensteinSeries(const CharacterPair& pair, Int truncation)
        : truncation_(truncation), coeffs_(static_cast<std::size_t>(truncation) + 1)
    {
        if (truncation < 1)
            throw std::invalid_argument("EisensteinSeries: truncation must be positive");
        const auto chi1 = detail::character_values(pair.chi1());
        const auto chi2 = detail::character_values(pair.chi2());
        const Int q1 = pair.q1(), q2 = pair.q2();
        for (Int a = 1; a <= truncation; ++a) {
            const Complex x1 = chi1[static_cast<std::size_t>(a % q1)];
            if (x1 == Complex{})
                continue;
            for (Int b = 1; a * b <= truncation; ++b) {
                const Complex x2 = chi2[static_cast<std::size_t>(b % q2)];
                if (x2 == Complex{})
                    continue;
                coeffs_[static_cast<std::size_t>(a * b)] += x1 * std::conj(x2) * static_cast<double>(b);
            }
        }
    }

    Int truncation() const noexcept { return truncation_; }

    /// c_n for 1 <= n <= truncation.
    Complex coeff(Int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }

    Complex operator()(const HalfPlanePoint& z) const { return evaluate(z, truncation_); }

    /// Sum of the first `terms` terms (terms <= truncation).
    Complex evaluate(const HalfPlanePoint& z, Int terms) const
    {
        check_point(z.im);
        terms = std::min(terms, truncation_);
        const Int den = z.re_den;
        const Int num = mod(z.re_num, den);
        detail::CompensatedSum sum;
        for (Int n = 1; n <= terms; ++n) {
            const Complex cn = coeffs_[static_cast<std::size_t>(n)];
            if (cn == Complex{})
                continue;
            const auto phase_num = static_cast<Int>(static_cast<__int128>(n) * num % den);
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(phase_num) / static_cast<double>(den);
            const double decay = std::exp(-2.0 * std::numbers::pi * static_cast<double>(n) * z.im);
            if (decay == 0.0)
                break;
            sum.add(cn / static_cast<double>(n) * std::polar(decay, angle));
        }
        return sum.value();
    }

    Complex operator()(Complex z) const
    {
        check_point(z.imag());
        detail::CompensatedSum sum;
        const Complex two_pi_i{0.0, 2.0 * std::numbers::pi};
        for (Int n = 1; n <= truncation_; ++n) {
            const Complex cn = coeffs_[static_cast<std::size_t>(n)];
            if (cn != Complex{})
                sum.add(cn / static_cast<double>(n) * std::exp(two_pi_i * static_cast<double>(n) * z));
        }
        return sum.value();
    }

    /// Bound on the omitted terms at height im: sum_{n > M} d(n) e^{-2 pi n im}, with d(n) <= 2 sqrt(n).
    double tail_bound(double im) const
    {
        check_point(im);
        double total = 0.0;
        for (Int n = truncation_ + 1;; ++n) {
            const double t = 2.0 * std::sqrt(static_cast<double>(n))
                             * std::exp(-2.0 * std::numbers::pi * static_cast<double>(n) * im);
            total += t;
            if (t < 1e-30 || t < total * 1e-17)
                break;
        }
        return total;
    }

private:
    static void check_point(double im)
    {
        if (!(im > 0.0))
            throw std::invalid_argument("point must lie in the upper half-plane");
    }

    Int truncation_;
    std::vector<Complex> coeffs_;
};

/// Truncation putting the tail below ~1e-15 for points at height >= min_height.
inline Int truncation_for_height(double min_height)
{
    return static_cast<Int>(std::ceil(6.0 / min_height));
}

inline Complex f_value(const CharacterPair& pair, Complex z, Int truncation)
{
    return EisensteinSeries(pair, truncation)(z);
}

inline Complex f_value(const CharacterPair& pair, const HalfPlanePoint& z, Int truncation)
{
    return EisensteinSeries(pair, truncation)(z);
}

/// E*(z, 1) from the holomorphic and anti-holomorphic halves.
class CompletedEisensteinSeries {
public:
    CompletedEisensteinSeries(const CharacterPair& pair, Int truncation)
        : holomorphic_(pair, truncation), conjugate_(pair.conjugated(), truncation),
          chi2_parity_(pair.chi2().parity())
    {
    }

    Complex operator()(const HalfPlanePoint& z) const { return evaluate(z, holomorphic_.truncation()); }

    Complex evaluate(const HalfPlanePoint& z, Int terms) const
    {
        return holomorphic_.evaluate(z, terms)
               + static_cast<double>(chi2_parity_) * std::conj(conjugate_.evaluate(z, terms));
    }

    Complex operator()(Complex z) const
    {
        return holomorphic_(z) + static_cast<double>(chi2_parity_) * std::conj(conjugate_(z));
    }

private:
    EisensteinSeries holomorphic_;
    EisensteinSeries conjugate_;
    int chi2_parity_;
};

inline Complex e_star_value(const CharacterPair& pair, Complex z, Int truncation)
{
    return CompletedEisensteinSeries(pair, truncation)(z);
}

inline Complex e_star_value(const CharacterPair& pair, const HalfPlanePoint& z, Int truncation)
{
    return CompletedEisensteinSeries(pair, truncation)(z);
}

/// Residual |E*(g z, 1) - psi(g) E*(z, 1)| at z = i / y_inv (exact point arithmetic).
inline double automorphy_residual(const CompletedEisensteinSeries& series, const CharacterPair& pair,
                                  const GammaMatrix& g, Int y_inv, Int terms)
{
    // z = i/Y:  g z = (b d Y^2 + a c + i Y) / (d^2 Y^2 + c^2)
    const mpz_class Y(y_inv);
    const mpz_class den = g.d() * g.d() * Y * Y + g.c() * g.c();
    const mpz_class num = g.b() * g.d() * Y * Y + g.a() * g.c();
    if (!den.fits_slong_p())
        throw std::domain_error("automorphy_residual: matrix too large");
    const Int den_i = den.get_si();
    const HalfPlanePoint z{0, 1, 1.0 / static_cast<double>(y_inv)};
    const HalfPlanePoint gz{residue(num, den_i), den_i, static_cast<double>(y_inv) / static_cast<double>(den_i)};
    const Complex psi = psi_eval(pair, g).embed();
    return std::abs(series.evaluate(gz, terms) - psi * series.evaluate(z, terms));
}

/// phi(g) = f(g z) - psi(g) f(z), evaluated at z = -d/c + i t/|c| so that g z = a/c + i/(t |c|).
/// The default t = 1 puts both points at height 1/|c|.
inline Complex phi_numeric(const EisensteinSeries& series, const CharacterPair& pair, const GammaMatrix& g,
                           double t = 1.0)
{
    if (g.c() == 0)
        throw std::invalid_argument("phi_numeric: c = 0 (phi vanishes identically; handle upstream)");
    if (!(t > 0.0))
        throw std::invalid_argument("phi_numeric: height scale must be positive");
    const mpz_class abs_c = abs(g.c());
    if (!abs_c.fits_slong_p())
        throw std::domain_error("phi_numeric: |c| too large");
    const Int c = abs_c.get_si();
    const int s = sgn(g.c());
    // -d/c and a/c with positive denominator |c|
    const HalfPlanePoint z{residue(s > 0 ? mpz_class(-g.d()) : g.d(), c), c, t / static_cast<double>(c)};
    const HalfPlanePoint gz{residue(s > 0 ? g.a() : mpz_class(-g.a()), c), c, 1.0 / (t * static_cast<double>(c))};
    const Complex psi = psi_eval(pair, g).embed();
    return series(gz) - psi * series(z);
}

/// Default truncation for phi_numeric at scale t: ceil(6 |c| max(t, 1/t)).
inline Int phi_truncation(const GammaMatrix& g, double t = 1.0)
{
    const double c = std::abs(g.c().get_d());
    return static_cast<Int>(std::ceil(6.0 * c * std::max(t, 1.0 / t)));
}

inline Complex phi_numeric(const CharacterPair& pair, const GammaMatrix& g, Int truncation = 0)
{
    if (g.c() == 0)
        throw std::invalid_argument("phi_numeric: c = 0 (phi vanishes identically; handle upstream)");
    const EisensteinSeries series(pair, std::max(truncation, phi_truncation(g)));
    return phi_numeric(series, pair, g);
}

/// tau(conj chi1) / (pi i) as a complex number.
inline Complex dedekind_normalization(const CharacterPair& pair)
{
    return gauss_sum(pair.chi1().conj()).embed() / Complex{0.0, std::numbers::pi};
}

/// Numeric S(g) = tau(conj chi1)/(pi i) * phi(g).
inline Complex s_numeric(const CharacterPair& pair, const GammaMatrix& g, Int truncation = 0)
{
    return dedekind_normalization(pair) * phi_numeric(pair, g, truncation);
}

/// delta = chi2(-1) tau(chi1) q2 / (tau(chi2) q1).
inline Complex fricke_delta(const CharacterPair& pair)
{
    return static_cast<double>(pair.chi2().parity()) * gauss_sum(pair.chi1()).embed()
           * static_cast<double>(pair.q2())
           / (gauss_sum(pair.chi2()).embed() * static_cast<double>(pair.q1()));
}

/// phi(omega) = f_{chi1,chi2}(omega z) - delta f_{chi2,chi1}(z) at z = i y, omega z = i/(N y).
/// The default y = 1/sqrt(N) is the fixed point of omega.
inline Complex fricke_phi_numeric(const CharacterPair& pair, Int truncation = 0, double y = 0.0)
{
    const double n = static_cast<double>(pair.level());
    if (y == 0.0)
        y = 1.0 / std::sqrt(n);
    if (!(y > 0.0))
        throw std::invalid_argument("fricke_phi_numeric: height must be positive");
    const double y_omega = 1.0 / (n * y);
    const Int terms = std::max(truncation, truncation_for_height(std::min(y, y_omega)));
    const EisensteinSeries f12(pair, terms);
    const EisensteinSeries f21(pair.swapped(), terms);
    return f12(HalfPlanePoint{0, 1, y_omega}) - fricke_delta(pair) * f21(HalfPlanePoint{0, 1, y});
}

/// Partial sum of L(1, chi) over l <= M (rounded up to a multiple of q) plus the
/// Euler-Maclaurin estimate of the tail. Error well below 2q/M.
inline Complex l_one_series(const DirichletCharacter& chi, Int truncation)
{
    if (chi.is_principal())
        throw std::invalid_argument("l_one: principal character has a pole at s = 1");
    if (truncation < 1)
        throw std::invalid_argument("l_one: truncation must be positive");
    const Int q = chi.modulus();
    const Int m = (truncation + q - 1) / q * q;
    const auto values = detail::character_values(chi);
    detail::CompensatedSum sum;
    for (Int l = 1; l <= m; ++l)
        if (values[static_cast<std::size_t>(l % q)] != Complex{})
            sum.add(values[static_cast<std::size_t>(l % q)] / static_cast<double>(l));
    // sum_{l > m} chi(l)/l = -(1/q) sum_{r=1}^{q} chi(r) digamma((m + r)/q), digamma(x) ~ ln x - 1/(2x) - 1/(12x^2)
    for (Int r = 1; r <= q; ++r) {
        const Complex v = values[static_cast<std::size_t>(r % q)];
        if (v == Complex{})
            continue;
        const double x = static_cast<double>(m + r) / static_cast<double>(q);
        const double digamma = std::log(x) - 1.0 / (2.0 * x) - 1.0 / (12.0 * x * x);
        sum.add(-v * digamma / static_cast<double>(q));
    }
    return sum.value();
}

/// L(1, chi) = -pi i B_{1,chi}(0) / tau(conj chi) for odd primitive chi.
inline Complex l_one_closed_form(const DirichletCharacter& chi)
{
    if (chi.is_even())
        throw std::invalid_argument("l_one_closed_form: only odd characters have this closed form");
    return -Complex{0.0, std::numbers::pi} * b1_chi(chi, 0).embed() / gauss_sum(chi.conj()).embed();
}

/// L(1, chi): the closed form for odd chi, the tail-corrected series otherwise.
inline Complex l_one(const DirichletCharacter& chi, Int truncation = 100000)
{
    if (chi.is_principal())
        throw std::invalid_argument("l_one: principal character has a pole at s = 1");
    if (!chi.is_even() && chi.is_primitive())
        return l_one_closed_form(chi);
    return l_one_series(chi, truncation);
}

/// Exact c_n = sum_{ab = n} chi1(a) conj(chi2)(b) b.
inline Cyclotomic coeff_exact(const CharacterPair& pair, Int n)
{
    if (n < 1)
        throw std::invalid_argument("coeff_exact: n must be positive");
    const Int m = pair.value_order();
    const Int s1 = m / pair.chi1().order(), s2 = m / pair.chi2().order();
    std::vector<BigInt> by_power(static_cast<std::size_t>(m));
    for (Int a : divisors(n)) {
        const Int b = n / a;
        const auto k1 = pair.chi1().exponent_at(a);
        const auto k2 = pair.chi2().exponent_at(b);
        if (k1 && k2)
            by_power[static_cast<std::size_t>(mod(*k1 * s1 - *k2 * s2, m))] += b;
    }
    return Cyclotomic::from_integer_powers(m, std::move(by_power), 1);
}

/// Exact c_1, ..., c_M by a divisor sieve (index 0 unused).
inline std::vector<Cyclotomic> coeff_table_exact(const CharacterPair& pair, Int limit)
{
    const Int m = pair.value_order();
    const Int s1 = m / pair.chi1().order(), s2 = m / pair.chi2().order();
    std::vector<std::vector<BigInt>> acc(static_cast<std::size_t>(limit) + 1,
                                         std::vector<BigInt>(static_cast<std::size_t>(m)));
    for (Int a = 1; a <= limit; ++a) {
        const auto k1 = pair.chi1().exponent_at(a);
        if (!k1)
            continue;
        for (Int b = 1; a * b <= limit; ++b)
            if (const auto k2 = pair.chi2().exponent_at(b))
                acc[static_cast<std::size_t>(a * b)][static_cast<std::size_t>(mod(*k1 * s1 - *k2 * s2, m))] += b;
    }
    std::vector<Cyclotomic> out(static_cast<std::size_t>(limit) + 1);
    for (Int n = 1; n <= limit; ++n)
        out[static_cast<std::size_t>(n)] = Cyclotomic::from_integer_powers(m, std::move(acc[static_cast<std::size_t>(n)]), 1);
    return out;
}

/// c_{mn} = c_m c_n for coprime m, n (coefficient form of the Hecke eigen-relation).
inline EqualityReport hecke_multiplicativity_check(const CharacterPair& pair, Int m, Int n)
{
    if (m < 1 || n < 1)
        throw std::invalid_argument("hecke_multiplicativity_check: arguments must be positive");
    if (gcd(m, n) != 1)
        throw std::invalid_argument("hecke_multiplicativity_check: gcd(" + std::to_string(m) + ", "
                                    + std::to_string(n) + ") != 1");
    EqualityReport r{false, coeff_exact(pair, m * n), coeff_exact(pair, m) * coeff_exact(pair, n)};
    r.equal = r.lhs == r.rhs;
    return r;
}

struct CoefficientSweepReport {
    bool equal = true;
    Int checked = 0;
    Int first_mismatch = 0; // 0 when none
    Cyclotomic lhs;         // at first_mismatch, else at the last n checked
    Cyclotomic rhs;
};

/// Term-wise derivative of (1/(pi i)) f against the weight-two series, for n <= M.
/// Left side: from the double series f = sum_{k,l} chi1(l) conj(chi2)(k) / l e(klz), the n-th
/// coefficient of d/dz (1/(pi i)) f is 2n sum_{kl = n} chi1(l) conj(chi2)(k) / l.
/// Right side: 2 n^{1/2} lambda(n, 1) = 2 c_n.
inline CoefficientSweepReport eichler_shimura_check(const CharacterPair& pair, Int limit)
{
    const Int m = pair.value_order();
    const Int s1 = m / pair.chi1().order(), s2 = m / pair.chi2().order();
    const auto rhs_table = coeff_table_exact(pair, limit);
    CoefficientSweepReport report;
    for (Int n = 1; n <= limit; ++n) {
        std::vector<Rational> by_power(static_cast<std::size_t>(m));
        for (Int l : divisors(n)) {
            const auto k1 = pair.chi1().exponent_at(l);
            const auto k2 = pair.chi2().exponent_at(n / l);
            if (k1 && k2)
                by_power[static_cast<std::size_t>(mod(*k1 * s1 - *k2 * s2, m))] += Rational(1, l);
        }
        for (auto& v : by_power)
            v *= 2 * n;
        const Cyclotomic lhs = Cyclotomic::from_powers(m, std::move(by_power));
        const Cyclotomic rhs = Cyclotomic(2) * rhs_table[static_cast<std::size_t>(n)];
        ++report.checked;
        report.equal = lhs == rhs;
        report.lhs = lhs;
        report.rhs = rhs;
        if (!report.equal) {
            report.first_mismatch = n;
            break;
        }
    }
    return report;
}

} // namespace dedesum

#endif // DEDESUM_ORACLE_HPP_INCLUDED
