#include "dedesum/oracle.hpp"

#include <gtest/gtest.h>

#include <numbers>

namespace {

using namespace dedesum;

const double pi = std::numbers::pi;

TEST(Coefficients, Examples)
{
    const auto p = CharacterPair::from_labels("3:1", "3:1");
    EXPECT_EQ(coeff_exact(p, 1), Cyclotomic(1));
    EXPECT_EQ(coeff_exact(p, 2), Cyclotomic(-3));
    EXPECT_EQ(coeff_exact(p, 3), Cyclotomic(0));
    EXPECT_EQ(coeff_exact(p, 5), Cyclotomic(-6));
    EXPECT_EQ(coeff_exact(p, 10), Cyclotomic(18));
    const auto table = coeff_table_exact(p, 60);
    for (Int n = 1; n <= 60; ++n)
        EXPECT_EQ(table[static_cast<std::size_t>(n)], coeff_exact(p, n)) << n;
    EXPECT_THROW(coeff_exact(p, 0), std::invalid_argument);
}

TEST(Coefficients, HeckeMultiplicativity)
{
    for (const auto& pair : admissible_pairs(20)) {
        EXPECT_TRUE(hecke_multiplicativity_check(pair, 1, 7).equal);
        EXPECT_TRUE(hecke_multiplicativity_check(pair, 2, 5).equal);
        EXPECT_TRUE(hecke_multiplicativity_check(pair, 9, 16).equal);
    }
    const auto p = CharacterPair::from_labels("3:1", "3:1");
    EXPECT_THROW(hecke_multiplicativity_check(p, 2, 4), std::invalid_argument);
}

TEST(Coefficients, EichlerShimura)
{
    const auto p = CharacterPair::from_labels("3:1", "3:1");
    const auto r1 = eichler_shimura_check(p, 1);
    EXPECT_TRUE(r1.equal);
    EXPECT_EQ(r1.rhs, Cyclotomic(2));
    const auto r2 = eichler_shimura_check(p, 2);
    EXPECT_TRUE(r2.equal);
    EXPECT_EQ(r2.rhs, Cyclotomic(-6));
    for (const auto& pair : admissible_pairs(20)) {
        const auto r = eichler_shimura_check(pair, 300);
        EXPECT_TRUE(r.equal) << pair.label() << " n=" << r.first_mismatch;
        EXPECT_EQ(r.checked, 300);
    }
}

TEST(EisensteinSeries, BasicBehaviour)
{
    const auto p = CharacterPair::from_labels("3:1", "3:1");
    const EisensteinSeries f(p, 400);
    EXPECT_LT(std::abs(f(Complex(0, 10))), 1e-20);
    EXPECT_LT(std::abs(f(Complex(0.3, 0.2)) - f(Complex(1.3, 0.2))), 1e-12);
    EXPECT_LT(std::abs(f(HalfPlanePoint{2, 7, 0.2}) - f(HalfPlanePoint{9, 7, 0.2})), 1e-13);
    const EisensteinSeries g(p, 200);
    EXPECT_LT(std::abs(f(Complex(0, 0.2)) - g(Complex(0, 0.2))), 1e-12);
    EXPECT_LE(std::abs(f(Complex(0, 0.05)) - g(Complex(0, 0.05))), g.tail_bound(0.05));
    EXPECT_THROW(f(Complex(0, -1)), std::invalid_argument);
}

TEST(CompletedSeries, AutomorphyAndReality)
{
    const auto p = CharacterPair::from_labels("3:1", "3:1");
    const CompletedEisensteinSeries e(p, 400);
    const GammaMatrix g = make_gamma(1, 0, 9, 1, 9);
    EXPECT_LT(automorphy_residual(e, p, g, 3, 400), 1e-9);
    const Complex z(0.0, 1.0 / 3.0);
    const Complex gz = (1.0 * z) / (9.0 * z + 1.0);
    EXPECT_LT(std::abs(e(gz) - e(z)), 1e-9);
    EXPECT_LT(std::abs(e(Complex(0, 0.4)).imag()), 1e-12);
    const auto q = CharacterPair::from_labels("5:1", "5:3");
    const CompletedEisensteinSeries eq(q, 2000);
    for (const auto& h : {complete_bottom_row(25, 1, 25), complete_bottom_row(-50, 1, 25), complete_bottom_row(25, 2, 25)})
        EXPECT_LT(automorphy_residual(eq, q, h, 25, 2000), 1e-9) << h.to_string();
}

TEST(PhiNumeric, BasePointIndependence)
{
    for (const auto& pair : admissible_pairs(16))
        for (std::uint64_t s = 0; s < 3; ++s) {
            const GammaMatrix g = random_gamma0(pair.level(), 3 * pair.level(), s);
            const EisensteinSeries series(pair, phi_truncation(g, 2.0));
            const Complex p1 = phi_numeric(series, pair, g, 1.0);
            const Complex p2 = phi_numeric(series, pair, g, 2.0);
            EXPECT_LT(std::abs(p1 - p2), 1e-10) << pair.label() << " " << g.to_string();
        }
    EXPECT_THROW(phi_numeric(CharacterPair::from_labels("3:1", "3:1"), GammaMatrix::identity(9)),
                 std::invalid_argument);
}

TEST(PhiNumeric, MatchesExactSum)
{
    const auto p = CharacterPair::from_labels("3:1", "3:1");
    EXPECT_LT(std::abs(s_numeric(p, make_gamma(5, 1, 9, 2, 9)) - Complex(-2.0 / 3.0, 0)), 1e-10);
    EXPECT_LT(std::abs(s_numeric(p, make_gamma(1, 0, 9, 1, 9))), 1e-10);
    for (const auto& pair : admissible_pairs(25))
        for (std::uint64_t s = 0; s < 3; ++s) {
            const GammaMatrix g = random_gamma0(pair.level(), 5 * pair.level(), s);
            EXPECT_LT(std::abs(s_numeric(pair, g) - dedekind_sum_value(pair, g).embed()), 1e-8)
                << pair.label() << " " << g.to_string();
        }
}

TEST(FrickePhi, MatchesClosedForm)
{
    for (const auto& pair : admissible_pairs(36)) {
        const Complex numeric = dedekind_normalization(pair) * fricke_phi_numeric(pair);
        EXPECT_LT(std::abs(numeric - fricke_value(pair).embed()), 1e-9) << pair.label();
        const double y = 0.7 / std::sqrt(static_cast<double>(pair.level()));
        const Complex moved = dedekind_normalization(pair) * fricke_phi_numeric(pair, 0, y);
        EXPECT_LT(std::abs(moved - numeric), 1e-10) << pair.label();
    }
    EXPECT_LT(std::abs(dedekind_normalization(CharacterPair::from_labels("3:1", "3:1"))
                           * fricke_phi_numeric(CharacterPair::from_labels("3:1", "3:1"))
                       - 1.0 / 9.0),
              1e-9);
}

TEST(LValues, Examples)
{
    const DirichletCharacter chi4(4, {1}), chi3(3, {1});
    EXPECT_NEAR(l_one(chi4).real(), pi / 4, 1e-4);
    EXPECT_NEAR(l_one(chi3).real(), pi / (3 * std::sqrt(3.0)), 1e-4);
    EXPECT_NEAR(l_one_series(chi4, 100000).real(), pi / 4, 1e-9);
    EXPECT_NEAR(l_one_series(DirichletCharacter(5, {2}), 100000).real(),
                2 * std::log((1 + std::sqrt(5.0)) / 2) / std::sqrt(5.0), 1e-9);
    EXPECT_THROW(l_one(DirichletCharacter(5, {0})), std::invalid_argument);
    EXPECT_THROW(l_one_closed_form(DirichletCharacter(5, {2})), std::invalid_argument);
}

TEST(LValues, SeriesAgreesWithClosedForm)
{
    for (Int q = 3; q <= 50; ++q)
        for (const auto& chi : enumerate_characters(q, true))
            if (!chi.is_even())
                EXPECT_LT(std::abs(l_one_series(chi, 100000) - l_one_closed_form(chi)), 1e-4) << chi.label();
}

} // namespace
