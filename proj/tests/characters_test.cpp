#include "dedesum/characters.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "dedesum/json.hpp"

namespace {

using namespace dedesum;

TEST(UnitGroupGenerators, DocumentedConvention)
{
    EXPECT_EQ(unit_group_generators(3), (std::vector<UnitGenerator>{{2, 2}}));
    EXPECT_EQ(unit_group_generators(4), (std::vector<UnitGenerator>{{3, 2}}));
    EXPECT_EQ(unit_group_generators(8), (std::vector<UnitGenerator>{{7, 2}, {5, 2}}));
    EXPECT_EQ(unit_group_generators(9), (std::vector<UnitGenerator>{{2, 6}}));
    EXPECT_TRUE(unit_group_generators(1).empty());
    EXPECT_TRUE(unit_group_generators(2).empty());
    // 12: 3 mod 4 lifted to 7, 2 mod 3 lifted to 5
    EXPECT_EQ(unit_group_generators(12), (std::vector<UnitGenerator>{{7, 2}, {5, 2}}));
}

TEST(UnitGroupGenerators, GenerateTheWholeGroup)
{
    for (Int q = 1; q <= 200; ++q) {
        const auto gens = unit_group_generators(q);
        Int product = 1;
        for (const auto& g : gens) {
            product *= g.order;
            EXPECT_EQ(pow_mod(g.generator, g.order, q), 1 % q) << "q=" << q;
        }
        EXPECT_EQ(product, euler_phi(q)) << "q=" << q;
        std::set<Int> reached{1 % q};
        for (const auto& g : gens) {
            std::set<Int> next;
            for (Int x : reached)
                for (Int k = 0, y = x; k < g.order; ++k, y = y * g.generator % q)
                    next.insert(y);
            reached = std::move(next);
        }
        EXPECT_EQ(static_cast<Int>(reached.size()), euler_phi(q)) << "q=" << q;
    }
}

TEST(EnumerateCharacters, Counts)
{
    EXPECT_EQ(enumerate_characters(3, true).size(), 1u);
    EXPECT_EQ(enumerate_characters(3, true).front().parity(), -1);
    EXPECT_EQ(enumerate_characters(4, true).size(), 1u);
    EXPECT_EQ(enumerate_characters(4, true).front().parity(), -1);
    EXPECT_EQ(enumerate_characters(9, true).size(), 4u);
    EXPECT_TRUE(enumerate_characters(6, true).empty());
    for (Int q = 1; q <= 60; ++q)
        EXPECT_EQ(static_cast<Int>(enumerate_characters(q, false).size()), euler_phi(q));
}

TEST(EnumerateCharacters, PrimitiveCountMatchesConductorCensus)
{
    // sum over f | q of #primitive(f) = phi(q)
    for (Int q = 1; q <= 60; ++q) {
        Int total = 0;
        for (Int f : divisors(q))
            total += static_cast<Int>(enumerate_characters(f, true).size());
        EXPECT_EQ(total, euler_phi(q)) << "q=" << q;
    }
}

TEST(Conductor, Examples)
{
    EXPECT_EQ(DirichletCharacter(3, {0}).conductor(), 1);
    EXPECT_EQ(DirichletCharacter(3, {1}).conductor(), 3);
    // chi(2) = zeta_6^3 = -1: the quadratic character mod 3 lifted to modulus 9
    const DirichletCharacter lift(9, {3});
    EXPECT_EQ(lift.conductor(), 3);
    EXPECT_FALSE(lift.is_primitive());
    for (Int n = 0; n < 9; ++n)
        if (n % 3 != 0)
            EXPECT_EQ(lift(n), DirichletCharacter(3, {1})(n));
}

TEST(Eval, Examples)
{
    const DirichletCharacter chi3(3, {1});
    EXPECT_EQ(chi3(2), Cyclotomic(-1));
    for (const auto& chi : enumerate_characters(9, false))
        EXPECT_TRUE(chi(3).is_zero());
    const DirichletCharacter chi5(5, {1});
    ASSERT_EQ(chi5(2), root_of_unity(4, 1));
    EXPECT_EQ(chi5(4), Cyclotomic(-1));
    EXPECT_EQ(chi5(-1), Cyclotomic(-1));
}

TEST(Eval, CompletelyMultiplicativeAndOrthogonal)
{
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<Int> arg(-500, 500);
    for (Int q = 1; q <= 50; ++q)
        for (const auto& chi : enumerate_characters(q, false)) {
            for (int t = 0; t < 8; ++t) {
                const Int m = arg(rng), n = arg(rng);
                ASSERT_EQ(chi(m * n), chi(m) * chi(n)) << chi.label() << " m=" << m << " n=" << n;
            }
            Cyclotomic sum;
            for (Int n = 0; n < q; ++n)
                sum += chi(n);
            if (chi.is_principal())
                EXPECT_EQ(sum, Cyclotomic(euler_phi(q)));
            else
                EXPECT_TRUE(sum.is_zero()) << chi.label();
            EXPECT_EQ(chi(q - 1), Cyclotomic(chi.parity())) << chi.label();
            EXPECT_EQ(chi(1), Cyclotomic(1));
        }
}

TEST(GaussSum, Examples)
{
    EXPECT_EQ(gauss_sum(DirichletCharacter(3, {1})), root_of_unity(3, 1) - root_of_unity(3, 2));
    EXPECT_EQ(gauss_sum(DirichletCharacter(4, {1})), Cyclotomic(2) * root_of_unity(4, 1));
    const auto tau3 = gauss_sum(DirichletCharacter(3, {1}));
    EXPECT_EQ(tau3.conj(), -tau3);
}

TEST(GaussSum, NormAndConjugatePairing)
{
    for (Int q = 2; q <= 50; ++q)
        for (const auto& chi : enumerate_characters(q, true)) {
            const Cyclotomic tau = gauss_sum(chi);
            EXPECT_EQ(tau * tau.conj(), Cyclotomic(q)) << chi.label();
            EXPECT_EQ(tau * gauss_sum(chi.conj()), Cyclotomic(chi.parity() * q)) << chi.label();
            EXPECT_NEAR(std::norm(tau.embed()), static_cast<double>(q), 1e-10) << chi.label();
        }
}

TEST(CharacterPair, CentralCharacter)
{
    const auto same = CharacterPair::from_labels("3:1", "3:1");
    EXPECT_EQ(same.level(), 9);
    for (Int d = -20; d <= 20; ++d)
        EXPECT_EQ(same.psi(d), d % 3 == 0 ? Cyclotomic{} : Cyclotomic(1)) << d;
    const auto mixed = CharacterPair::from_labels("3:1", "4:1");
    EXPECT_EQ(psi_eval(mixed, 5), Cyclotomic(-1));
    EXPECT_TRUE(psi_eval(mixed, 6).is_zero());
    EXPECT_EQ(mixed.swapped().label(), "(4:1, 3:1)");
}

TEST(CharacterPair, RejectsInadmissibleInput)
{
    // odd * even
    EXPECT_THROW(CharacterPair::from_labels("3:1", "5:2"), std::invalid_argument);
    try {
        CharacterPair::from_labels("3:1", "5:2");
    } catch (const std::invalid_argument& e) {
        EXPECT_NE(std::string(e.what()).find("chi1*chi2(-1) = 1"), std::string::npos);
    }
    EXPECT_THROW(CharacterPair::from_labels("9:3", "3:1"), std::invalid_argument);  // imprimitive
    EXPECT_THROW(CharacterPair::from_labels("1:", "3:1"), std::invalid_argument);   // q1 = 1
    EXPECT_THROW(DirichletCharacter::from_label("3"), std::invalid_argument);
    EXPECT_THROW(DirichletCharacter::from_label("3:2"), std::invalid_argument);
    EXPECT_THROW(DirichletCharacter::from_label("8:1"), std::invalid_argument);
    EXPECT_THROW(DirichletCharacter::from_label("x:1"), std::invalid_argument);
}

TEST(CharacterLabels, RoundTrip)
{
    for (Int q = 1; q <= 40; ++q)
        for (const auto& chi : enumerate_characters(q, false))
            EXPECT_EQ(DirichletCharacter::from_label(chi.label()), chi);
}

TEST(TwistedCharacterSum, VanishesOffTheDiagonal)
{
    for (Int q = 3; q <= 12; ++q)
        for (const auto& chi : enumerate_characters(q, true))
            for (Int c = q; c <= 24; c += q)
                for (Int a = 1; a < c; ++a) {
                    if (gcd(a, c) != 1)
                        continue;
                    for (Int l = 0; l < c; ++l) {
                        const auto s = twisted_character_sum(chi, a, c, l);
                        if (mod(l, c / q) != 0)
                            EXPECT_TRUE(s.is_zero()) << chi.label() << " a=" << a << " c=" << c << " l=" << l;
                    }
                }
    // the hypothesis matters: l = 0 mod c/q gives a (scaled) Gauss sum
    const DirichletCharacter chi3(3, {1});
    EXPECT_FALSE(twisted_character_sum(chi3, 1, 6, 2).is_zero());
}

TEST(CharacterJson, Fields)
{
    const Json j = to_json(DirichletCharacter(9, {1}));
    EXPECT_EQ(j.dump(), R"({"modulus":9,"label":"9:1","order":6,"parity":-1,"conductor":9})");
}

TEST(AdmissiblePairs, HypothesesHold)
{
    const auto pairs = admissible_pairs(36);
    EXPECT_FALSE(pairs.empty());
    bool saw_even = false, saw_odd = false;
    for (const auto& p : pairs) {
        EXPECT_LE(p.level(), 36);
        EXPECT_EQ(p.chi1().parity(), p.chi2().parity());
        (p.both_even() ? saw_even : saw_odd) = true;
    }
    EXPECT_TRUE(saw_even);
    EXPECT_TRUE(saw_odd);
}

} // namespace
