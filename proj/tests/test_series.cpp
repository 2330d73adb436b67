#include <gtest/gtest.h>

#include "bch/series.hpp"
#include "support.hpp"

using namespace bch;

namespace {

NestedComm nc(std::initializer_list<unsigned> leaves)
{
    Word w;
    for (unsigned l : leaves)
        w.push_back(Generator{static_cast<std::uint8_t>(l)});
    return NestedComm(std::move(w));
}

}  // namespace

TEST(Polarizations, CountAndWeights)
{
    auto p = polarizations(4, 2);
    ASSERT_EQ(p.size(), 5u);
    EXPECT_EQ(p.front().multidegree, (std::vector<std::size_t>{4, 0}));
    EXPECT_EQ(p[2].weight, Rational(1, 4));
    EXPECT_EQ(p[2].arguments(), (std::vector<Generator>{X, X, Y, Y}));
    EXPECT_EQ(polarizations(3, 3).size(), 10u);
}

TEST(Phi, LowGrades)
{
    EXPECT_EQ(phi_m(1), LieExpr::generator(X) + LieExpr::generator(Y));
    EXPECT_EQ(phi_m(2), (LieExpr{{NestedComm::from_string("XY"), Rational(1, 2)}}));
    EXPECT_EQ(phi_m(3), (LieExpr{{NestedComm::from_string("XXY"), Rational(1, 12)},
                                 {NestedComm::from_string("YXY"), Rational(-1, 12)}}));
    EXPECT_EQ(phi_m(4), (LieExpr{{NestedComm::from_string("XYXY"), Rational(-1, 24)}}));
}

TEST(Phi, ThirdGradeWords)
{
    AssocPoly expected;
    for (auto [w, c] : std::initializer_list<std::pair<const char*, Rational>>{
             {"XXY", Rational(1, 12)},
             {"XYX", Rational(-1, 6)},
             {"YXX", Rational(1, 12)},
             {"XYY", Rational(1, 12)},
             {"YXY", Rational(-1, 6)},
             {"YYX", Rational(1, 12)},
         })
        expected.add_term(word_from_string(w), c);
    EXPECT_EQ(expand_lie(phi_m(3)), expected);
}

TEST(Phi, ThreeVariables)
{
    LieExpr phi2{{nc({0, 1}), Rational(1, 2)}, {nc({0, 2}), Rational(1, 2)}, {nc({1, 2}), Rational(1, 2)}};
    EXPECT_EQ(phi_m(2, 3), phi2);

    LieExpr phi3{
        {nc({0, 0, 1}), Rational(1, 12)},  {nc({0, 0, 2}), Rational(1, 12)},  {nc({0, 1, 2}), Rational(1, 3)},
        {nc({1, 0, 1}), Rational(-1, 12)}, {nc({1, 0, 2}), Rational(-1, 6)},  {nc({1, 1, 2}), Rational(1, 12)},
        {nc({2, 0, 2}), Rational(-1, 12)}, {nc({2, 1, 2}), Rational(-1, 12)},
    };
    EXPECT_EQ(expand_lie(phi_m(3, 3)), expand_lie(phi3));
    EXPECT_EQ(expand_lie(phi_m(3, 3)), log_product_words(3, 3));
}

TEST(Phi, OracleTriangle)
{
    for (std::size_t m = 1; m <= 6; ++m) {
        AssocPoly w = expand_lie(phi_m(m));
        EXPECT_EQ(w, expand_lie(dynkin_phi_m(m))) << "m = " << m;
        EXPECT_EQ(w, log_product_words(m)) << "m = " << m;
    }
    for (std::size_t m = 1; m <= 4; ++m)
        EXPECT_EQ(expand_lie(phi_m(m, 3)), log_product_words(m, 3)) << "m = " << m;
}

TEST(Phi, SerialAndParallelAgree)
{
    for (std::size_t m = 1; m <= 7; ++m)
        EXPECT_EQ(phi_m(m), serial::phi_m(m)) << "m = " << m;
    for (std::size_t m = 1; m <= 4; ++m)
        EXPECT_EQ(phi_m(m, 3), serial::phi_m(m, 3)) << "m = " << m;
}

TEST(Phi, ArgumentChecks)
{
    EXPECT_THROW(phi_m(0), std::invalid_argument);
    EXPECT_THROW(phi_m(kMaxGrade + 1), std::invalid_argument);
    EXPECT_THROW(phi_m(3, kMaxAlphabet + 1), std::invalid_argument);
    EXPECT_TRUE(phi_m(3, 1).is_zero());
    EXPECT_EQ(phi_m(1, 1), LieExpr::generator(X));
    EXPECT_THROW(dynkin_phi_m(0), std::invalid_argument);
}

// log(e^X e^Y) = -log(e^-Y e^-X) gives Phi_m(Y, X) = (-1)^(m+1) Phi_m(X, Y).
TEST(Properties, SwapSymmetry)
{
    for (std::size_t m = 1; m <= 7; ++m) {
        AssocPoly w = expand_lie(phi_m(m));
        Rational sign(m % 2 == 1 ? 1 : -1);
        EXPECT_EQ(fixtures::swap_letters(w), w * sign) << "m = " << m;
    }
}

TEST(Properties, SymmetricParity)
{
    for (std::size_t m = 1; m <= 7; ++m) {
        LieExpr psi = sym_bch_m(m);
        if (m % 2 == 0) {
            EXPECT_TRUE(expand_lie(psi).is_zero()) << "m = " << m;
        }
        else {
            EXPECT_FALSE(psi.is_zero()) << "m = " << m;
        }
    }
}

TEST(Symmetric, LowGrades)
{
    EXPECT_EQ(sym_bch_m(1), LieExpr::generator(X) + LieExpr::generator(Y));
    EXPECT_EQ(sym_bch_m(3), (LieExpr{{NestedComm::from_string("XXY"), Rational(-1, 24)},
                                     {NestedComm::from_string("YXY"), Rational(-1, 12)}}));
}

TEST(Symmetric, ThreeVariableRoute)
{
    for (std::size_t m = 1; m <= 5; ++m)
        EXPECT_EQ(expand_lie(sym_bch_m(m)), expand_lie(sym_bch_three_variable(m))) << "m = " << m;
}

TEST(Symmetric, AssemblyChecks)
{
    std::vector<LieExpr> short_list(3);
    EXPECT_THROW(sym_bch_from(5, short_list), std::invalid_argument);
    LieExpr xy{{NestedComm::from_string("XY"), Rational(1)}};
    EXPECT_EQ(ad_power(X, xy, 0), xy);
    EXPECT_EQ(ad_power(X, xy, 2), (LieExpr{{NestedComm::from_string("XXXY"), Rational(1)}}));
}

TEST(Substitution, ScalesAndRenames)
{
    LieExpr xy{{NestedComm::from_string("XY"), Rational(1)}};
    std::vector<Substitution> map{{X, Rational(1, 2)}, {Y, Rational(3)}};
    EXPECT_EQ(scale_substitute(xy, map), xy * Rational(3, 2));
    std::vector<Substitution> swap{{Y, Rational(1)}, {X, Rational(1)}};
    EXPECT_EQ(scale_substitute(xy, swap), xy * Rational(-1));
    std::vector<Substitution> zero{{X, Rational(0)}};
    EXPECT_THROW(scale_substitute(xy, zero), std::invalid_argument);
}
