#include <gtest/gtest.h>

#include "bch/identities.hpp"
#include "bch/series.hpp"
#include "support.hpp"

using namespace bch;

namespace {

const IdentityCatalog& catalog()
{
    static const IdentityCatalog c(8, {Orientation::published, false});
    return c;
}

}  // namespace

TEST(Compact, NeverWorseThanSeeds)
{
    for (std::size_t m = 4; m <= 8; ++m) {
        const auto& r = catalog().report(m);
        LieExpr phi = phi_m(m);
        LieExpr g6 = rewrite_with_lifted(phi, catalog(), 6);
        CompactOptions opts;
        opts.budget = 64;
        opts.seeds = {g6};
        LieExpr c = compact_reduce(phi, r, opts);
        EXPECT_EQ(expand_lie(c), expand_lie(phi));
        EXPECT_LE(c.size(), g6.size());
        EXPECT_LE(c.size(), rewrite_in_basis(phi, r).size());
    }
}

TEST(Compact, DeterministicForFixedSeed)
{
    const auto& r = catalog().report(8);
    LieExpr phi = phi_m(8);
    CompactOptions opts;
    opts.budget = 256;
    opts.seed = 42;
    EXPECT_EQ(compact_reduce(phi, r, opts), compact_reduce(phi, r, opts));
}

TEST(Compact, GradeEightReachesThirteen)
{
    EXPECT_EQ(compact_reduce(phi_m(8), 8).size(), 13u);
}

TEST(Compact, RejectsForeignSeed)
{
    const auto& r = catalog().report(6);
    CompactOptions opts;
    opts.seeds = {phi_m(6) * Rational(2)};
    EXPECT_THROW(compact_reduce(phi_m(6), r, opts), std::invalid_argument);
}

TEST(Compact, ZeroAndLowGrades)
{
    EXPECT_TRUE(compact_reduce(LieExpr{}, 6).is_zero());
    EXPECT_EQ(compact_reduce(phi_m(3), 3), phi_m(3));
    // A combination of identities compacts to nothing.
    const auto& r = catalog().report(6);
    LieExpr e = r.identities[0] * Rational(3) - r.identities[1];
    EXPECT_TRUE(compact_reduce(e, r).is_zero());
}

TEST(Compact, OffsetBreaksTies)
{
    const auto& r = catalog().report(6);
    LieExpr phi = phi_m(6);
    LieExpr plain = compact_reduce(phi, r);
    // Several fewest-term representations exist; the offset picks the one
    // cancelling against it.
    CompactOptions opts;
    opts.seeds = {plain};
    opts.offset = plain * Rational(-1);
    LieExpr tuned = compact_reduce(phi, r, opts);
    EXPECT_EQ(tuned.size(), plain.size());
    EXPECT_TRUE((tuned + opts.offset).is_zero());
}

TEST(Reducer, RegimeRows)
{
    SeriesReducer reducer(8);
    EXPECT_EQ(table_counts(reducer, 8, Regime::none), (std::vector<std::size_t>{1, 2, 1, 8, 7, 32, 31}));
    EXPECT_EQ(table_counts(reducer, 8, Regime::grade4), (std::vector<std::size_t>{1, 2, 1, 6, 5, 24, 23}));
    EXPECT_EQ(table_counts(reducer, 8, Regime::grade6), (std::vector<std::size_t>{1, 2, 1, 6, 4, 18, 17}));
    auto compact = table_counts(reducer, 8, Regime::compact);
    auto full = table_counts(reducer, 8, Regime::full);
    for (std::size_t i = 0; i < compact.size(); ++i)
        EXPECT_LE(compact[i], full[i]);
    for (std::size_t m = 2; m <= 8; ++m)
        for (auto regime : {Regime::grade4, Regime::grade6, Regime::full, Regime::compact})
            EXPECT_EQ(expand_lie(reducer.phi_reduced(m, regime)), expand_lie(reducer.phi(m)));
}

TEST(Reducer, SymmetricTerms)
{
    SeriesReducer reducer(7);
    for (std::size_t m = 1; m <= 7; ++m) {
        AssocPoly w = expand_lie(sym_bch_m(m));
        for (auto regime : {Regime::none, Regime::grade6, Regime::compact}) {
            EXPECT_EQ(expand_lie(reducer.psi(m, regime, false)), w);
            EXPECT_EQ(expand_lie(reducer.psi(m, regime)), w);
        }
        EXPECT_EQ(expand_lie(reducer.psi(m, Regime::compact, Regime::full)), w);
        if (m % 2 == 0) {
            EXPECT_TRUE(reducer.psi(m, Regime::grade6).is_zero());
        }
    }
    EXPECT_THROW(reducer.phi(8), std::out_of_range);
}

TEST(Reducer, ParseNames)
{
    EXPECT_EQ(parse_regime("grade6"), Regime::grade6);
    EXPECT_EQ(to_string(Regime::compact), "compact");
    EXPECT_EQ(parse_variant("symmetric"), Variant::symmetric);
    EXPECT_THROW(parse_regime("grade5"), std::invalid_argument);
}
