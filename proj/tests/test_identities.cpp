#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "bch/identities.hpp"
#include "bch/series.hpp"
#include "support.hpp"

using namespace bch;

namespace {

NestedComm nc(const char* s) { return NestedComm::from_string(s); }

std::vector<Rational> coords(const LieExpr& e, std::size_t grade)
{
    std::vector<Rational> v(std::size_t{1} << (grade - 2));
    for (const auto& [k, c] : e)
        v[*commutator_index(k)] = c;
    return v;
}

// Number of Lyndon words of length m over two letters.
std::size_t witt_dimension(std::size_t m)
{
    auto mobius = [](std::size_t n) {
        int mu = 1;
        for (std::size_t p = 2; p * p <= n; ++p) {
            if (n % p)
                continue;
            n /= p;
            if (n % p == 0)
                return 0;
            mu = -mu;
        }
        return n > 1 ? -mu : mu;
    };
    long sum = 0;
    for (std::size_t d = 1; d <= m; ++d)
        if (m % d == 0)
            sum += mobius(d) * (1L << (m / d));
    return static_cast<std::size_t>(sum) / m;
}

bool is_suffix_eliminated(const NestedComm& c, const IdentityCatalog& catalog)
{
    const auto& l = c.leaves();
    for (std::size_t k = 3; k < l.size(); ++k) {
        NestedComm suffix(Word(l.end() - static_cast<long>(k), l.end()));
        const auto& el = catalog.report(k).eliminated;
        if (std::ranges::find(el, suffix) != el.end())
            return true;
    }
    return false;
}

const IdentityCatalog& published_catalog()
{
    static const IdentityCatalog catalog(8, {Orientation::published, true});
    return catalog;
}

}  // namespace

TEST(CommutatorList, OrderAndIndex)
{
    auto list = enumerate_nested(4).entries;
    EXPECT_EQ(list, (std::vector<NestedComm>{nc("XXXY"), nc("YXXY"), nc("XYXY"), nc("YYXY")}));
    EXPECT_EQ(enumerate_nested(2).entries, (std::vector<NestedComm>{nc("XY")}));
    for (std::size_t m = 2; m <= 9; ++m) {
        auto l = enumerate_nested(m).entries;
        ASSERT_EQ(l.size(), std::size_t{1} << (m - 2));
        for (std::size_t i = 0; i < l.size(); ++i)
            EXPECT_EQ(commutator_index(l[i]), i);
    }
    EXPECT_FALSE(commutator_index(nc("X")));
    EXPECT_FALSE(commutator_index(NestedComm(Word{X, Generator{2}})));
    EXPECT_THROW(enumerate_nested(1), std::invalid_argument);
}

TEST(Fixture, GradeFourMatrices)
{
    IdentityReport r = identities_and_basis(4);
    const std::vector<std::vector<int>> a_i = {
        {1, -3, 0, 3, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, -1, 0, 2, 0, 0, -2, 0, 1, 0, 0, 0, 1, 0, 0},
        {0, 0, -1, 0, 2, 0, 0, -2, 0, 1, 0, 0, 0, 0, 1, 0},
        {0, 0, 0, 0, 0, 1, 0, 0, -3, 0, 3, -1, 0, 0, 0, 1},
    };
    const std::vector<std::vector<int>> m_p = {
        {1, -3, 0, 3, 0, 0, -1, 0, 0, 0, 0, 0, 1, 0, 0, 0},
        {0, 0, 1, 0, -2, 0, 0, 2, 0, -1, 0, 0, 0, 0, -1, 0},
        {0, 0, 0, 0, 0, 1, 0, 0, -3, 0, 3, -1, 0, 0, 0, 1},
        {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, -1, 0},
    };
    ASSERT_EQ(r.augmented.rows(), 4u);
    ASSERT_EQ(r.augmented.cols(), 16u);
    ASSERT_EQ(r.reduced.cols(), 16u);
    EXPECT_EQ(r.augmented.left_block, 12u);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 16; ++j) {
            EXPECT_EQ(r.augmented.at(i, j), Rational(a_i[i][j])) << i << "," << j;
            EXPECT_EQ(r.reduced.at(i, j), Rational(m_p[i][j])) << i << "," << j;
        }
    }
    EXPECT_EQ(r.augmented.col_labels.front(), word_from_string("XXXY"));
    EXPECT_EQ(r.augmented.col_labels.back(), word_from_string("YYYX"));

    ASSERT_EQ(r.identities.size(), 1u);
    EXPECT_EQ(r.identities[0], (LieExpr{{nc("YXXY"), 1}, {nc("XYXY"), -1}}));
    EXPECT_EQ(r.basis, (std::vector<NestedComm>{nc("XXXY"), nc("XYXY"), nc("YYXY")}));
    EXPECT_EQ(r.eliminated, (std::vector<NestedComm>{nc("YXXY")}));
    EXPECT_EQ(r.new_identities().size(), 1u);
    EXPECT_EQ(r.lifted_count, 0u);
}

TEST(Identities, TrivialGrades)
{
    IdentityReport r2 = identities_and_basis(2);
    EXPECT_TRUE(r2.identities.empty());
    EXPECT_EQ(r2.basis, (std::vector<NestedComm>{nc("XY")}));
    IdentityReport r3 = identities_and_basis(3);
    EXPECT_TRUE(r3.identities.empty());
    EXPECT_EQ(r3.basis.size(), 2u);
    EXPECT_THROW(identities_and_basis(1), std::invalid_argument);
    EXPECT_THROW(identities_and_basis(kMaxGrade + 1), std::invalid_argument);
}

TEST(Identities, BasisDimensionsAgreeWithWitt)
{
    auto dims = basis_dimensions(10);
    for (std::size_t m = 2; m <= 10; ++m)
        EXPECT_EQ(dims[m - 2], witt_dimension(m)) << "m = " << m;
}

TEST(Identities, ReportInvariants)
{
    for (auto orientation : {Orientation::engine, Orientation::published}) {
        IdentityCatalog catalog(8, {orientation, true});
        for (std::size_t m = 2; m <= 8; ++m) {
            const auto& r = catalog.report(m);
            EXPECT_EQ(r.identities.size() + r.basis.size(), std::size_t{1} << (m - 2));
            EXPECT_EQ(r.eliminated.size(), r.identities.size());
            std::set<NestedComm> basis(r.basis.begin(), r.basis.end());
            for (std::size_t i = 0; i < r.identities.size(); ++i) {
                const auto& id = r.identities[i];
                EXPECT_TRUE(expand_lie(id).is_zero());
                EXPECT_EQ(id.coefficient(r.eliminated[i]), Rational(1));
                for (const auto& [k, c] : id)
                    EXPECT_TRUE(k == r.eliminated[i] || basis.contains(k));
            }
        }
    }
}

TEST(Identities, LiftedEliminationsArePivots)
{
    const auto& catalog = published_catalog();
    for (std::size_t m = 4; m <= 8; ++m) {
        const auto& r = catalog.report(m);
        std::size_t lifted = 0;
        for (const auto& c : r.commutators)
            if (is_suffix_eliminated(c, catalog))
                ++lifted;
        EXPECT_EQ(r.lifted_count, lifted) << "m = " << m;
        for (std::size_t i = 0; i < r.eliminated.size(); ++i)
            EXPECT_EQ(is_suffix_eliminated(r.eliminated[i], catalog), i < r.lifted_count);
        for (const auto& id : r.new_identities())
            for (const auto& [k, c] : id)
                EXPECT_FALSE(is_suffix_eliminated(k, catalog));
    }
}

TEST(Identities, NewIdentityCounts)
{
    const auto& catalog = published_catalog();
    std::vector<std::size_t> fresh;
    for (std::size_t m = 2; m <= 6; ++m)
        fresh.push_back(catalog.report(m).new_identities().size());
    EXPECT_EQ(fresh, (std::vector<std::size_t>{0, 0, 1, 0, 3}));
    EXPECT_EQ(catalog.report(5).lifted_count, 2u);
}

TEST(Identities, GradeSixSpan)
{
    for (auto orientation : {Orientation::engine, Orientation::published}) {
        IdentityReport r = identities_and_basis(6, {orientation, false});
        auto fresh = r.new_identities();
        ASSERT_EQ(fresh.size(), 3u);
        std::vector<std::vector<Rational>> engine, published, both;
        for (const auto& id : fresh)
            engine.push_back(coords(id, 6));
        for (const auto& id : published_grade6_identities()) {
            EXPECT_TRUE(expand_lie(id).is_zero());
            published.push_back(coords(id, 6));
        }
        both = engine;
        both.insert(both.end(), published.begin(), published.end());
        EXPECT_EQ(rank(engine), 3u);
        EXPECT_EQ(rank(published), 3u);
        EXPECT_EQ(rank(both), 3u);
    }
}

TEST(Identities, PublishedOrientation)
{
    const auto& r4 = published_catalog().report(4);
    EXPECT_EQ(r4.eliminated, (std::vector<NestedComm>{nc("YXXY")}));
    const auto& r6 = published_catalog().report(6);
    std::set<NestedComm> fresh_pivots(r6.eliminated.begin() + static_cast<long>(r6.lifted_count), r6.eliminated.end());
    EXPECT_EQ(fresh_pivots, (std::set<NestedComm>{nc("XXXYXY"), nc("XXYYXY"), nc("YXYYXY")}));
}

TEST(Identities, BlockwiseMatchesRecorded)
{
    for (auto orientation : {Orientation::engine, Orientation::published}) {
        IdentityCatalog recorded(8, {orientation, true});
        IdentityCatalog blockwise(8, {orientation, false});
        for (std::size_t m = 2; m <= 8; ++m) {
            const auto& a = recorded.report(m);
            const auto& b = blockwise.report(m);
            EXPECT_EQ(a.basis, b.basis);
            EXPECT_EQ(std::set<NestedComm>(a.eliminated.begin(), a.eliminated.end()),
                      std::set<NestedComm>(b.eliminated.begin(), b.eliminated.end()));
            EXPECT_EQ(a.lifted_count, b.lifted_count);
            EXPECT_TRUE(b.augmented.rows() == 0);
        }
    }
}

TEST(Rewrite, InBasis)
{
    const auto& r6 = published_catalog().report(6);
    LieExpr phi6 = rewrite_in_basis(phi_m(6), r6);
    EXPECT_EQ(phi6.size(), 4u);
    EXPECT_EQ(expand_lie(phi6), expand_lie(phi_m(6)));
    EXPECT_EQ(rewrite_in_basis(phi_m(6), identities_and_basis(6, {Orientation::engine, false})).size(), 5u);
    EXPECT_EQ(rewrite_in_basis(phi6, r6), phi6);
    EXPECT_TRUE(rewrite_in_basis(LieExpr{}, r6).is_zero());
    EXPECT_THROW(rewrite_in_basis(phi_m(5), r6), std::invalid_argument);
}

TEST(Rewrite, LiftedRulesAgreeWithSuffixRules)
{
    const auto& catalog = published_catalog();
    std::mt19937_64 rng(17);
    for (std::size_t m = 4; m <= 7; ++m) {
        for (int trial = 0; trial < 30; ++trial) {
            LieExpr e = fixtures::random_lie(rng, m, 10);
            for (std::size_t k : {4u, 6u})
                EXPECT_EQ(rewrite_with_lifted(e, catalog, k), rewrite_by_suffix_rules(e, catalog, k));
        }
    }
}

TEST(Properties, RewritesPreserveExpansion)
{
    const auto& catalog = published_catalog();
    std::mt19937_64 rng(2024);
    CompactOptions quick;
    quick.budget = 32;
    for (std::size_t m = 2; m <= 7; ++m) {
        const auto& r = catalog.report(m);
        std::set<NestedComm> basis(r.basis.begin(), r.basis.end());
        for (int trial = 0; trial < 100; ++trial) {
            LieExpr e = fixtures::random_lie(rng, m, 8);
            AssocPoly w = expand_lie(e);
            LieExpr full = rewrite_in_basis(e, r);
            EXPECT_EQ(expand_lie(full), w);
            for (const auto& [k, c] : full)
                EXPECT_TRUE(basis.contains(k));
            EXPECT_EQ(expand_lie(rewrite_with_lifted(e, catalog, 4)), w);
            EXPECT_EQ(expand_lie(rewrite_with_lifted(e, catalog, 6)), w);
            LieExpr compact = compact_reduce(e, r, quick);
            EXPECT_EQ(expand_lie(compact), w);
            EXPECT_LE(compact.size(), full.size());
        }
    }
}
