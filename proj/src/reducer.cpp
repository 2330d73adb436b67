#include <optional>
#include <stdexcept>

#include "bch/identities.hpp"
#include "bch/series.hpp"

namespace bch {

SeriesReducer::SeriesReducer(std::size_t max_grade, CompactOptions compact)
    : max_grade_(max_grade), compact_(std::move(compact))
{
    if (max_grade < 1 || max_grade > kMaxGrade)
        throw std::invalid_argument("SeriesReducer: max grade must be in 1..kMaxGrade");
}

const LieExpr& SeriesReducer::phi(std::size_t grade)
{
    if (grade < 1 || grade > max_grade_)
        throw std::out_of_range("SeriesReducer: grade out of range");
    auto it = phi_.find(grade);
    if (it == phi_.end())
        it = phi_.emplace(grade, phi_m(grade, 2)).first;
    return it->second;
}

const IdentityCatalog& SeriesReducer::catalog()
{
    if (!catalog_)
        catalog_ = std::make_unique<IdentityCatalog>(std::max<std::size_t>(max_grade_, 2),
                                                     IdentityOptions{Orientation::published, false});
    return *catalog_;
}

LieExpr SeriesReducer::reduce(const LieExpr& e, std::size_t grade, Regime regime)
{
    if (grade < 2 || e.is_zero() || regime == Regime::none)
        return e;
    switch (regime) {
    case Regime::grade4:
        return rewrite_with_lifted(e, catalog(), 4);
    case Regime::grade6:
        return rewrite_with_lifted(e, catalog(), 6);
    case Regime::full:
        return rewrite_in_basis(e, catalog().report(grade));
    case Regime::compact: {
        CompactOptions opts = compact_;
        opts.seeds.push_back(rewrite_with_lifted(e, catalog(), 6));
        return compact_reduce(e, catalog().report(grade), opts);
    }
    case Regime::none:
        break;
    }
    return e;
}

const LieExpr& SeriesReducer::phi_reduced(std::size_t grade, Regime regime)
{
    auto key = std::make_pair(grade, regime);
    auto it = reduced_.find(key);
    if (it == reduced_.end())
        it = reduced_.emplace(key, reduce(phi(grade), grade, regime)).first;
    return it->second;
}

LieExpr SeriesReducer::psi(std::size_t grade, Regime regime, bool reduce_result)
{
    return reduce_result ? psi(grade, regime, regime) : psi(grade, regime, std::nullopt);
}

LieExpr SeriesReducer::psi(std::size_t grade, Regime inputs, std::optional<Regime> result)
{
    std::vector<LieExpr> phis(grade + 1);
    for (std::size_t j = 1; j < grade; ++j)
        phis[j] = phi_reduced(j, inputs);
    // Everything but the k = 0 term; with compact inputs the top Phi is
    // compacted towards cancellation against it.
    LieExpr rest = sym_bch_from(grade, phis);
    if (inputs == Regime::compact && grade >= 2 && !rest.is_zero()) {
        CompactOptions opts = compact_;
        opts.seeds.push_back(phi_reduced(grade, Regime::compact));
        opts.offset = rest.graded_part(grade);
        phis[grade] = compact_reduce(phi(grade), catalog().report(grade), opts);
    }
    else {
        phis[grade] = phi_reduced(grade, inputs);
    }
    LieExpr assembled = sym_bch_from(grade, phis);
    if (!result)
        return assembled;
    LieExpr reduced = reduce(assembled, grade, *result);
    return reduced.size() <= assembled.size() || *result == Regime::none ? reduced : assembled;
}

std::vector<std::size_t> table_counts(SeriesReducer& reducer, std::size_t max_grade, Regime regime, Variant variant)
{
    std::vector<std::size_t> counts;
    for (std::size_t m = 2; m <= max_grade; ++m) {
        if (variant == Variant::plain)
            counts.push_back(reducer.phi_reduced(m, regime).size());
        else
            counts.push_back(reducer.psi(m, regime).size());
    }
    return counts;
}

std::vector<std::size_t> table_counts(std::size_t max_grade, Regime regime, Variant variant)
{
    SeriesReducer reducer(max_grade);
    return table_counts(reducer, max_grade, regime, variant);
}

std::vector<std::size_t> basis_dimensions(std::size_t max_grade)
{
    IdentityCatalog catalog(max_grade, {Orientation::engine, false});
    std::vector<std::size_t> dims;
    for (std::size_t m = 2; m <= max_grade; ++m)
        dims.push_back(catalog.report(m).basis.size());
    return dims;
}

}  // namespace bch
