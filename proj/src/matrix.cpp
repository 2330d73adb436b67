#include "bch/matrix.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace bch {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

ExactMatrix ExactMatrix::identity(std::size_t n)
{
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = Rational(1);
    m.left_block = n;
    return m;
}

ExactMatrix ExactMatrix::augmented_with_identity() const
{
    ExactMatrix m(rows_, cols_ + rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c)
            m.at(r, c) = at(r, c);
        m.at(r, cols_ + r) = Rational(1);
    }
    m.row_labels = row_labels;
    m.col_labels = col_labels;
    m.left_block = cols_;
    return m;
}

namespace {

// row_dst -= factor * row_src, touching only the nonzero entries of row_src.
void axpy(std::span<Rational> dst, std::span<const Rational> src, const Rational& factor,
          std::span<const std::size_t> src_support)
{
    for (std::size_t c : src_support)
        dst[c] -= factor * src[c];
}

template <bool Parallel>
ExactMatrix rref_impl(ExactMatrix a)
{
    const std::size_t rows = a.rows();
    const std::size_t cols = a.cols();
    std::size_t next = 0;
    std::vector<std::size_t> support;
    for (std::size_t c = 0; c < cols && next < rows; ++c) {
        std::size_t p = next;
        while (p < rows && a.at(p, c).is_zero())
            ++p;
        if (p == rows)
            continue;
        if (p != next) {
            auto rp = a.row(p);
            auto rn = a.row(next);
            std::swap_ranges(rp.begin(), rp.end(), rn.begin());
            if (!a.row_labels.empty())
                std::swap(a.row_labels[p], a.row_labels[next]);
        }
        Rational inv = a.at(next, c).reciprocal();
        support.clear();
        for (std::size_t j = c; j < cols; ++j) {
            if (!a.at(next, j).is_zero()) {
                a.at(next, j) *= inv;
                support.push_back(j);
            }
        }
        const auto pivot_row = a.row(next);
        const long n_rows = static_cast<long>(rows);
        const std::size_t pivot_index = next;
        if constexpr (Parallel) {
#pragma omp parallel for schedule(dynamic, 4)
            for (long r = 0; r < n_rows; ++r) {
                auto ur = static_cast<std::size_t>(r);
                if (ur == pivot_index || a.at(ur, c).is_zero())
                    continue;
                Rational f = a.at(ur, c);
                axpy(a.row(ur), pivot_row, f, support);
            }
        }
        else {
            for (std::size_t r = 0; r < rows; ++r) {
                if (r == pivot_index || a.at(r, c).is_zero())
                    continue;
                Rational f = a.at(r, c);
                axpy(a.row(r), pivot_row, f, support);
            }
        }
        ++next;
    }
    return a;
}

}  // namespace

ExactMatrix gauss_jordan(ExactMatrix a)
{
    return rref_impl<true>(std::move(a));
}

namespace serial {
ExactMatrix gauss_jordan(ExactMatrix a)
{
    return rref_impl<false>(std::move(a));
}
}  // namespace serial

std::vector<std::size_t> pivot_columns(const ExactMatrix& rref)
{
    std::vector<std::size_t> piv;
    for (std::size_t r = 0; r < rref.rows(); ++r) {
        for (std::size_t c = 0; c < rref.cols(); ++c) {
            if (!rref.at(r, c).is_zero()) {
                piv.push_back(c);
                break;
            }
        }
    }
    return piv;
}

RowReduction reduce_rows(std::vector<std::vector<Rational>> rows, std::span<const std::size_t> column_order)
{
    RowReduction out;
    std::size_t next = 0;
    for (std::size_t c : column_order) {
        if (next == rows.size())
            break;
        std::size_t p = next;
        while (p < rows.size() && rows[p][c].is_zero())
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[next]);
        auto& pr = rows[next];
        Rational inv = pr[c].reciprocal();
        for (auto& v : pr)
            if (!v.is_zero())
                v *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == next || rows[r][c].is_zero())
                continue;
            Rational f = rows[r][c];
            for (std::size_t j = 0; j < pr.size(); ++j)
                if (!pr[j].is_zero())
                    rows[r][j] -= f * pr[j];
        }
        out.pivots.push_back(c);
        ++next;
    }
    rows.resize(next);
    out.rows = std::move(rows);
    return out;
}

std::size_t rank(std::vector<std::vector<Rational>> rows)
{
    if (rows.empty())
        return 0;
    std::vector<std::size_t> order(rows.front().size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    return reduce_rows(std::move(rows), order).rows.size();
}

}  // namespace bch
