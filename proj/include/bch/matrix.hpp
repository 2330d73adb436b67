#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bch/algebra.hpp"
#include "bch/rational.hpp"

namespace bch {

/// Dense row-major matrix of rationals. Rows may be labelled by commutators
/// and the leading columns by words; an augmented matrix (A|I) keeps
/// `left_block` = number of columns of A.
class ExactMatrix {
public:
    ExactMatrix() = default;
    ExactMatrix(std::size_t rows, std::size_t cols);

    static ExactMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    /// [A | I] with the same row labels.
    ExactMatrix augmented_with_identity() const;

    std::vector<NestedComm> row_labels;
    std::vector<Word> col_labels;
    std::size_t left_block = 0;

    friend bool operator==(const ExactMatrix& a, const ExactMatrix& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row-echelon form. Columns are scanned left to right, the pivot
/// row is the first remaining row with a nonzero entry, pivot rows are
/// scaled to a leading 1 and moved up. Row updates run in parallel.
ExactMatrix gauss_jordan(ExactMatrix a);

/// Column indices of the leading entries of an RREF matrix, one per nonzero row.
std::vector<std::size_t> pivot_columns(const ExactMatrix& rref);

/// Rank of a set of row vectors (exact).
std::size_t rank(std::vector<std::vector<Rational>> rows);

/// RREF of a list of dense vectors with the columns visited in
/// `column_order` (a permutation of 0..width-1). Returns the nonzero rows
/// and, per row, its pivot column (an index into the original columns).
struct RowReduction {
    std::vector<std::vector<Rational>> rows;
    std::vector<std::size_t> pivots;
};
RowReduction reduce_rows(std::vector<std::vector<Rational>> rows, std::span<const std::size_t> column_order);

namespace serial {
ExactMatrix gauss_jordan(ExactMatrix a);
}  // namespace serial

}  // namespace bch
