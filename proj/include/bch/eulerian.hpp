#pragma once

// Permutations, descents and the multilinear part of the BCH series.
//
//   phi_n(a_1..a_n) = sum_{s in S_n} c(n, d_s) a_s(1) ... a_s(n)
//   c(n, d)         = (-1)^d / (n * C(n-1, d))
//
// where d_s counts descents of s. In right-nested form only the (n-1)!
// permutations fixing the last argument are needed, each contributing
// c(n, d_s) [a_s(1),[...,[a_s(n-1), a_n]...]].

#include <cstddef>
#include <span>
#include <vector>

#include "bch/algebra.hpp"
#include "bch/rational.hpp"

namespace bch {

class Permutation {
public:
    /// One-based images (s(1), ..., s(n)); throws std::invalid_argument if
    /// they are not a permutation of 1..n.
    explicit Permutation(std::vector<unsigned> images);
    static Permutation identity(std::size_t n);

    std::size_t size() const { return images_.size(); }
    const std::vector<unsigned>& images() const { return images_; }

private:
    std::vector<unsigned> images_;
};

/// Number of positions i with s(i) > s(i+1).
std::size_t descents(const Permutation& p);
std::size_t descents(std::span<const unsigned> images);

/// (-1)^d / (n C(n-1, d)). Throws std::invalid_argument unless n >= 1 and d < n.
Rational eulerian_coeff(std::size_t n, std::size_t d);

/// Word form of the multilinear part, evaluated at the (possibly repeated)
/// arguments. Coefficients of coinciding words are merged.
AssocPoly varphi_words(std::span<const Generator> args);

/// Right-nested form with the last argument as the fixed innermost leaf.
/// Requires at least two arguments.
LieExpr varphi_nested(std::span<const Generator> args);

namespace serial {

/// Reference implementations: one pass over every permutation, rational
/// accumulation straight into the result map. Kept for testing the
/// parallel kernels above.
AssocPoly varphi_words(std::span<const Generator> args);
LieExpr varphi_nested(std::span<const Generator> args);

}  // namespace serial

}  // namespace bch
