#pragma once

// Homogeneous terms of log(e^{X_1} ... e^{X_n}) and of the symmetric product
// e^{X/2} e^{Y} e^{X/2}, plus two independent routes used as oracles.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "bch/algebra.hpp"
#include "bch/rational.hpp"

namespace bch {

/// Multidegree (i_1, ..., i_n) with sum m and its weight 1/(i_1! ... i_n!).
struct Polarization {
    std::vector<std::size_t> multidegree;
    Rational weight;

    /// Arguments X_1 repeated i_1 times, then X_2 repeated i_2 times, ...
    std::vector<Generator> arguments() const;
};

/// All multidegrees of total `grade` over `alphabet` generators, in
/// decreasing lexicographic order of the multidegree.
std::vector<Polarization> polarizations(std::size_t grade, std::size_t alphabet);

/// Grade-m term of the n-variable BCH series, from the right-nested form of
/// the multilinear part, polarized and merged. Grade 1 is X_1 + ... + X_n.
LieExpr phi_m(std::size_t grade, std::size_t alphabet = 2);

namespace serial {
/// Same as bch::phi_m but with the serial permutation sums and a serial loop
/// over the polarization summands.
LieExpr phi_m(std::size_t grade, std::size_t alphabet = 2);
}  // namespace serial

/// Dynkin's presentation (two variables):
///   (1/m) sum_k (-1)^(k-1)/k sum [X^p1 Y^q1 ... X^pk Y^qk] / (p1! q1! ... pk! qk!)
/// over blocks with p_i + q_i > 0 summing to m.
LieExpr dynkin_phi_m(std::size_t grade);

/// Grade-m part of log(e^{X_1} ... e^{X_n}) computed by truncated power
/// series in the free associative algebra.
AssocPoly log_product_words(std::size_t grade, std::size_t alphabet = 2);

/// ad_g^k e = [g,[g,...,[g, e]...]], canonicalized. k = 0 returns e.
LieExpr ad_power(Generator g, const LieExpr& e, std::size_t k);

/// Psi_m = sum_{k=0}^{m-1} (-1)^k / (2^k k!) ad_X^k Phi_{m-k}, where
/// phis[j] holds Phi_j (phis[0] is ignored). Requires phis.size() > grade - 1.
LieExpr sym_bch_from(std::size_t grade, std::span<const LieExpr> phis);

/// Grade-m term of the symmetric BCH series using phi_m for the inputs.
LieExpr sym_bch_m(std::size_t grade);

/// Target of a generator under scale_substitute.
struct Substitution {
    Generator target;
    Rational factor;
};

/// Replaces each leaf g by factor(g) * target(g) and multiplies out.
/// `map[g.index]` is the image of g; missing entries are the identity.
/// Throws std::invalid_argument on a zero factor.
LieExpr scale_substitute(const LieExpr& e, std::span<const Substitution> map);

/// Psi_m by the three-variable route Phi(X/2, Y, X/2), grade m. Test oracle.
LieExpr sym_bch_three_variable(std::size_t grade);

}  // namespace bch
