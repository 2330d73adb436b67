#pragma once

#include <random>

#include "bch/identities.hpp"

namespace bch::fixtures {

/// Random homogeneous two-letter Lie polynomial of the given grade with up
/// to `max_terms` terms and small rational coefficients.
inline LieExpr random_lie(std::mt19937_64& rng, std::size_t grade, std::size_t max_terms = 6)
{
    auto comms = enumerate_nested(grade).entries;
    std::uniform_int_distribution<std::size_t> pick(0, comms.size() - 1);
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 6);
    std::uniform_int_distribution<std::size_t> count(1, max_terms);
    LieExpr e;
    for (std::size_t i = count(rng); i > 0; --i)
        e.add_term(comms[pick(rng)], Rational(num(rng), den(rng)));
    return e;
}

/// Swaps X and Y in every leaf and re-canonicalizes.
inline LieExpr swap_letters(const LieExpr& e)
{
    LieExpr out;
    for (const auto& [k, c] : e) {
        Word w = k.leaves();
        for (auto& g : w)
            g = g == X ? Y : X;
        out.add_raw(w, c);
    }
    return out;
}

inline AssocPoly swap_letters(const AssocPoly& p)
{
    AssocPoly out;
    for (const auto& [w, c] : p) {
        Word s = w;
        for (auto& g : s)
            g = g == X ? Y : X;
        out.add_term(s, c);
    }
    return out;
}

}  // namespace bch::fixtures
