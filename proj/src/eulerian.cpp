#include "bch/eulerian.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include <omp.h>

namespace bch {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size() + 1, false);
    for (unsigned v : images_) {
        if (v < 1 || v > images_.size() || seen[v])
            throw std::invalid_argument("Permutation: images must be a permutation of 1..n");
        seen[v] = true;
    }
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<unsigned> im(n);
    std::iota(im.begin(), im.end(), 1u);
    return Permutation(std::move(im));
}

std::size_t descents(std::span<const unsigned> images)
{
    std::size_t d = 0;
    for (std::size_t i = 0; i + 1 < images.size(); ++i)
        if (images[i] > images[i + 1])
            ++d;
    return d;
}

std::size_t descents(const Permutation& p)
{
    return descents(p.images());
}

Rational eulerian_coeff(std::size_t n, std::size_t d)
{
    if (n == 0 || d >= n)
        throw std::invalid_argument("eulerian_coeff: need n >= 1 and d < n");
    Rational c = (Rational(static_cast<std::int64_t>(n)) * binomial(static_cast<unsigned>(n - 1), static_cast<unsigned>(d))).reciprocal();
    return d % 2 ? -c : c;
}

namespace {

void check_args(std::span<const Generator> args, std::size_t min_len, const char* who)
{
    if (args.size() < min_len)
        throw std::invalid_argument(std::string(who) + ": too few arguments");
    if (args.size() > kMaxGrade)
        throw std::invalid_argument(std::string(who) + ": grade above kMaxGrade");
    for (Generator g : args)
        if (g.index >= kMaxAlphabet)
            throw std::invalid_argument(std::string(who) + ": generator index above kMaxAlphabet");
}

// Words of length <= 16 over <= 16 letters, packed 4 bits per letter.
using PackedWord = std::uint64_t;
using DescentCounts = std::array<std::int64_t, kMaxGrade>;
using CountMap = std::unordered_map<PackedWord, DescentCounts>;

Word unpack(PackedWord key, std::size_t len)
{
    Word w(len);
    for (std::size_t i = len; i-- > 0;) {
        w[i] = Generator{static_cast<std::uint8_t>(key & 0xF)};
        key >>= 4;
    }
    return w;
}

// Sums over permutations s of {0..k-1}, grouped by (resulting word, d_s).
// `nested` fixes args[k] as innermost leaf and applies the bracket
// canonicalization; otherwise the words are plain products.
// Parallel over the value of s(1); each thread owns a local map.
CountMap count_by_descent(std::span<const Generator> args, std::size_t k, bool nested)
{
    CountMap total;
    const int chunks = static_cast<int>(k);

#pragma omp parallel
    {
        CountMap local;
        std::vector<unsigned> perm(k);
        std::vector<unsigned> rest;

#pragma omp for schedule(dynamic, 1) nowait
        for (int first = 0; first < chunks; ++first) {
            rest.clear();
            for (unsigned v = 0; v < k; ++v)
                if (v != static_cast<unsigned>(first))
                    rest.push_back(v);
            do {
                perm[0] = static_cast<unsigned>(first);
                std::copy(rest.begin(), rest.end(), perm.begin() + 1);
                std::size_t d = descents(perm);

                PackedWord key = 0;
                int sign = 1;
                for (std::size_t i = 0; i < k; ++i)
                    key = (key << 4) | args[perm[i]].index;
                if (nested) {
                    Generator inner = args[k];
                    Generator last = args[perm[k - 1]];
                    if (last == inner)
                        continue;
                    if (inner < last) {
                        key = ((key & ~PackedWord{0xF}) | inner.index) << 4 | last.index;
                        sign = -1;
                    }
                    else {
                        key = (key << 4) | inner.index;
                    }
                }
                local[key][d] += sign;
            } while (std::next_permutation(rest.begin(), rest.end()));
        }

#pragma omp critical(bch_descent_merge)
        for (const auto& [key, counts] : local) {
            auto& dst = total[key];
            for (std::size_t d = 0; d < kMaxGrade; ++d)
                dst[d] += counts[d];
        }
    }
    return total;
}

Rational combine(const DescentCounts& counts, std::size_t n)
{
    Rational c;
    for (std::size_t d = 0; d < n; ++d)
        if (counts[d] != 0)
            c += Rational(counts[d]) * eulerian_coeff(n, d);
    return c;
}

}  // namespace

AssocPoly varphi_words(std::span<const Generator> args)
{
    check_args(args, 1, "varphi_words");
    const std::size_t n = args.size();
    AssocPoly out;
    for (const auto& [key, counts] : count_by_descent(args, n, false))
        out.add_term(unpack(key, n), combine(counts, n));
    return out;
}

LieExpr varphi_nested(std::span<const Generator> args)
{
    check_args(args, 2, "varphi_nested");
    const std::size_t n = args.size();
    LieExpr out;
    for (const auto& [key, counts] : count_by_descent(args, n - 1, true))
        out.add_term(NestedComm(unpack(key, n)), combine(counts, n));
    return out;
}

namespace serial {

AssocPoly varphi_words(std::span<const Generator> args)
{
    check_args(args, 1, "varphi_words");
    const std::size_t n = args.size();
    std::vector<unsigned> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    AssocPoly out;
    Word w(n);
    do {
        for (std::size_t i = 0; i < n; ++i)
            w[i] = args[perm[i]];
        out.add_term(w, eulerian_coeff(n, descents(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

LieExpr varphi_nested(std::span<const Generator> args)
{
    check_args(args, 2, "varphi_nested");
    const std::size_t n = args.size();
    std::vector<unsigned> perm(n - 1);
    std::iota(perm.begin(), perm.end(), 0u);
    LieExpr out;
    Word leaves(n);
    leaves[n - 1] = args[n - 1];
    do {
        for (std::size_t i = 0; i + 1 < n; ++i)
            leaves[i] = args[perm[i]];
        out.add_raw(leaves, eulerian_coeff(n, descents(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

}  // namespace serial

}  // namespace bch
