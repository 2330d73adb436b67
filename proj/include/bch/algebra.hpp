#pragma once

// Free associative algebra (words) and right-nested commutators (Lie side),
// with the conversions between them.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "bch/rational.hpp"

namespace bch {

struct Generator {
    std::uint8_t index = 0;

    friend auto operator<=>(Generator, Generator) = default;
};

inline constexpr Generator X{0};
inline constexpr Generator Y{1};

/// Largest grade and alphabet size the library accepts. Permutation sums at
/// grade 16 are already far out of reach.
inline constexpr std::size_t kMaxGrade = 16;
inline constexpr std::size_t kMaxAlphabet = 16;

using Word = std::vector<Generator>;

/// Name of generator `g` in an alphabet of `alphabet_size` letters:
/// X, Y for two letters, X1..Xn otherwise.
std::string generator_name(Generator g, std::size_t alphabet_size);
/// Inverse of generator_name; throws std::invalid_argument.
Generator parse_generator(std::string_view name, std::size_t alphabet_size);

/// Letters "XYXY" -> word over {X, Y}. Test and fixture convenience.
Word word_from_string(std::string_view letters);
std::string word_to_string(const Word& w, std::size_t alphabet_size = 2);

/// Element of the free associative algebra: Word -> coefficient, no zeros
/// stored, iterated in lexicographic word order.
class AssocPoly {
public:
    using Terms = std::map<Word, Rational>;

    AssocPoly() = default;
    AssocPoly(std::initializer_list<std::pair<const Word, Rational>> terms);

    static AssocPoly unit();
    static AssocPoly generator(Generator g);

    void add_term(const Word& w, const Rational& c);
    Rational coefficient(const Word& w) const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    /// Grade of a homogeneous polynomial; nullopt when empty or mixed.
    std::optional<std::size_t> homogeneous_grade() const;
    /// Part of grade exactly `grade`.
    AssocPoly graded_part(std::size_t grade) const;
    /// Drops every word longer than `max_grade`.
    AssocPoly truncated(std::size_t max_grade) const;

    AssocPoly& operator+=(const AssocPoly& o);
    AssocPoly& operator-=(const AssocPoly& o);
    AssocPoly& operator*=(const Rational& c);
    friend AssocPoly operator+(AssocPoly a, const AssocPoly& b) { return a += b; }
    friend AssocPoly operator-(AssocPoly a, const AssocPoly& b) { return a -= b; }
    friend AssocPoly operator*(AssocPoly a, const Rational& c) { return a *= c; }
    friend AssocPoly operator*(const Rational& c, AssocPoly a) { return a *= c; }
    /// Concatenation product.
    friend AssocPoly operator*(const AssocPoly& a, const AssocPoly& b);

    friend bool operator==(const AssocPoly&, const AssocPoly&) = default;

private:
    Terms terms_;
};

/// Product truncated at `max_grade`, skipping the work on longer words.
AssocPoly multiply_truncated(const AssocPoly& a, const AssocPoly& b, std::size_t max_grade);

/// Right-nested commutator [l1,[l2,...,[l(k-1),lk]...]] identified by its
/// leaves. Canonical form has l(k-1) < lk. A single leaf is the degenerate
/// grade-1 element (a bare generator).
class NestedComm {
public:
    NestedComm() = default;

    /// Builds from leaves already in canonical form; throws
    /// std::invalid_argument if they are not.
    explicit NestedComm(Word leaves);
    static NestedComm from_string(std::string_view letters) { return NestedComm(word_from_string(letters)); }

    const Word& leaves() const { return leaves_; }
    std::size_t grade() const { return leaves_.size(); }

    friend auto operator<=>(const NestedComm&, const NestedComm&) = default;

private:
    Word leaves_;
};

/// Result of canonicalizing a raw leaf sequence with a coefficient.
struct CanonicalTerm {
    NestedComm comm;
    Rational coeff;
};

/// Applies [z,z] = 0 and antisymmetry of the innermost pair. Returns nullopt
/// when the bracket vanishes. A single leaf is returned as is.
std::optional<CanonicalTerm> canonicalize(std::span<const Generator> raw_leaves, const Rational& coeff);

/// Linear combination of canonical right-nested commutators.
class LieExpr {
public:
    using Terms = std::map<NestedComm, Rational>;

    LieExpr() = default;
    LieExpr(std::initializer_list<std::pair<const NestedComm, Rational>> terms);

    static LieExpr generator(Generator g);

    /// Adds c times the bracket with the given raw leaves (canonicalized).
    void add_raw(std::span<const Generator> raw_leaves, const Rational& c);
    /// Adds c times an already canonical bracket.
    void add_term(const NestedComm& comm, const Rational& c);
    Rational coefficient(const NestedComm& comm) const;

    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const Terms& terms() const { return terms_; }
    auto begin() const { return terms_.begin(); }
    auto end() const { return terms_.end(); }

    std::optional<std::size_t> homogeneous_grade() const;
    LieExpr graded_part(std::size_t grade) const;

    LieExpr& operator+=(const LieExpr& o);
    LieExpr& operator-=(const LieExpr& o);
    LieExpr& operator*=(const Rational& c);
    friend LieExpr operator+(LieExpr a, const LieExpr& b) { return a += b; }
    friend LieExpr operator-(LieExpr a, const LieExpr& b) { return a -= b; }
    friend LieExpr operator*(LieExpr a, const Rational& c) { return a *= c; }
    friend LieExpr operator*(const Rational& c, LieExpr a) { return a *= c; }

    friend bool operator==(const LieExpr&, const LieExpr&) = default;

private:
    Terms terms_;
};

/// Image of a right-nested bracket in the free associative algebra.
AssocPoly expand_nested(const NestedComm& c);
/// Linear extension of expand_nested.
AssocPoly expand_lie(const LieExpr& e);

/// Right-to-left bracketing r(a1...an) = [a1,[a2,...,[a(n-1),an]...]], extended
/// linearly. For a homogeneous Lie element P of grade n, r(P) = n P.
/// Throws std::invalid_argument on non-homogeneous input.
LieExpr dsw_bracketing(const AssocPoly& p);

/// [g, e] for a single generator g, canonicalized.
LieExpr bracket(Generator g, const LieExpr& e);

/// Alphabet size needed to hold every letter of `e` (at least 2).
std::size_t alphabet_size(const LieExpr& e);

}  // namespace bch
