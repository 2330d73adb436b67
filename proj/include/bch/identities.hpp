#pragma once

// Identities among right-nested commutators in two letters, bases of the
// homogeneous Lie subspaces made of right-nested commutators, and the
// rewriting/compaction of Lie polynomials against them.
//
// Per grade m the commutators [a1,[a2,...,[X,Y]...]] are expanded into words,
// the augmented matrix (A | I) is brought to reduced row-echelon form (M | P),
// and the rows of P that sit next to zero rows of M are the identities.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "bch/algebra.hpp"
#include "bch/matrix.hpp"

namespace bch {

/// Raised when a computed identity or rewrite fails its word-expansion check.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// All canonical grade-m commutators over {X, Y}: leaves in {X,Y}^(m-2)
/// followed by X, Y. Ordered lexicographically on the reversed leaf
/// sequence, so for m = 4: [X,[X,[X,Y]]], [Y,[X,[X,Y]]], [X,[Y,[X,Y]]],
/// [Y,[Y,[X,Y]]].
struct CommutatorList {
    std::size_t grade = 0;
    std::vector<NestedComm> entries;
};

CommutatorList enumerate_nested(std::size_t grade);

/// Position of `c` in enumerate_nested(c.grade()); nullopt for anything that
/// is not a canonical two-letter commutator of grade >= 2.
std::optional<std::size_t> commutator_index(const NestedComm& c);

/// Which commutator each identity eliminates when there is a choice.
///  - engine: first commutator in list order (plain Gauss-Jordan pivots).
///  - published: prefer the eliminations of the classical grade-4 and grade-6
///    identities, [Y,X,X,Y] and [X,X,X,Y,X,Y], [X,X,Y,Y,X,Y], [Y,X,Y,Y,X,Y].
enum class Orientation { engine, published };

struct IdentityOptions {
    Orientation orientation = Orientation::engine;
    /// Keep (A|I) and (M|P). When false the elimination runs blockwise per
    /// letter content, which gives the same identities.
    bool record_matrices = true;
};

struct IdentityReport {
    std::size_t grade = 0;
    std::vector<NestedComm> commutators;
    std::vector<NestedComm> basis;
    /// Reduced identities, each with coefficient 1 on its eliminated
    /// commutator and otherwise supported on the basis. Lifted identities
    /// (ad-prefixed lower-grade ones) come first.
    std::vector<LieExpr> identities;
    std::vector<NestedComm> eliminated;
    std::size_t lifted_count = 0;

    /// (A | I) and its reduced form (M | P); empty unless recorded.
    ExactMatrix augmented;
    ExactMatrix reduced;

    std::vector<LieExpr> lifted_identities() const;
    std::vector<LieExpr> new_identities() const;
    /// Eliminated commutator -> its expression over the basis.
    const std::map<NestedComm, LieExpr>& substitutions() const { return substitutions_; }

    friend class IdentityCatalog;

private:
    std::map<NestedComm, LieExpr> substitutions_;
};

/// Identity reports for grades 2..max_grade built bottom-up, so that a
/// commutator whose suffix is eliminated at a lower grade is also eliminated
/// at the higher one.
class IdentityCatalog {
public:
    explicit IdentityCatalog(std::size_t max_grade, IdentityOptions options = {});

    std::size_t max_grade() const { return reports_.size() + 1; }
    const IdentityReport& report(std::size_t grade) const;
    const IdentityOptions& options() const { return options_; }

private:
    IdentityOptions options_;
    std::vector<IdentityReport> reports_;  // index grade - 2
};

/// Report for a single grade (builds the lower grades it depends on).
IdentityReport identities_and_basis(std::size_t grade, IdentityOptions options = {});

/// The three grade-6 identities of the classical literature, as published.
std::vector<LieExpr> published_grade6_identities();

/// Rewrites a homogeneous two-letter Lie polynomial over report.basis.
/// Throws std::invalid_argument on a grade mismatch or foreign terms.
LieExpr rewrite_in_basis(const LieExpr& e, const IdentityReport& report);

/// Rewrites using only the identities of grade <= max_identity_grade from
/// the catalog, lifted to grade m by ad-prefixing with every leaf prefix.
LieExpr rewrite_with_lifted(const LieExpr& e, const IdentityCatalog& catalog, std::size_t max_identity_grade);

/// Same result via repeated suffix rewriting rules. Test oracle for
/// rewrite_with_lifted.
LieExpr rewrite_by_suffix_rules(const LieExpr& e, const IdentityCatalog& catalog, std::size_t max_identity_grade);

struct CompactOptions {
    /// Upper bound on candidate eliminations tried per call.
    std::size_t budget = 0;  // 0: grade-dependent default
    std::uint64_t seed = 0x5eed;
    /// Representations of the same element to start from; the result never
    /// has more terms than the best of them.
    std::vector<LieExpr> seeds;
    /// Secondary objective: among representations r with the fewest terms
    /// prefer those where r + offset has the fewest terms. Same grade as the
    /// input; zero disables it.
    LieExpr offset;
};

/// Searches for a representation of `e` with few terms, modulo the
/// identities of `report`. The word expansion is unchanged; the term count
/// never exceeds that of rewrite_in_basis(e, report) or any seed.
LieExpr compact_reduce(const LieExpr& e, const IdentityReport& report, const CompactOptions& options = {});
LieExpr compact_reduce(const LieExpr& e, std::size_t grade);

std::size_t default_compact_budget(std::size_t grade);

enum class Regime { none, grade4, grade6, full, compact };
enum class Variant { plain, symmetric };

std::string to_string(Regime r);
std::string to_string(Variant v);
Regime parse_regime(std::string_view s);
Variant parse_variant(std::string_view s);

/// Caches Phi_m, the identity catalog and regime reductions.
class SeriesReducer {
public:
    explicit SeriesReducer(std::size_t max_grade, CompactOptions compact = {});

    std::size_t max_grade() const { return max_grade_; }
    const LieExpr& phi(std::size_t grade);
    const IdentityCatalog& catalog();

    /// Homogeneous grade-m element reduced in the given regime.
    LieExpr reduce(const LieExpr& e, std::size_t grade, Regime regime);
    const LieExpr& phi_reduced(std::size_t grade, Regime regime);
    /// Symmetric term Psi_m assembled from Phi inputs reduced in `regime`
    /// and then reduced itself. With `reduce_result` false the assembled
    /// element is returned as is.
    LieExpr psi(std::size_t grade, Regime regime, bool reduce_result = true);
    /// Same with separate regimes for the inputs and the result; a result
    /// reduction that would add terms is dropped.
    LieExpr psi(std::size_t grade, Regime inputs, std::optional<Regime> result);

private:
    std::size_t max_grade_;
    CompactOptions compact_;
    std::map<std::size_t, LieExpr> phi_;
    std::map<std::pair<std::size_t, Regime>, LieExpr> reduced_;
    std::unique_ptr<IdentityCatalog> catalog_;
};

/// Term counts for grades 2..max_grade.
std::vector<std::size_t> table_counts(std::size_t max_grade, Regime regime, Variant variant = Variant::plain);
std::vector<std::size_t> table_counts(SeriesReducer& reducer, std::size_t max_grade, Regime regime,
                                      Variant variant = Variant::plain);

/// |basis| per grade 2..max_grade.
std::vector<std::size_t> basis_dimensions(std::size_t max_grade);

}  // namespace bch
