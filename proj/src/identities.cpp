#include "bch/identities.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace bch {

// ------------------------------------------------------------ enumeration

CommutatorList enumerate_nested(std::size_t grade)
{
    if (grade < 2 || grade > kMaxGrade)
        throw std::invalid_argument("enumerate_nested: grade must be in 2..kMaxGrade");
    const std::size_t prefix_len = grade - 2;
    const std::size_t count = std::size_t{1} << prefix_len;
    CommutatorList list{grade, {}};
    list.entries.reserve(count);
    // The first prefix letter is the least significant bit, which is
    // lexicographic order on the reversed leaves.
    for (std::size_t i = 0; i < count; ++i) {
        Word leaves(grade);
        for (std::size_t j = 0; j < prefix_len; ++j)
            leaves[j] = (i >> j) & 1 ? Y : X;
        leaves[grade - 2] = X;
        leaves[grade - 1] = Y;
        list.entries.emplace_back(std::move(leaves));
    }
    return list;
}

std::optional<std::size_t> commutator_index(const NestedComm& c)
{
    const auto& l = c.leaves();
    const std::size_t m = l.size();
    if (m < 2 || l[m - 2] != X || l[m - 1] != Y)
        return std::nullopt;
    std::size_t idx = 0;
    for (std::size_t j = 0; j + 2 < m; ++j) {
        if (l[j].index > 1)
            return std::nullopt;
        idx |= static_cast<std::size_t>(l[j].index) << j;
    }
    return idx;
}

// ---------------------------------------------------------------- helpers

namespace {

using Vec = std::vector<Rational>;

Vec to_vector(const LieExpr& e, std::size_t grade)
{
    Vec v(std::size_t{1} << (grade - 2));
    for (const auto& [k, c] : e) {
        auto idx = commutator_index(k);
        if (!idx || k.grade() != grade)
            throw std::invalid_argument("expression has a term that is not a grade-" + std::to_string(grade) +
                                        " two-letter right-nested commutator");
        v[*idx] = c;
    }
    return v;
}

LieExpr from_vector(const Vec& v, const std::vector<NestedComm>& comms)
{
    LieExpr e;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero())
            e.add_term(comms[i], v[i]);
    return e;
}

std::vector<NestedComm> published_pivots(std::size_t grade)
{
    switch (grade) {
    case 4:
        return {NestedComm::from_string("YXXY")};
    case 6:
        return {NestedComm::from_string("XXXYXY"), NestedComm::from_string("XXYYXY"),
                NestedComm::from_string("YXYYXY")};
    default:
        return {};
    }
}

std::vector<AssocPoly> expand_all(const std::vector<NestedComm>& comms)
{
    std::vector<AssocPoly> rows(comms.size());
    const long n = static_cast<long>(comms.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < n; ++i)
        rows[static_cast<std::size_t>(i)] = expand_nested(comms[static_cast<std::size_t>(i)]);
    return rows;
}

ExactMatrix word_matrix(const std::vector<NestedComm>& comms, const std::vector<AssocPoly>& rows)
{
    std::set<Word> words;
    for (const auto& r : rows)
        for (const auto& [w, c] : r)
            words.insert(w);
    std::vector<Word> cols(words.begin(), words.end());
    std::map<Word, std::size_t> col_of;
    for (std::size_t j = 0; j < cols.size(); ++j)
        col_of.emplace(cols[j], j);
    ExactMatrix a(comms.size(), cols.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (const auto& [w, c] : rows[i])
            a.at(i, col_of.at(w)) = c;
    a.row_labels = comms;
    a.col_labels = std::move(cols);
    a.left_block = a.cols();
    return a;
}

// Null vectors of the commutator rows: P rows next to zero M rows.
std::vector<Vec> null_rows(const ExactMatrix& reduced)
{
    std::vector<Vec> out;
    const std::size_t left = reduced.left_block;
    for (std::size_t r = 0; r < reduced.rows(); ++r) {
        auto row = reduced.row(r);
        bool m_zero = std::all_of(row.begin(), row.begin() + static_cast<long>(left),
                                  [](const Rational& x) { return x.is_zero(); });
        if (m_zero)
            out.emplace_back(row.begin() + static_cast<long>(left), row.end());
    }
    return out;
}

// Same null vectors, computed per letter content (the word columns of
// different contents are disjoint). Blocks run in parallel.
std::vector<Vec> null_rows_blockwise(const std::vector<NestedComm>& comms, const std::vector<AssocPoly>& rows)
{
    const std::size_t grade = comms.front().grade();
    std::vector<std::vector<std::size_t>> blocks(grade + 1);
    for (std::size_t i = 0; i < comms.size(); ++i) {
        auto xs = static_cast<std::size_t>(std::count(comms[i].leaves().begin(), comms[i].leaves().end(), X));
        blocks[xs].push_back(i);
    }
    std::vector<std::vector<Vec>> found(blocks.size());
    const long nb = static_cast<long>(blocks.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (long b = 0; b < nb; ++b) {
        const auto& idx = blocks[static_cast<std::size_t>(b)];
        if (idx.empty())
            continue;
        std::vector<NestedComm> sub_comms;
        std::vector<AssocPoly> sub_rows;
        for (std::size_t i : idx) {
            sub_comms.push_back(comms[i]);
            sub_rows.push_back(rows[i]);
        }
        auto reduced = serial::gauss_jordan(word_matrix(sub_comms, sub_rows).augmented_with_identity());
        for (auto& local : null_rows(reduced)) {
            Vec v(comms.size());
            for (std::size_t t = 0; t < idx.size(); ++t)
                v[idx[t]] = local[t];
            found[static_cast<std::size_t>(b)].push_back(std::move(v));
        }
    }
    std::vector<Vec> out;
    for (auto& f : found)
        for (auto& v : f)
            out.push_back(std::move(v));
    return out;
}

bool has_eliminated_suffix(const NestedComm& c, const std::vector<std::set<NestedComm>>& eliminated_by_grade)
{
    const auto& l = c.leaves();
    for (std::size_t k = 2; k < l.size(); ++k) {
        const auto& elim = eliminated_by_grade[k];
        if (elim.empty())
            continue;
        NestedComm suffix(Word(l.end() - static_cast<long>(k), l.end()));
        if (elim.count(suffix))
            return true;
    }
    return false;
}

void verify_zero(const LieExpr& identity, std::size_t grade)
{
    if (!expand_lie(identity).is_zero())
        throw VerificationError("grade-" + std::to_string(grade) + " identity does not expand to zero");
}

}  // namespace

// ----------------------------------------------------------------- reports

std::vector<LieExpr> IdentityReport::lifted_identities() const
{
    return {identities.begin(), identities.begin() + static_cast<long>(lifted_count)};
}

std::vector<LieExpr> IdentityReport::new_identities() const
{
    return {identities.begin() + static_cast<long>(lifted_count), identities.end()};
}

IdentityCatalog::IdentityCatalog(std::size_t max_grade, IdentityOptions options) : options_(options)
{
    if (max_grade < 2 || max_grade > kMaxGrade)
        throw std::invalid_argument("IdentityCatalog: max grade must be in 2..kMaxGrade");

    std::vector<std::set<NestedComm>> eliminated_by_grade(max_grade + 1);
    for (std::size_t m = 2; m <= max_grade; ++m) {
        IdentityReport rep;
        rep.grade = m;
        rep.commutators = enumerate_nested(m).entries;
        const auto& comms = rep.commutators;
        const auto rows = expand_all(comms);

        std::vector<Vec> nulls;
        if (options_.record_matrices) {
            rep.augmented = word_matrix(comms, rows).augmented_with_identity();
            rep.reduced = gauss_jordan(rep.augmented);
            nulls = null_rows(rep.reduced);
        }
        else {
            nulls = null_rows_blockwise(comms, rows);
        }

        // Column priority: commutators already eliminated through a suffix,
        // then preferred eliminations, then list order.
        std::vector<std::size_t> order;
        std::vector<bool> placed(comms.size(), false);
        std::set<std::size_t> lifted_cols;
        for (std::size_t i = 0; i < comms.size(); ++i) {
            if (has_eliminated_suffix(comms[i], eliminated_by_grade)) {
                order.push_back(i);
                placed[i] = true;
                lifted_cols.insert(i);
            }
        }
        if (options_.orientation == Orientation::published) {
            for (const auto& p : published_pivots(m)) {
                auto i = *commutator_index(p);
                if (!placed[i]) {
                    order.push_back(i);
                    placed[i] = true;
                }
            }
        }
        for (std::size_t i = 0; i < comms.size(); ++i)
            if (!placed[i])
                order.push_back(i);

        auto red = reduce_rows(std::move(nulls), order);
        std::vector<bool> is_pivot(comms.size(), false);
        for (std::size_t r = 0; r < red.rows.size(); ++r) {
            std::size_t piv = red.pivots[r];
            is_pivot[piv] = true;
            LieExpr identity = from_vector(red.rows[r], comms);
            verify_zero(identity, m);
            rep.identities.push_back(identity);
            rep.eliminated.push_back(comms[piv]);
            rep.lifted_count += lifted_cols.count(piv);

            LieExpr replacement = identity;
            replacement.add_term(comms[piv], Rational(-1));
            rep.substitutions_.emplace(comms[piv], replacement * Rational(-1));
        }
        for (std::size_t i = 0; i < comms.size(); ++i)
            if (!is_pivot[i])
                rep.basis.push_back(comms[i]);
        eliminated_by_grade[m].insert(rep.eliminated.begin(), rep.eliminated.end());
        reports_.push_back(std::move(rep));
    }
}

const IdentityReport& IdentityCatalog::report(std::size_t grade) const
{
    if (grade < 2 || grade > max_grade())
        throw std::out_of_range("IdentityCatalog: grade " + std::to_string(grade) + " not in catalog");
    return reports_[grade - 2];
}

IdentityReport identities_and_basis(std::size_t grade, IdentityOptions options)
{
    return IdentityCatalog(grade, options).report(grade);
}

std::vector<LieExpr> published_grade6_identities()
{
    auto c = [](const char* s) { return NestedComm::from_string(s); };
    return {
        LieExpr{{c("XXXYXY"), 1}, {c("XYXXXY"), -2}, {c("YXXXXY"), 1}},
        LieExpr{{c("XXYYXY"), 1}, {c("YXXYXY"), 3}, {c("XYXYXY"), -3}, {c("YYXXXY"), -1}},
        LieExpr{{c("YYXYXY"), 1}, {c("YXYYXY"), -2}, {c("XYYYXY"), 1}},
    };
}

// --------------------------------------------------------------- rewriting

namespace {

void check_grade(const LieExpr& e, std::size_t grade)
{
    auto g = e.homogeneous_grade();
    if (!e.is_zero() && (!g || *g != grade))
        throw std::invalid_argument("expression is not homogeneous of grade " + std::to_string(grade));
}

void verify_same_expansion(const LieExpr& before, const LieExpr& after, const char* who)
{
    if (expand_lie(before) != expand_lie(after))
        throw VerificationError(std::string(who) + ": rewrite changed the word expansion");
}

NestedComm prefixed(const Word& prefix, const NestedComm& c)
{
    Word l = prefix;
    l.insert(l.end(), c.leaves().begin(), c.leaves().end());
    return NestedComm(std::move(l));
}

}  // namespace

LieExpr rewrite_in_basis(const LieExpr& e, const IdentityReport& report)
{
    check_grade(e, report.grade);
    LieExpr out;
    const auto& subs = report.substitutions();
    for (const auto& [k, c] : e) {
        if (!commutator_index(k))
            throw std::invalid_argument("rewrite_in_basis: term is not a two-letter right-nested commutator");
        auto it = subs.find(k);
        if (it == subs.end())
            out.add_term(k, c);
        else
            out += it->second * c;
    }
    verify_same_expansion(e, out, "rewrite_in_basis");
    return out;
}

LieExpr rewrite_with_lifted(const LieExpr& e, const IdentityCatalog& catalog, std::size_t max_identity_grade)
{
    if (e.is_zero())
        return e;
    auto grade_opt = e.homogeneous_grade();
    if (!grade_opt)
        throw std::invalid_argument("rewrite_with_lifted: expression is not homogeneous");
    if (*grade_opt < 4)
        return e;
    const std::size_t m = *grade_opt;
    const auto comms = enumerate_nested(m).entries;

    std::vector<Vec> rows;
    std::set<std::size_t> lifted_pivots;
    const std::size_t top = std::min({max_identity_grade, m, catalog.max_grade()});
    for (std::size_t k = 2; k <= top; ++k) {
        const auto& rep = catalog.report(k);
        const std::size_t plen = m - k;
        for (std::size_t mask = 0; mask < (std::size_t{1} << plen); ++mask) {
            Word prefix(plen);
            for (std::size_t j = 0; j < plen; ++j)
                prefix[j] = (mask >> j) & 1 ? Y : X;
            for (std::size_t r = 0; r < rep.identities.size(); ++r) {
                Vec v(comms.size());
                for (const auto& [c, coef] : rep.identities[r])
                    v[*commutator_index(prefixed(prefix, c))] = coef;
                rows.push_back(std::move(v));
                lifted_pivots.insert(*commutator_index(prefixed(prefix, rep.eliminated[r])));
            }
        }
    }
    std::vector<std::size_t> order(lifted_pivots.begin(), lifted_pivots.end());
    for (std::size_t i = 0; i < comms.size(); ++i)
        if (!lifted_pivots.count(i))
            order.push_back(i);
    auto red = reduce_rows(std::move(rows), order);

    Vec v = to_vector(e, m);
    for (std::size_t r = 0; r < red.rows.size(); ++r) {
        Rational f = v[red.pivots[r]];
        if (f.is_zero())
            continue;
        const auto& row = red.rows[r];
        for (std::size_t j = 0; j < row.size(); ++j)
            if (!row[j].is_zero())
                v[j] -= f * row[j];
    }
    LieExpr out = from_vector(v, comms);
    verify_same_expansion(e, out, "rewrite_with_lifted");
    return out;
}

LieExpr rewrite_by_suffix_rules(const LieExpr& e, const IdentityCatalog& catalog, std::size_t max_identity_grade)
{
    LieExpr cur = e;
    for (int iter = 0; iter < 1000; ++iter) {
        LieExpr next;
        bool changed = false;
        for (const auto& [k, c] : cur) {
            const auto& l = k.leaves();
            const std::size_t top = std::min({max_identity_grade, l.size(), catalog.max_grade()});
            bool hit = false;
            for (std::size_t len = 2; len <= top && !hit; ++len) {
                const auto& subs = catalog.report(len).substitutions();
                NestedComm suffix(Word(l.end() - static_cast<long>(len), l.end()));
                auto it = subs.find(suffix);
                if (it == subs.end())
                    continue;
                Word prefix(l.begin(), l.end() - static_cast<long>(len));
                for (const auto& [t, d] : it->second)
                    next.add_term(prefixed(prefix, t), c * d);
                hit = true;
            }
            if (hit)
                changed = true;
            else
                next.add_term(k, c);
        }
        cur = std::move(next);
        if (!changed)
            return cur;
    }
    throw VerificationError("rewrite_by_suffix_rules: rules did not terminate");
}

// ------------------------------------------------------------------ names

std::string to_string(Regime r)
{
    switch (r) {
    case Regime::none: return "none";
    case Regime::grade4: return "grade4";
    case Regime::grade6: return "grade6";
    case Regime::full: return "full";
    case Regime::compact: return "compact";
    }
    return "?";
}

std::string to_string(Variant v)
{
    return v == Variant::plain ? "plain" : "symmetric";
}

Regime parse_regime(std::string_view s)
{
    for (Regime r : {Regime::none, Regime::grade4, Regime::grade6, Regime::full, Regime::compact})
        if (s == to_string(r))
            return r;
    throw std::invalid_argument("unknown regime '" + std::string(s) + "'");
}

Variant parse_variant(std::string_view s)
{
    if (s == "plain")
        return Variant::plain;
    if (s == "symmetric")
        return Variant::symmetric;
    throw std::invalid_argument("unknown variant '" + std::string(s) + "'");
}

}  // namespace bch
