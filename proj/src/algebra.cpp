#include "bch/algebra.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace bch {

std::string generator_name(Generator g, std::size_t alphabet_size)
{
    if (alphabet_size <= 2)
        return g.index == 0 ? "X" : (g.index == 1 ? "Y" : "X" + std::to_string(g.index + 1));
    return "X" + std::to_string(g.index + 1);
}

Generator parse_generator(std::string_view name, std::size_t alphabet_size)
{
    if (alphabet_size <= 2) {
        if (name == "X")
            return X;
        if (name == "Y")
            return Y;
    }
    else if (name.size() >= 2 && name[0] == 'X') {
        std::size_t idx = 0;
        for (char ch : name.substr(1)) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument("bad generator name '" + std::string(name) + "'");
            idx = idx * 10 + static_cast<std::size_t>(ch - '0');
        }
        if (idx >= 1 && idx <= alphabet_size)
            return Generator{static_cast<std::uint8_t>(idx - 1)};
    }
    throw std::invalid_argument("bad generator name '" + std::string(name) + "'");
}

Word word_from_string(std::string_view letters)
{
    Word w;
    w.reserve(letters.size());
    for (char ch : letters) {
        if (ch == 'X')
            w.push_back(X);
        else if (ch == 'Y')
            w.push_back(Y);
        else
            throw std::invalid_argument("word_from_string: letters must be X or Y");
    }
    return w;
}

std::string word_to_string(const Word& w, std::size_t alphabet_size)
{
    std::string s;
    for (Generator g : w)
        s += generator_name(g, alphabet_size);
    return s;
}

// ---------------------------------------------------------------- AssocPoly

AssocPoly::AssocPoly(std::initializer_list<std::pair<const Word, Rational>> terms)
{
    for (const auto& [w, c] : terms)
        add_term(w, c);
}

AssocPoly AssocPoly::unit()
{
    AssocPoly p;
    p.add_term(Word{}, Rational(1));
    return p;
}

AssocPoly AssocPoly::generator(Generator g)
{
    AssocPoly p;
    p.add_term(Word{g}, Rational(1));
    return p;
}

void AssocPoly::add_term(const Word& w, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational AssocPoly::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::size_t> AssocPoly::homogeneous_grade() const
{
    if (terms_.empty())
        return std::nullopt;
    std::size_t g = terms_.begin()->first.size();
    for (const auto& [w, c] : terms_)
        if (w.size() != g)
            return std::nullopt;
    return g;
}

AssocPoly AssocPoly::graded_part(std::size_t grade) const
{
    AssocPoly r;
    for (const auto& [w, c] : terms_)
        if (w.size() == grade)
            r.terms_.emplace_hint(r.terms_.end(), w, c);
    return r;
}

AssocPoly AssocPoly::truncated(std::size_t max_grade) const
{
    AssocPoly r;
    for (const auto& [w, c] : terms_)
        if (w.size() <= max_grade)
            r.terms_.emplace_hint(r.terms_.end(), w, c);
    return r;
}

AssocPoly& AssocPoly::operator+=(const AssocPoly& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, c);
    return *this;
}

AssocPoly& AssocPoly::operator-=(const AssocPoly& o)
{
    for (const auto& [w, c] : o.terms_)
        add_term(w, -c);
    return *this;
}

AssocPoly& AssocPoly::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_)
        v *= c;
    return *this;
}

AssocPoly multiply_truncated(const AssocPoly& a, const AssocPoly& b, std::size_t max_grade)
{
    AssocPoly r;
    Word w;
    for (const auto& [wa, ca] : a) {
        if (wa.size() > max_grade)
            continue;
        for (const auto& [wb, cb] : b) {
            if (wa.size() + wb.size() > max_grade)
                continue;
            w.assign(wa.begin(), wa.end());
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    }
    return r;
}

AssocPoly operator*(const AssocPoly& a, const AssocPoly& b)
{
    return multiply_truncated(a, b, static_cast<std::size_t>(-1));
}

// --------------------------------------------------------------- NestedComm

namespace {

bool is_canonical(const Word& leaves)
{
    if (leaves.empty())
        return false;
    if (leaves.size() == 1)
        return true;
    return leaves[leaves.size() - 2] < leaves.back();
}

}  // namespace

NestedComm::NestedComm(Word leaves) : leaves_(std::move(leaves))
{
    if (!is_canonical(leaves_))
        throw std::invalid_argument("NestedComm: leaves are not canonical (innermost pair must be ascending)");
}

std::optional<CanonicalTerm> canonicalize(std::span<const Generator> raw_leaves, const Rational& coeff)
{
    if (raw_leaves.empty())
        throw std::invalid_argument("canonicalize: empty leaf sequence");
    if (coeff.is_zero())
        return std::nullopt;
    Word leaves(raw_leaves.begin(), raw_leaves.end());
    if (leaves.size() == 1)
        return CanonicalTerm{NestedComm(std::move(leaves)), coeff};
    auto n = leaves.size();
    if (leaves[n - 2] == leaves[n - 1])
        return std::nullopt;
    if (leaves[n - 1] < leaves[n - 2]) {
        std::swap(leaves[n - 2], leaves[n - 1]);
        return CanonicalTerm{NestedComm(std::move(leaves)), -coeff};
    }
    return CanonicalTerm{NestedComm(std::move(leaves)), coeff};
}

// ------------------------------------------------------------------ LieExpr

LieExpr::LieExpr(std::initializer_list<std::pair<const NestedComm, Rational>> terms)
{
    for (const auto& [k, c] : terms)
        add_term(k, c);
}

LieExpr LieExpr::generator(Generator g)
{
    LieExpr e;
    e.add_term(NestedComm(Word{g}), Rational(1));
    return e;
}

void LieExpr::add_raw(std::span<const Generator> raw_leaves, const Rational& c)
{
    if (auto t = canonicalize(raw_leaves, c))
        add_term(t->comm, t->coeff);
}

void LieExpr::add_term(const NestedComm& comm, const Rational& c)
{
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(comm, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Rational LieExpr::coefficient(const NestedComm& comm) const
{
    auto it = terms_.find(comm);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::optional<std::size_t> LieExpr::homogeneous_grade() const
{
    if (terms_.empty())
        return std::nullopt;
    std::size_t g = terms_.begin()->first.grade();
    for (const auto& [k, c] : terms_)
        if (k.grade() != g)
            return std::nullopt;
    return g;
}

LieExpr LieExpr::graded_part(std::size_t grade) const
{
    LieExpr r;
    for (const auto& [k, c] : terms_)
        if (k.grade() == grade)
            r.terms_.emplace_hint(r.terms_.end(), k, c);
    return r;
}

LieExpr& LieExpr::operator+=(const LieExpr& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

LieExpr& LieExpr::operator-=(const LieExpr& o)
{
    for (const auto& [k, c] : o.terms_)
        add_term(k, -c);
    return *this;
}

LieExpr& LieExpr::operator*=(const Rational& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

// -------------------------------------------------------------- conversions

namespace {

// Expansion of the bracket whose leaves are leaves[from..], with integer
// coefficients (every coefficient is +-binomial).
void expand_into(std::span<const Generator> leaves, const Rational& coeff, AssocPoly& out)
{
    // Iterative: start from the innermost leaf and wrap a -> a w - w a.
    std::map<Word, long> cur{{Word{leaves.back()}, 1}};
    for (std::size_t i = leaves.size() - 1; i-- > 0;) {
        std::map<Word, long> next;
        Generator a = leaves[i];
        for (const auto& [w, c] : cur) {
            Word left;
            left.reserve(w.size() + 1);
            left.push_back(a);
            left.insert(left.end(), w.begin(), w.end());
            Word right(w);
            right.push_back(a);
            if ((next[left] += c) == 0)
                next.erase(left);
            if ((next[right] -= c) == 0)
                next.erase(right);
        }
        cur = std::move(next);
    }
    for (const auto& [w, c] : cur)
        out.add_term(w, coeff * Rational(c));
}

}  // namespace

AssocPoly expand_nested(const NestedComm& c)
{
    AssocPoly out;
    expand_into(c.leaves(), Rational(1), out);
    return out;
}

AssocPoly expand_lie(const LieExpr& e)
{
    AssocPoly out;
    for (const auto& [k, c] : e)
        expand_into(k.leaves(), c, out);
    return out;
}

LieExpr dsw_bracketing(const AssocPoly& p)
{
    LieExpr r;
    if (p.is_zero())
        return r;
    if (!p.homogeneous_grade())
        throw std::invalid_argument("dsw_bracketing: input is not homogeneous");
    if (p.begin()->first.empty())
        throw std::invalid_argument("dsw_bracketing: grade-0 input");
    for (const auto& [w, c] : p)
        r.add_raw(w, c);
    return r;
}

LieExpr bracket(Generator g, const LieExpr& e)
{
    LieExpr r;
    Word leaves;
    for (const auto& [k, c] : e) {
        leaves.clear();
        leaves.push_back(g);
        leaves.insert(leaves.end(), k.leaves().begin(), k.leaves().end());
        r.add_raw(leaves, c);
    }
    return r;
}

std::size_t alphabet_size(const LieExpr& e)
{
    std::size_t n = 2;
    for (const auto& [k, c] : e)
        for (Generator g : k.leaves())
            n = std::max<std::size_t>(n, g.index + 1u);
    return n;
}

}  // namespace bch
