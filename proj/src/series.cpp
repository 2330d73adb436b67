#include "bch/series.hpp"

#include <stdexcept>

#include "bch/eulerian.hpp"

namespace bch {

std::vector<Generator> Polarization::arguments() const
{
    std::vector<Generator> args;
    for (std::size_t j = 0; j < multidegree.size(); ++j)
        args.insert(args.end(), multidegree[j], Generator{static_cast<std::uint8_t>(j)});
    return args;
}

namespace {

void compositions(std::size_t remaining, std::size_t slot, std::vector<std::size_t>& cur,
                  std::vector<Polarization>& out)
{
    if (slot + 1 == cur.size()) {
        cur[slot] = remaining;
        Rational w(1);
        for (std::size_t i : cur)
            w *= factorial(static_cast<unsigned>(i));
        out.push_back({cur, w.reciprocal()});
        return;
    }
    for (std::size_t i = remaining + 1; i-- > 0;) {
        cur[slot] = i;
        compositions(remaining - i, slot + 1, cur, out);
    }
}

void check_series_args(std::size_t grade, std::size_t alphabet)
{
    if (grade < 1 || grade > kMaxGrade)
        throw std::invalid_argument("grade must be in 1..kMaxGrade");
    if (alphabet < 1 || alphabet > kMaxAlphabet)
        throw std::invalid_argument("alphabet size must be in 1..kMaxAlphabet");
}

std::size_t distinct_letters(const Polarization& p)
{
    std::size_t k = 0;
    for (std::size_t i : p.multidegree)
        k += i > 0;
    return k;
}

LieExpr linear_part(std::size_t alphabet)
{
    LieExpr e;
    for (std::size_t j = 0; j < alphabet; ++j)
        e += LieExpr::generator(Generator{static_cast<std::uint8_t>(j)});
    return e;
}

template <typename Nested>
LieExpr assemble_phi(std::size_t grade, std::size_t alphabet, Nested&& nested)
{
    check_series_args(grade, alphabet);
    if (grade == 1)
        return linear_part(alphabet);
    LieExpr out;
    for (const auto& pol : polarizations(grade, alphabet)) {
        // One repeated generator only produces [z,z] brackets.
        if (distinct_letters(pol) < 2)
            continue;
        auto args = pol.arguments();
        out += nested(std::span<const Generator>(args)) * pol.weight;
    }
    return out;
}

}  // namespace

std::vector<Polarization> polarizations(std::size_t grade, std::size_t alphabet)
{
    std::vector<Polarization> out;
    if (alphabet == 0)
        return out;
    std::vector<std::size_t> cur(alphabet, 0);
    compositions(grade, 0, cur, out);
    return out;
}

LieExpr phi_m(std::size_t grade, std::size_t alphabet)
{
    return assemble_phi(grade, alphabet, [](std::span<const Generator> a) { return varphi_nested(a); });
}

namespace serial {

LieExpr phi_m(std::size_t grade, std::size_t alphabet)
{
    return assemble_phi(grade, alphabet, [](std::span<const Generator> a) { return serial::varphi_nested(a); });
}

}  // namespace serial

namespace {

// Blocks (p_i, q_i) with p_i + q_i > 0, total `remaining`.
void dynkin_blocks(std::size_t remaining, Word& word, std::size_t blocks, const Rational& denom_product,
                   std::size_t grade, std::map<Word, Rational>& acc)
{
    if (remaining == 0) {
        Rational c = (Rational(static_cast<std::int64_t>(blocks)) * Rational(static_cast<std::int64_t>(grade)) * denom_product).reciprocal();
        if (blocks % 2 == 0)
            c = -c;
        acc[word] += c;
        return;
    }
    for (std::size_t p = 0; p <= remaining; ++p) {
        for (std::size_t q = (p == 0 ? 1 : 0); p + q <= remaining; ++q) {
            std::size_t mark = word.size();
            word.insert(word.end(), p, X);
            word.insert(word.end(), q, Y);
            Rational d = denom_product * factorial(static_cast<unsigned>(p)) * factorial(static_cast<unsigned>(q));
            dynkin_blocks(remaining - p - q, word, blocks + 1, d, grade, acc);
            word.resize(mark);
        }
    }
}

}  // namespace

LieExpr dynkin_phi_m(std::size_t grade)
{
    check_series_args(grade, 2);
    std::map<Word, Rational> acc;
    Word word;
    dynkin_blocks(grade, word, 0, Rational(1), grade, acc);
    LieExpr out;
    for (const auto& [w, c] : acc)
        out.add_raw(w, c);
    return out;
}

AssocPoly log_product_words(std::size_t grade, std::size_t alphabet)
{
    check_series_args(grade, alphabet);
    AssocPoly product = AssocPoly::unit();
    for (std::size_t j = 0; j < alphabet; ++j) {
        Generator g{static_cast<std::uint8_t>(j)};
        AssocPoly ex;
        Word w;
        for (std::size_t i = 0; i <= grade; ++i) {
            ex.add_term(w, factorial(static_cast<unsigned>(i)).reciprocal());
            w.push_back(g);
        }
        product = multiply_truncated(product, ex, grade);
    }
    AssocPoly z = product - AssocPoly::unit();

    AssocPoly log_sum;
    AssocPoly power = z;
    for (std::size_t k = 1; k <= grade; ++k) {
        Rational c = Rational(1, static_cast<std::int64_t>(k));
        log_sum += power * (k % 2 ? c : -c);
        if (k < grade)
            power = multiply_truncated(power, z, grade);
    }
    return log_sum.graded_part(grade);
}

LieExpr ad_power(Generator g, const LieExpr& e, std::size_t k)
{
    LieExpr r = e;
    for (std::size_t i = 0; i < k && !r.is_zero(); ++i)
        r = bracket(g, r);
    return r;
}

LieExpr sym_bch_from(std::size_t grade, std::span<const LieExpr> phis)
{
    if (grade < 1)
        throw std::invalid_argument("sym_bch_from: grade must be >= 1");
    if (phis.size() < grade + 1)
        throw std::invalid_argument("sym_bch_from: missing Phi terms");
    LieExpr out;
    Rational c(1);
    for (std::size_t k = 0; k < grade; ++k) {
        if (k > 0)
            c *= Rational(-1, 2 * static_cast<std::int64_t>(k));
        out += ad_power(X, phis[grade - k], k) * c;
    }
    return out;
}

LieExpr sym_bch_m(std::size_t grade)
{
    check_series_args(grade, 2);
    std::vector<LieExpr> phis(grade + 1);
    for (std::size_t j = 1; j <= grade; ++j)
        phis[j] = phi_m(j, 2);
    return sym_bch_from(grade, phis);
}

LieExpr scale_substitute(const LieExpr& e, std::span<const Substitution> map)
{
    for (const auto& s : map)
        if (s.factor.is_zero())
            throw std::invalid_argument("scale_substitute: zero factor");
    LieExpr out;
    Word leaves;
    for (const auto& [k, c] : e) {
        leaves.clear();
        Rational coeff = c;
        for (Generator g : k.leaves()) {
            if (g.index < map.size()) {
                leaves.push_back(map[g.index].target);
                coeff *= map[g.index].factor;
            }
            else {
                leaves.push_back(g);
            }
        }
        out.add_raw(leaves, coeff);
    }
    return out;
}

LieExpr sym_bch_three_variable(std::size_t grade)
{
    const Substitution map[] = {{X, Rational(1, 2)}, {Y, Rational(1)}, {X, Rational(1, 2)}};
    return scale_substitute(phi_m(grade, 3), map);
}

}  // namespace bch
