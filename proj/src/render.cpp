#include "bch/render.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>
#include <fmt/ranges.h>
#include <nlohmann/json.hpp>

namespace bch {

using nlohmann::json;

Format parse_format(std::string_view s)
{
    if (s == "text")
        return Format::text;
    if (s == "json")
        return Format::json;
    if (s == "latex")
        return Format::latex;
    throw std::invalid_argument(fmt::format("unknown format '{}'", s));
}

LatexStyle parse_latex_style(std::string_view s)
{
    if (s == "nested")
        return LatexStyle::nested;
    if (s == "flat")
        return LatexStyle::flat;
    throw std::invalid_argument(fmt::format("unknown LaTeX style '{}'", s));
}

std::vector<std::pair<NestedComm, Rational>> ordered_terms(const LieExpr& e)
{
    std::vector<std::pair<NestedComm, Rational>> out(e.begin(), e.end());
    std::ranges::sort(out, [](const auto& a, const auto& b) {
        const auto& la = a.first.leaves();
        const auto& lb = b.first.leaves();
        if (la.size() != lb.size())
            return la.size() < lb.size();
        return std::lexicographical_compare(la.rbegin(), la.rend(), lb.rbegin(), lb.rend());
    });
    return out;
}

std::string render_comm(const NestedComm& c, std::size_t vars, LatexStyle style)
{
    const auto& l = c.leaves();
    if (l.size() == 1)
        return generator_name(l[0], vars);
    std::string out;
    if (style == LatexStyle::flat) {
        out = "[";
        for (std::size_t i = 0; i < l.size(); ++i)
            out += (i ? "," : "") + generator_name(l[i], vars);
        return out + "]";
    }
    for (std::size_t i = 0; i + 1 < l.size(); ++i)
        out += "[" + generator_name(l[i], vars) + ",";
    out += generator_name(l.back(), vars);
    out.append(l.size() - 1, ']');
    return out;
}

namespace {

template <class CoeffFn>
std::string join_terms(const LieExpr& e, std::size_t vars, LatexStyle style, CoeffFn coeff)
{
    if (e.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : ordered_terms(e)) {
        bool negative = c.sign() < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        Rational a = c.abs();
        if (a != Rational(1))
            out += coeff(a);
        out += render_comm(k, vars, style);
        first = false;
    }
    return out;
}

std::string latex_coeff(const Rational& a)
{
    auto s = a.fraction_string();
    auto slash = s.find('/');
    if (s.substr(slash + 1) == "1")
        return s.substr(0, slash) + " ";
    return fmt::format("\\frac{{{}}}{{{}}}", s.substr(0, slash), s.substr(slash + 1));
}

std::string series_symbol(const std::string& variant) { return variant == "symmetric" ? "Psi" : "Phi"; }

json leaves_json(const NestedComm& c, std::size_t vars)
{
    json a = json::array();
    for (Generator g : c.leaves())
        a.push_back(generator_name(g, vars));
    return a;
}

json terms_json(const LieExpr& e, std::size_t vars)
{
    json a = json::array();
    for (const auto& [k, c] : ordered_terms(e))
        a.push_back({{"leaves", leaves_json(k, vars)}, {"coeff", c.fraction_string()}});
    return a;
}

NestedComm comm_from_json(const json& leaves, std::size_t vars)
{
    Word w;
    for (const auto& name : leaves)
        w.push_back(parse_generator(name.get<std::string>(), vars));
    if (w.empty())
        throw ParseError("empty leaf list");
    return NestedComm(std::move(w));
}

LieExpr expr_from_json(const json& terms, std::size_t vars)
{
    LieExpr e;
    for (const auto& t : terms)
        e.add_term(comm_from_json(t.at("leaves"), vars), Rational::parse(t.at("coeff").get<std::string>()));
    return e;
}

template <class Fn>
auto parse_guarded(std::string_view text, Fn fn)
{
    try {
        return fn(json::parse(text));
    }
    catch (const ParseError&) {
        throw;
    }
    catch (const std::exception& e) {
        throw ParseError(e.what());
    }
}

std::string join_counts(const std::vector<std::size_t>& v)
{
    return fmt::format("{}", fmt::join(v, ","));
}

}  // namespace

std::string render_text(const LieExpr& e, std::size_t vars)
{
    return join_terms(e, vars, LatexStyle::nested, [](const Rational& a) { return a.to_string() + " "; });
}

std::string render_latex(const LieExpr& e, std::size_t vars, LatexStyle style)
{
    return join_terms(e, vars, style, latex_coeff);
}

std::string render(const SeriesDocument& doc, Format format, LatexStyle style)
{
    const std::string sym = series_symbol(doc.variant);
    switch (format) {
    case Format::text: {
        std::string out;
        for (std::size_t m = 1; m <= doc.parts.size(); ++m)
            out += fmt::format("{}_{} = {}\n", sym, m, render_text(doc.parts[m - 1], doc.vars));
        return out;
    }
    case Format::latex: {
        std::string out = "\\begin{align*}\n";
        for (std::size_t m = 1; m <= doc.parts.size(); ++m) {
            out += fmt::format("\\{}_{{{}}} &= {}", sym, m, render_latex(doc.parts[m - 1], doc.vars, style));
            out += m < doc.parts.size() ? " \\\\\n" : "\n";
        }
        return out + "\\end{align*}\n";
    }
    case Format::json: {
        json terms = json::array();
        for (const auto& p : doc.parts)
            for (auto& t : terms_json(p, doc.vars))
                terms.push_back(std::move(t));
        json j = {{"meta",
                   {{"grade", doc.grade},
                    {"vars", doc.vars},
                    {"regime", doc.regime},
                    {"variant", doc.variant},
                    {"version", doc.version}}},
                  {"terms", terms}};
        return j.dump(2) + "\n";
    }
    }
    throw std::logic_error("render: bad format");
}

SeriesDocument parse_series_json(std::string_view text)
{
    return parse_guarded(text, [](const json& j) {
        SeriesDocument doc;
        const auto& meta = j.at("meta");
        doc.grade = meta.at("grade").get<std::size_t>();
        doc.vars = meta.at("vars").get<std::size_t>();
        doc.regime = meta.at("regime").get<std::string>();
        doc.variant = meta.at("variant").get<std::string>();
        doc.version = meta.at("version").get<std::string>();
        if (doc.grade > kMaxGrade || doc.vars < 2 || doc.vars > kMaxAlphabet)
            throw ParseError("meta out of range");
        doc.parts.resize(doc.grade);
        for (const auto& t : j.at("terms")) {
            NestedComm k = comm_from_json(t.at("leaves"), doc.vars);
            if (k.grade() > doc.grade)
                throw ParseError("term above the document grade");
            doc.parts[k.grade() - 1].add_term(k, Rational::parse(t.at("coeff").get<std::string>()));
        }
        return doc;
    });
}

IdentityDocument make_identity_document(const IdentityReport& report)
{
    IdentityDocument doc;
    doc.grade = report.grade;
    doc.basis = report.basis;
    doc.identities = report.new_identities();
    doc.lifted = report.lifted_identities();
    return doc;
}

std::string render(const IdentityDocument& doc, Format format, LatexStyle style)
{
    switch (format) {
    case Format::text: {
        std::string out = fmt::format("grade {}\nbasis ({}):\n", doc.grade, doc.basis.size());
        for (const auto& b : doc.basis)
            out += "  " + render_comm(b, 2) + "\n";
        out += fmt::format("identities ({}):\n", doc.identities.size());
        for (const auto& id : doc.identities)
            out += "  " + render_text(id, 2) + " = 0\n";
        out += fmt::format("lifted identities ({}):\n", doc.lifted.size());
        for (const auto& id : doc.lifted)
            out += "  " + render_text(id, 2) + " = 0\n";
        return out;
    }
    case Format::latex: {
        std::string out = "\\begin{align*}\n";
        std::vector<std::string> lines;
        for (const auto& id : doc.identities)
            lines.push_back(render_latex(id, 2, style) + " &= 0");
        for (std::size_t i = 0; i < lines.size(); ++i)
            out += lines[i] + (i + 1 < lines.size() ? " \\\\\n" : "\n");
        out += "\\end{align*}\n";
        out += "Basis: $";
        for (std::size_t i = 0; i < doc.basis.size(); ++i)
            out += (i ? ",\\ " : "") + render_comm(doc.basis[i], 2, style);
        return out + "$\n";
    }
    case Format::json: {
        json basis = json::array();
        for (const auto& b : doc.basis)
            basis.push_back(leaves_json(b, 2));
        json ids = json::array();
        for (const auto& id : doc.identities)
            ids.push_back(terms_json(id, 2));
        json lifted = json::array();
        for (const auto& id : doc.lifted)
            lifted.push_back(terms_json(id, 2));
        json j = {{"meta", {{"grade", doc.grade}, {"vars", 2}, {"version", doc.version}}},
                  {"basis", basis},
                  {"identities", ids},
                  {"lifted", lifted}};
        return j.dump(2) + "\n";
    }
    }
    throw std::logic_error("render: bad format");
}

IdentityDocument parse_identity_json(std::string_view text)
{
    return parse_guarded(text, [](const json& j) {
        IdentityDocument doc;
        doc.grade = j.at("meta").at("grade").get<std::size_t>();
        doc.version = j.at("meta").at("version").get<std::string>();
        for (const auto& b : j.at("basis"))
            doc.basis.push_back(comm_from_json(b, 2));
        for (const auto& id : j.at("identities"))
            doc.identities.push_back(expr_from_json(id, 2));
        for (const auto& id : j.at("lifted"))
            doc.lifted.push_back(expr_from_json(id, 2));
        return doc;
    });
}

std::vector<std::size_t> TableRow::mismatches() const
{
    std::vector<std::size_t> out;
    if (!published)
        return out;
    for (std::size_t i = 0; i < computed.size(); ++i)
        if (i >= published->size() || (*published)[i] != computed[i])
            out.push_back(i + 2);
    return out;
}

std::optional<std::vector<std::size_t>> published_row(std::string_view name)
{
    static const std::map<std::string, std::vector<std::size_t>, std::less<>> rows = {
        {"dim", {1, 2, 3, 6, 9, 18, 30, 56, 99}},
        {"none", {1, 2, 1, 8, 7, 32, 31, 96, 97}},
        {"grade4", {1, 2, 1, 6, 5, 24, 23, 78, 78}},
        {"grade6", {1, 2, 1, 6, 4, 18, 17, 67, 65}},
        {"compact", {1, 2, 1, 6, 4, 18, 13, 38, 52}},
        {"symmetric", {0, 2, 0, 6, 0, 18, 0, 42, 0}},
    };
    auto it = rows.find(name);
    if (it == rows.end())
        return std::nullopt;
    return it->second;
}

std::string render(const TableDocument& doc, Format format)
{
    switch (format) {
    case Format::text: {
        std::vector<std::size_t> grades;
        for (std::size_t m = 2; m <= doc.max_grade; ++m)
            grades.push_back(m);
        std::string out = fmt::format("m: {}\n", join_counts(grades));
        for (const auto& r : doc.rows) {
            out += fmt::format("{}: {}\n", r.name, join_counts(r.computed));
            if (!r.published)
                continue;
            std::vector<std::size_t> pub(r.published->begin(),
                                         r.published->begin() +
                                             static_cast<long>(std::min(r.published->size(), r.computed.size())));
            auto bad = r.mismatches();
            out += fmt::format("  published: {} ({})\n", join_counts(pub),
                               bad.empty() ? "match" : fmt::format("mismatch at m={}", join_counts(bad)));
        }
        return out;
    }
    case Format::latex: {
        std::string out = fmt::format("\\begin{{tabular}}{{|c|{}|}} \\hline\n$m$", std::string(doc.max_grade - 1, 'c'));
        for (std::size_t m = 2; m <= doc.max_grade; ++m)
            out += fmt::format(" & {}", m);
        out += " \\\\ \\hline\n";
        for (const auto& r : doc.rows) {
            out += r.name;
            for (auto c : r.computed)
                out += fmt::format(" & {}", c);
            out += " \\\\\n";
        }
        return out + "\\hline\n\\end{tabular}\n";
    }
    case Format::json: {
        json rows = json::array();
        for (const auto& r : doc.rows) {
            json row = {{"name", r.name}, {"computed", r.computed}};
            row["published"] = r.published ? json(*r.published) : json(nullptr);
            row["mismatches"] = r.mismatches();
            rows.push_back(std::move(row));
        }
        json j = {{"meta", {{"max_grade", doc.max_grade}, {"version", doc.version}}}, {"rows", rows}};
        return j.dump(2) + "\n";
    }
    }
    throw std::logic_error("render: bad format");
}

TableDocument parse_table_json(std::string_view text)
{
    return parse_guarded(text, [](const json& j) {
        TableDocument doc;
        doc.max_grade = j.at("meta").at("max_grade").get<std::size_t>();
        doc.version = j.at("meta").at("version").get<std::string>();
        for (const auto& r : j.at("rows")) {
            TableRow row;
            row.name = r.at("name").get<std::string>();
            row.computed = r.at("computed").get<std::vector<std::size_t>>();
            if (!r.at("published").is_null())
                row.published = r.at("published").get<std::vector<std::size_t>>();
            doc.rows.push_back(std::move(row));
        }
        return doc;
    });
}

}  // namespace bch
