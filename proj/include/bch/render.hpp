#pragma once

// Text, JSON and LaTeX output for series, identity reports and term-count
// tables. JSON documents parse back into the same values.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bch/algebra.hpp"
#include "bch/identities.hpp"

namespace bch {

inline constexpr std::string_view kVersion = "1.0.0";

enum class Format { text, json, latex };
enum class LatexStyle { nested, flat };

Format parse_format(std::string_view s);
LatexStyle parse_latex_style(std::string_view s);

/// Thrown by the parse_* functions on malformed documents.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Terms sorted by grade, then by reversed leaf sequence (the commutator
/// list order for two letters). All renderers use this order.
std::vector<std::pair<NestedComm, Rational>> ordered_terms(const LieExpr& e);

/// "[X,[Y,[X,Y]]]", or "[X,Y,X,Y]" with the flat style. Bare generators
/// render as their name.
std::string render_comm(const NestedComm& c, std::size_t vars, LatexStyle style = LatexStyle::nested);

/// "-1/24 [X,[Y,[X,Y]]] + ...", "0" for the zero element.
std::string render_text(const LieExpr& e, std::size_t vars);
std::string render_latex(const LieExpr& e, std::size_t vars, LatexStyle style);

struct SeriesDocument {
    std::size_t grade = 0;  // highest grade emitted
    std::size_t vars = 2;
    std::string regime = "none";
    std::string variant = "plain";
    std::string version{kVersion};
    /// Homogeneous parts for grades 1..grade (index grade - 1).
    std::vector<LieExpr> parts;

    friend bool operator==(const SeriesDocument&, const SeriesDocument&) = default;
};

struct IdentityDocument {
    std::size_t grade = 0;
    std::string version{kVersion};
    std::vector<NestedComm> basis;
    /// New identities at this grade; lifted ones are listed separately.
    std::vector<LieExpr> identities;
    std::vector<LieExpr> lifted;

    friend bool operator==(const IdentityDocument&, const IdentityDocument&) = default;
};

IdentityDocument make_identity_document(const IdentityReport& report);

struct TableRow {
    std::string name;
    std::vector<std::size_t> computed;  // grades 2..2+size-1
    std::optional<std::vector<std::size_t>> published;

    /// Grades where computed and published differ; empty without a
    /// published row.
    std::vector<std::size_t> mismatches() const;

    friend bool operator==(const TableRow&, const TableRow&) = default;
};

struct TableDocument {
    std::size_t max_grade = 0;
    std::string version{kVersion};
    std::vector<TableRow> rows;

    friend bool operator==(const TableDocument&, const TableDocument&) = default;
};

/// Published term counts for grades 2..10, if the row has any.
std::optional<std::vector<std::size_t>> published_row(std::string_view name);

std::string render(const SeriesDocument& doc, Format format, LatexStyle style = LatexStyle::nested);
std::string render(const IdentityDocument& doc, Format format, LatexStyle style = LatexStyle::nested);
std::string render(const TableDocument& doc, Format format);

SeriesDocument parse_series_json(std::string_view text);
IdentityDocument parse_identity_json(std::string_view text);
TableDocument parse_table_json(std::string_view text);

}  // namespace bch
