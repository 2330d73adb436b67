#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <map>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "bch/identities.hpp"
#include "bch/render.hpp"
#include "bch/series.hpp"

namespace bch::cli {

namespace {

constexpr std::size_t kDefaultCap = 10;

struct RunConfig {
    std::size_t grade = kDefaultCap;
    std::size_t vars = 2;
    std::string regime = "none";
    std::string inputs;
    std::string format = "text";
    std::string latex_style = "nested";
    std::string orientation = "published";
    std::vector<std::string> rows;
    std::string output;
    bool verify = false;
    bool unsafe_grade = false;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void check_grade(const RunConfig& cfg, std::size_t min_grade, std::ostream& err)
{
    if (cfg.grade < min_grade)
        throw UsageError(fmt::format("grade must be at least {}", min_grade));
    if (cfg.grade > kMaxGrade)
        throw UsageError(fmt::format("grade must be at most {}", kMaxGrade));
    if (cfg.grade > kDefaultCap) {
        if (!cfg.unsafe_grade)
            throw UsageError(fmt::format("grade {} is above the cap {}; pass --unsafe-grade to allow it", cfg.grade,
                                         kDefaultCap));
        err << "warning: grades above " << kDefaultCap << " need a lot of time and memory\n";
    }
}

Regime regime_arg(const std::string& s)
{
    try {
        return parse_regime(s);
    }
    catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// phi vs Dynkin vs log(e^X e^Y), compared on words.
void verify_oracles(std::size_t max_grade, std::size_t vars)
{
    for (std::size_t m = 1; m <= max_grade; ++m) {
        AssocPoly phi = expand_lie(phi_m(m, vars));
        if (phi != log_product_words(m, vars))
            throw VerificationError(fmt::format("grade {}: phi_m differs from the log series", m));
        if (vars == 2 && phi != expand_lie(dynkin_phi_m(m)))
            throw VerificationError(fmt::format("grade {}: phi_m differs from the Dynkin form", m));
    }
}

void verify_symmetric(std::size_t max_grade)
{
    for (std::size_t m = 1; m <= max_grade; ++m)
        if (expand_lie(sym_bch_m(m)) != expand_lie(sym_bch_three_variable(m)))
            throw VerificationError(fmt::format("grade {}: symmetric term differs from the three-variable route", m));
}

std::string cmd_bch(const RunConfig& cfg, std::ostream& err)
{
    check_grade(cfg, 1, err);
    Regime regime = regime_arg(cfg.regime);
    if (cfg.vars < 2 || cfg.vars > kMaxAlphabet)
        throw UsageError(fmt::format("--vars must be in 2..{}", kMaxAlphabet));
    if (cfg.vars > 2 && regime != Regime::none)
        throw UsageError("identity regimes are only available for two variables");
    if (cfg.verify)
        verify_oracles(cfg.grade, cfg.vars);

    SeriesDocument doc;
    doc.grade = cfg.grade;
    doc.vars = cfg.vars;
    doc.regime = to_string(regime);
    doc.variant = to_string(Variant::plain);
    if (cfg.vars == 2) {
        SeriesReducer reducer(cfg.grade);
        for (std::size_t m = 1; m <= cfg.grade; ++m)
            doc.parts.push_back(reducer.phi_reduced(m, regime));
    }
    else {
        for (std::size_t m = 1; m <= cfg.grade; ++m)
            doc.parts.push_back(phi_m(m, cfg.vars));
    }
    return render(doc, parse_format(cfg.format), parse_latex_style(cfg.latex_style));
}

std::string cmd_symbch(const RunConfig& cfg, std::ostream& err)
{
    check_grade(cfg, 1, err);
    Regime regime = regime_arg(cfg.regime);
    if (cfg.vars != 2)
        throw UsageError("the symmetric series is only available for two variables");
    Regime inputs = regime;
    if (!cfg.inputs.empty())
        inputs = regime_arg(cfg.inputs);
    else if (regime == Regime::full)
        inputs = Regime::compact;
    if (cfg.verify) {
        verify_oracles(cfg.grade, 2);
        verify_symmetric(cfg.grade);
    }

    SeriesDocument doc;
    doc.grade = cfg.grade;
    doc.vars = 2;
    doc.regime = to_string(regime);
    doc.variant = to_string(Variant::symmetric);
    SeriesReducer reducer(cfg.grade);
    for (std::size_t m = 1; m <= cfg.grade; ++m) {
        LieExpr psi = reducer.psi(m, inputs, regime);
        if (cfg.verify && expand_lie(psi) != expand_lie(sym_bch_m(m)))
            throw VerificationError(fmt::format("grade {}: reduced symmetric term changed its expansion", m));
        doc.parts.push_back(std::move(psi));
    }
    return render(doc, parse_format(cfg.format), parse_latex_style(cfg.latex_style));
}

std::string cmd_identities(const RunConfig& cfg, std::ostream& err)
{
    check_grade(cfg, 2, err);
    Orientation orientation;
    if (cfg.orientation == "published")
        orientation = Orientation::published;
    else if (cfg.orientation == "engine")
        orientation = Orientation::engine;
    else
        throw UsageError("--orientation must be engine or published");
    IdentityReport report = identities_and_basis(cfg.grade, {orientation, false});
    if (cfg.verify) {
        for (const auto& id : report.identities)
            if (!expand_lie(id).is_zero())
                throw VerificationError("identity does not expand to zero");
        // Independence of the basis is checked on a common word index.
        std::map<Word, std::size_t> index;
        for (const auto& b : report.basis)
            for (const auto& [word, c] : expand_nested(b))
                index.emplace(word, index.size());
        std::vector<std::vector<Rational>> rows;
        for (const auto& b : report.basis) {
            std::vector<Rational> row(index.size());
            for (const auto& [word, c] : expand_nested(b))
                row[index.at(word)] = c;
            rows.push_back(std::move(row));
        }
        if (rank(rows) != report.basis.size())
            throw VerificationError("basis is linearly dependent");
    }
    return render(make_identity_document(report), parse_format(cfg.format), parse_latex_style(cfg.latex_style));
}

std::string cmd_table(const RunConfig& cfg, std::ostream& err)
{
    check_grade(cfg, 2, err);
    std::vector<std::string> names = cfg.rows;
    if (names.empty())
        names = {"dim", "none", "grade4", "grade6", "full", "compact", "symmetric"};
    if (cfg.verify)
        verify_oracles(std::min<std::size_t>(cfg.grade, 8), 2);

    TableDocument doc;
    doc.max_grade = cfg.grade;
    SeriesReducer reducer(cfg.grade);
    for (const auto& name : names) {
        TableRow row;
        row.name = name;
        if (name == "dim") {
            row.computed = basis_dimensions(cfg.grade);
        }
        else if (name == "symmetric") {
            for (std::size_t m = 2; m <= cfg.grade; ++m)
                row.computed.push_back(reducer.psi(m, Regime::compact, Regime::compact).size());
        }
        else {
            row.computed = table_counts(reducer, cfg.grade, regime_arg(name));
        }
        row.published = published_row(name);
        if (row.published)
            row.published->resize(std::min(row.published->size(), row.computed.size()));
        doc.rows.push_back(std::move(row));
    }
    return render(doc, parse_format(cfg.format));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Baker-Campbell-Hausdorff series in right-nested commutators", "bchtool"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub, const char* grade_name) {
        sub->add_option(grade_name, cfg.grade, "Highest grade")->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
        sub->add_option("--output", cfg.output, "Write the document to this file");
        sub->add_option("--latex-style", cfg.latex_style, "Commutator notation in LaTeX")
            ->check(CLI::IsMember({"nested", "flat"}));
        sub->add_flag("--verify", cfg.verify, "Check against independent computations first");
        sub->add_flag("--unsafe-grade", cfg.unsafe_grade, "Allow grades above 10");
    };
    const std::vector<std::string> regimes{"none", "grade4", "grade6", "full", "compact"};

    auto* bch = app.add_subcommand("bch", "Terms Phi_1..Phi_m of log(e^X e^Y)");
    common(bch, "--grade,--max-grade");
    bch->add_option("--vars", cfg.vars, "Number of generators")->check(CLI::Range(2, int(kMaxAlphabet)));
    bch->add_option("--regime", cfg.regime, "Identity regime")->check(CLI::IsMember(regimes));

    auto* sym = app.add_subcommand("symbch", "Terms Psi_1..Psi_m of log(e^(X/2) e^Y e^(X/2))");
    common(sym, "--grade,--max-grade");
    sym->add_option("--vars", cfg.vars, "Number of generators (2 only)");
    sym->add_option("--regime", cfg.regime, "Reduction applied to each Psi_m")->check(CLI::IsMember(regimes));
    sym->add_option("--inputs", cfg.inputs,
                    "Regime of the Phi inputs (default: the --regime value, compact for full)")
        ->check(CLI::IsMember(regimes));

    auto* ids = app.add_subcommand("identities", "Basis and identities among the grade-m commutators");
    common(ids, "--grade");
    ids->add_option("--orientation", cfg.orientation, "Which commutators the identities eliminate")
        ->check(CLI::IsMember({"engine", "published"}));

    auto* table = app.add_subcommand("table", "Term counts per grade next to the published ones");
    common(table, "--max-grade,--grade");
    table->add_option("--row", cfg.rows, "Rows to compute (repeatable)")
        ->check(CLI::IsMember({"dim", "none", "grade4", "grade6", "full", "compact", "symmetric"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    }
    catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    }
    catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return ok;
        }
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    try {
        std::string doc;
        if (*bch)
            doc = cmd_bch(cfg, err);
        else if (*sym)
            doc = cmd_symbch(cfg, err);
        else if (*ids)
            doc = cmd_identities(cfg, err);
        else
            doc = cmd_table(cfg, err);
        if (cfg.output.empty()) {
            out << doc;
        }
        else {
            std::ofstream file(cfg.output, std::ios::binary);
            if (!file)
                throw UsageError(fmt::format("cannot open '{}' for writing", cfg.output));
            file << doc;
        }
        return ok;
    }
    catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
    catch (const std::exception& e) {
        err << "verification failed: " << e.what() << "\n";
        return verification_failure;
    }
}

}  // namespace bch::cli
