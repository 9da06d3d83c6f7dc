#include "mld/cli.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "mld/discrepancy.hpp"
#include "mld/errors.hpp"
#include "mld/newton.hpp"
#include "mld/polynomial.hpp"
#include "mld/report_io.hpp"
#include "mld/version.hpp"

namespace mld {

namespace {

std::vector<Rational> parse_delta_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) out.push_back(parse_rational(item));
    if (out.empty()) throw InputError("delta: empty list");
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{std::string(kToolName) +
                 ": minimal log discrepancies of hypersurface pairs from Newton polyhedra"};

    std::string polynomial_text;
    std::string file_path;
    std::string delta_text;
    int forced_dimension = 0;
    long verify_box = 0;
    long ilp_box = 0;
    long max_enumeration = kDefaultEnumerationCeiling;
    bool json_output = false;
    bool with_lct = false;

    app.add_option("polynomial", polynomial_text,
                   "polynomial in x0..xn, '+'-joined monomials, e.g. \"x0^2 + x1^3\"");
    app.add_option("--file", file_path, "structured support file (JSON)");
    app.add_option("--delta", delta_text, "boundary coefficients p/q, comma separated");
    app.add_option("--dimension", forced_dimension,
                   "ambient dimension when it exceeds max variable index + 1");
    app.add_option("--verify", verify_box, "cross-check with brute force over [1,BOX]^(n+1)")
        ->check(CLI::PositiveNumber);
    app.add_option("--box", ilp_box, "initial integer-search box bound")
        ->check(CLI::PositiveNumber);
    app.add_option("--max-enumeration", max_enumeration, "brute-force lattice point ceiling")
        ->check(CLI::PositiveNumber);
    app.add_flag("--json", json_output, "structured output instead of text");
    app.add_flag("--lct", with_lct, "include the log canonical threshold");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }

    try {
        if (polynomial_text.empty() == file_path.empty())
            throw InputError("give exactly one of a polynomial or --file");

        std::optional<SupportSet> support;
        std::optional<std::vector<Rational>> file_delta;
        if (!polynomial_text.empty()) {
            std::optional<int> dim;
            if (forced_dimension > 0) dim = forced_dimension;
            ParsedPolynomial parsed = parse_polynomial(polynomial_text, dim);
            support = validate_support(parsed.support, parsed.dimension);
        } else {
            SupportDocument doc = parse_support_document(read_file(file_path));
            support = validate_support(doc.support, doc.dimension);
            file_delta = doc.delta;
        }

        BoundaryCoefficients delta = BoundaryCoefficients::ones(support->dimension());
        if (!delta_text.empty())
            delta = BoundaryCoefficients::of(parse_delta_list(delta_text));
        else if (file_delta)
            delta = BoundaryCoefficients::of(*file_delta);
        if (delta.delta.size() != static_cast<std::size_t>(support->dimension()))
            throw InputError("delta: expected " + std::to_string(support->dimension()) +
                             " coefficients, got " + std::to_string(delta.delta.size()));

        ReportOptions options;
        if (ilp_box > 0)
            options.ilp.search_box =
                std::vector<Rational>(support->dimension() + 1, Rational(ilp_box));
        if (verify_box > 0) options.oracle_box = verify_box;
        options.max_enumeration = max_enumeration;

        MldReport report = full_report(*support, delta, options);
        std::optional<LctResult> threshold;
        if (with_lct) threshold = lct(*support);

        if (json_output)
            out << render_json(*support, delta, report, threshold);
        else
            out << render_text(*support, delta, report, threshold);

        if (report.oracle_agrees && !*report.oracle_agrees) {
            err << "error: brute-force cross-check disagrees with the solver; this is a bug\n";
            return kExitOracleDisagreement;
        }
        if (!report.certified) {
            err << "warning: optimality not certified within the box growth limit; "
                   "retry with a larger --box\n";
            return kExitUncertified;
        }
        return kExitOk;
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    } catch (const EnumerationLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitInputError;
    }
}

} // namespace mld
