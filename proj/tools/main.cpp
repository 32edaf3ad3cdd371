// goddard — verify the S/A/B series identities, dump exact coefficients,
// evaluate numerically, and emit CSV tables.
//
// Exit codes: 0 success, 1 verification mismatch, 2 usage error.

#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "cli_support.hpp"
#include "goddard/errors.hpp"

namespace {

using goddard::Family;
using goddard::GoddardSpec;

// Decorate the stderr status line only on a live terminal, and never when
// GODDARD_NO_COLOR is set.
bool use_color() {
    return isatty(fileno(stderr)) != 0 && std::getenv("GODDARD_NO_COLOR") == nullptr;
}

const char* green() { return use_color() ? "\x1b[32m" : ""; }
const char* red() { return use_color() ? "\x1b[31m" : ""; }
const char* reset() { return use_color() ? "\x1b[0m" : ""; }

// Payload goes to stdout, or to --out PATH when given; diagnostics stay on
// stderr either way.
int emit_payload(const std::string& payload, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << payload;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "goddard: cannot open '" << out_path << "' for writing\n";
        return 2;
    }
    out << payload;
    out.flush();
    if (!out) {
        std::cerr << "goddard: write to '" << out_path << "' failed\n";
        return 2;
    }
    return 0;
}

int run_verify(int k_max, int order, const std::string& out_path) {
    const goddard::VerificationReport report = goddard::verify_theorem(k_max, order);
    const int x_order = std::min(k_max, 8);
    const bool bivariate_ok = goddard::cli::bivariate_triple_match(x_order, order);

    const int emit_rc = emit_payload(goddard::cli::verify_json(report), out_path);
    if (emit_rc != 0) {
        return emit_rc;
    }

    if (report.all_match && bivariate_ok) {
        std::cerr << green() << "verify: all coefficients match for k <= " << k_max
                  << " at order " << order << "; bivariate routes agree up to x^" << x_order
                  << reset() << "\n";
    } else if (!report.all_match) {
        std::cerr << red() << "verify: coefficient mismatch — see per_k in the JSON payload"
                  << reset() << "\n";
    } else {
        std::cerr << red() << "verify: the three bivariate constructions disagree up to x^"
                  << x_order << reset() << "\n";
    }
    return goddard::cli::verify_exit_code(report, bivariate_ok);
}

int run_coeffs(GoddardSpec spec, int order, const std::string& format,
               const std::string& out_path) {
    const goddard::cli::CoefficientTable table = goddard::cli::coefficient_table(spec, order);
    const std::string payload =
        format == "csv" ? goddard::cli::coeffs_csv(table) : goddard::cli::coeffs_json(table);
    return emit_payload(payload, out_path);
}

int run_eval(GoddardSpec spec, double y, int terms, const std::string& out_path) {
    const goddard::NumericSample sample = goddard::cli::eval_sample(spec, y, terms);
    return emit_payload(goddard::cli::sample_json(sample), out_path);
}

int run_table(GoddardSpec spec, double from, double to, int steps, int terms,
              const std::string& out_path) {
    const std::vector<goddard::NumericSample> rows =
        goddard::sample_grid(spec, from, to, steps, terms);
    return emit_payload(goddard::cli::table_csv(rows), out_path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Exact-arithmetic toolkit for the Goddard series S_k, A_k, B_k:\n"
        "compare the defining sums against their closed forms coefficient by\n"
        "coefficient, and evaluate either side with alternating-series tail bounds."};
    app.require_subcommand(1);

    std::string family_name = "S";
    std::string out_path;
    const auto family_check = CLI::IsMember({"S", "A", "B"});

    // verify ----------------------------------------------------------------
    int verify_k_max = 12;
    int verify_order = 41;
    std::string verify_format = "json";
    CLI::App* verify =
        app.add_subcommand("verify", "Check every family member k <= k-max against its closed "
                                     "form, plus the bivariate cross-check; JSON report");
    verify->add_option("--k-max", verify_k_max, "Largest k to check")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify->add_option("--order", verify_order, "Truncation order for the comparison")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    verify->add_option("--format", verify_format, "Output format")
        ->check(CLI::IsMember({"json"}))
        ->capture_default_str();
    verify->add_option("--out", out_path, "Write the payload to PATH instead of stdout");

    // coeffs ----------------------------------------------------------------
    int coeffs_k = 0;
    int coeffs_order = 41;
    std::string coeffs_format = "json";
    CLI::App* coeffs = app.add_subcommand(
        "coeffs", "Print direct and closed-form coefficients of one family member");
    coeffs->add_option("--family", family_name, "Series family")
        ->check(family_check)
        ->capture_default_str();
    coeffs->add_option("--k", coeffs_k, "Member index k")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    coeffs->add_option("--order", coeffs_order, "Truncation order")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    coeffs->add_option("--format", coeffs_format, "Output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    coeffs->add_option("--out", out_path, "Write the payload to PATH instead of stdout");

    // eval ------------------------------------------------------------------
    int eval_k = 0;
    int eval_terms = 30;
    double eval_y = 0.0;
    CLI::App* eval = app.add_subcommand(
        "eval", "Evaluate one family member at a point: partial sum, closed form, tail bound");
    eval->add_option("--family", family_name, "Series family")
        ->check(family_check)
        ->capture_default_str();
    eval->add_option("--k", eval_k, "Member index k")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    eval->add_option("--y", eval_y, "Evaluation point")->required();
    eval->add_option("--terms", eval_terms, "Number of series terms to sum")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    std::string eval_format = "json";
    eval->add_option("--format", eval_format, "Output format")
        ->check(CLI::IsMember({"json"}))
        ->capture_default_str();
    eval->add_option("--out", out_path, "Write the payload to PATH instead of stdout");

    // table -----------------------------------------------------------------
    int table_k = 0;
    int table_steps = 10;
    int table_terms = 30;
    double table_from = 0.0;
    double table_to = 0.0;
    std::string table_format = "csv";
    CLI::App* table = app.add_subcommand(
        "table", "Sample one family member over a y-grid and emit CSV; rows = steps + 1");
    table->add_option("--family", family_name, "Series family")
        ->check(family_check)
        ->capture_default_str();
    table->add_option("--k", table_k, "Member index k")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    table->add_option("--from", table_from, "Left endpoint of the y-grid")->required();
    table->add_option("--to", table_to, "Right endpoint of the y-grid")->required();
    table->add_option("--steps", table_steps,
                      "Number of grid intervals; the table has steps + 1 rows")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    table->add_option("--terms", table_terms, "Number of series terms per row")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    table->add_option("--format", table_format, "Output format")
        ->check(CLI::IsMember({"csv"}))
        ->capture_default_str();
    table->add_option("--out", out_path, "Write the payload to PATH instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);  // --help and friends
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints the usage message to stderr
        return 2;
    }

    try {
        const Family family = goddard::cli::parse_family(family_name);
        if (*verify) {
            return run_verify(verify_k_max, verify_order, out_path);
        }
        if (*coeffs) {
            return run_coeffs({family, coeffs_k}, coeffs_order, coeffs_format, out_path);
        }
        if (*eval) {
            return run_eval({family, eval_k}, eval_y, eval_terms, out_path);
        }
        return run_table({family, table_k}, table_from, table_to, table_steps, table_terms,
                         out_path);
    } catch (const goddard::UsageError& e) {
        std::cerr << "goddard: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        // Any other failure is still reported as a usage problem rather than
        // a crash; the computation itself raises only the errors above.
        std::cerr << "goddard: " << e.what() << "\n";
        return 2;
    }
}
