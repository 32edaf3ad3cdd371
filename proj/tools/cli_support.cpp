#include "cli_support.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "goddard/errors.hpp"

namespace goddard::cli {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

char family_letter(Family family) {
    switch (family) {
        case Family::S: return 'S';
        case Family::A: return 'A';
        case Family::B: return 'B';
    }
    return '?';
}

Family parse_family(const std::string& name) {
    if (name == "S") return Family::S;
    if (name == "A") return Family::A;
    if (name == "B") return Family::B;
    throw UsageError("unknown family '" + name + "' (expected S, A or B)");
}

namespace {

const char* bool_word(bool b) { return b ? "true" : "false"; }

std::string quoted(const std::string& s) {
    // Every string we emit is a family letter or a canonical rational, so no
    // escaping is ever needed.
    return "\"" + s + "\"";
}

}  // namespace

std::string verify_json(const VerificationReport& report) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"k_max\": " << report.k_max << ",\n";
    out << "  \"order\": " << report.order << ",\n";
    out << "  \"all_match\": " << bool_word(report.all_match) << ",\n";
    out << "  \"per_k\": [\n";
    for (std::size_t i = 0; i < report.per_k.size(); ++i) {
        const FamilyCheck& check = report.per_k[i];
        out << "    {\"family\": \"" << family_letter(check.family) << "\", \"k\": " << check.k
            << ", \"match\": " << bool_word(check.match) << ", \"first_mismatch\": ";
        if (check.mismatch) {
            out << "{\"power\": " << check.mismatch->power << ", \"direct\": "
                << quoted(check.mismatch->direct.str()) << ", \"closed\": "
                << quoted(check.mismatch->closed.str()) << "}";
        } else {
            out << "null";
        }
        out << "}" << (i + 1 < report.per_k.size() ? "," : "") << "\n";
    }
    out << "  ]\n";
    out << "}\n";
    return out.str();
}

int verify_exit_code(const VerificationReport& report, bool bivariate_match) {
    return (report.all_match && bivariate_match) ? 0 : 1;
}

CoefficientTable coefficient_table(GoddardSpec spec, int order) {
    CoefficientTable table;
    table.spec = spec;
    table.order = order;
    const TruncatedSeries direct = direct_series(spec, order);
    const TruncatedSeries closed = closed_to_series(closed_form(spec), order);
    for (const Rational& c : direct.coefficients()) {
        table.direct.push_back(c.str());
    }
    for (const Rational& c : closed.coefficients()) {
        table.closed.push_back(c.str());
    }
    table.match = direct == closed;
    return table;
}

namespace {

std::string string_list(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i > 0) out += ", ";
        out += quoted(items[i]);
    }
    out += "]";
    return out;
}

}  // namespace

std::string coeffs_json(const CoefficientTable& table) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"family\": \"" << family_letter(table.spec.family) << "\",\n";
    out << "  \"k\": " << table.spec.k << ",\n";
    out << "  \"order\": " << table.order << ",\n";
    out << "  \"direct\": " << string_list(table.direct) << ",\n";
    out << "  \"closed\": " << string_list(table.closed) << ",\n";
    out << "  \"match\": " << bool_word(table.match) << "\n";
    out << "}\n";
    return out.str();
}

std::string coeffs_csv(const CoefficientTable& table) {
    std::ostringstream out;
    out << "power,direct,closed\n";
    for (std::size_t i = 0; i < table.direct.size(); ++i) {
        out << i << "," << table.direct[i] << "," << table.closed[i] << "\n";
    }
    return out.str();
}

NumericSample eval_sample(GoddardSpec spec, double y, int n_terms) {
    NumericSample sample;
    sample.y = y;
    sample.partial_sum = eval_partial(spec, y, n_terms);
    sample.closed_value = eval_closed(spec, y);
    sample.abs_error = std::fabs(sample.partial_sum - sample.closed_value);
    const TailBound tb = tail_bound(spec, y, n_terms);
    sample.tail_bound = tb.bound;
    sample.bound_valid = tb.valid;
    sample.terms_used = n_terms;
    return sample;
}

std::string sample_json(const NumericSample& sample) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"y\": " << format_double(sample.y) << ",\n";
    out << "  \"partial_sum\": " << format_double(sample.partial_sum) << ",\n";
    out << "  \"closed_value\": " << format_double(sample.closed_value) << ",\n";
    out << "  \"abs_error\": " << format_double(sample.abs_error) << ",\n";
    out << "  \"tail_bound\": " << format_double(sample.tail_bound) << ",\n";
    out << "  \"bound_valid\": " << bool_word(sample.bound_valid) << ",\n";
    out << "  \"terms_used\": " << sample.terms_used << "\n";
    out << "}\n";
    return out.str();
}

std::string table_csv(const std::vector<NumericSample>& rows) {
    std::ostringstream out;
    out << "y,partial_sum,closed_form,abs_error,tail_bound,bound_valid,terms\n";
    for (const NumericSample& row : rows) {
        out << format_double(row.y) << "," << format_double(row.partial_sum) << ","
            << format_double(row.closed_value) << "," << format_double(row.abs_error) << ","
            << format_double(row.tail_bound) << "," << bool_word(row.bound_valid) << ","
            << row.terms_used << "\n";
    }
    return out.str();
}

bool bivariate_triple_match(int x_order, int y_order) {
    const BivariateTruncatedSeries direct =
        bivariate_series(BivariateMethod::Direct, x_order, y_order);
    const BivariateTruncatedSeries closed =
        bivariate_series(BivariateMethod::Closed, x_order, y_order);
    const BivariateTruncatedSeries angle =
        bivariate_series(BivariateMethod::Angle, x_order, y_order);
    return direct == closed && closed == angle;
}

}  // namespace goddard::cli
