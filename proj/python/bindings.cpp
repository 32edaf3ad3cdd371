// Python surface for the series engine. Exact values cross the boundary as
// canonical strings (rationals) or arbitrary-precision ints; floats stay
// IEEE doubles.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>
#include <string>
#include <vector>

#include "goddard/errors.hpp"
#include "goddard/goddard_series.hpp"
#include "goddard/numeric_eval.hpp"

namespace py = pybind11;

namespace {

using goddard::Family;
using goddard::GoddardSpec;

GoddardSpec make_spec(const std::string& family, int k) {
    if (k < 0) {
        throw goddard::UsageError("k must be nonnegative");
    }
    if (family == "S") return {Family::S, k};
    if (family == "A") return {Family::A, k};
    if (family == "B") return {Family::B, k};
    throw goddard::UsageError("unknown family '" + family + "' (expected S, A or B)");
}

std::string letter_of(Family family) {
    switch (family) {
        case Family::S: return "S";
        case Family::A: return "A";
        case Family::B: return "B";
    }
    return "?";
}

py::int_ to_py_int(const goddard::BigInt& value) {
    std::ostringstream text;
    text << value;
    PyObject* obj = PyLong_FromString(text.str().c_str(), nullptr, 10);
    if (obj == nullptr) {
        throw py::error_already_set();
    }
    return py::reinterpret_steal<py::int_>(obj);
}

std::vector<std::string> coefficient_strings(const goddard::TruncatedSeries& s) {
    std::vector<std::string> out;
    out.reserve(s.coefficients().size());
    for (const goddard::Rational& c : s.coefficients()) {
        out.push_back(c.str());
    }
    return out;
}

py::dict sample_dict(const goddard::NumericSample& s) {
    py::dict d;
    d["y"] = s.y;
    d["partial_sum"] = s.partial_sum;
    d["closed_value"] = s.closed_value;
    d["abs_error"] = s.abs_error;
    d["tail_bound"] = s.tail_bound;
    d["bound_valid"] = s.bound_valid;
    d["terms_used"] = s.terms_used;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact formal power series engine for the Goddard series S_k, A_k, B_k";

    m.def(
        "binomial", [](unsigned n, unsigned k) { return to_py_int(goddard::binomial(n, k)); },
        py::arg("n"), py::arg("k"), "Exact binomial coefficient C(n, k); 0 when k > n.");

    m.def(
        "factorial", [](unsigned n) { return to_py_int(goddard::factorial(n)); }, py::arg("n"),
        "Exact n!.");

    m.def(
        "direct_coefficients",
        [](const std::string& family, int k, int order) {
            return coefficient_strings(goddard::direct_series(make_spec(family, k), order));
        },
        py::arg("family"), py::arg("k"), py::arg("order"),
        "Coefficients 0..order of the defining partial sum, as canonical 'p/q' strings.");

    m.def(
        "closed_coefficients",
        [](const std::string& family, int k, int order) {
            const GoddardSpec spec = make_spec(family, k);
            return coefficient_strings(
                goddard::closed_to_series(goddard::closed_form(spec), order));
        },
        py::arg("family"), py::arg("k"), py::arg("order"),
        "Coefficients 0..order of the closed form's expansion, as canonical 'p/q' strings.");

    m.def(
        "closed_form_terms",
        [](const std::string& family, int k) {
            const GoddardSpec spec = make_spec(family, k);
            // Keep the expression alive for the loop; terms() is a view.
            const goddard::ClosedFormExpression expr = goddard::closed_form(spec);
            py::list terms;
            for (const goddard::ClosedTerm& t : expr.terms()) {
                const char* trig = t.trig == goddard::Trig::Sin   ? "sin"
                                   : t.trig == goddard::Trig::Cos ? "cos"
                                                                  : "";
                terms.append(py::make_tuple(t.coef.str(), t.power, trig));
            }
            return terms;
        },
        py::arg("family"), py::arg("k"),
        "Closed form as (coefficient, power, trig) tuples; trig is 'sin', 'cos' or ''.");

    m.def(
        "verify",
        [](int k_max, int order) {
            const goddard::VerificationReport report = goddard::verify_theorem(k_max, order);
            py::list per_k;
            for (const goddard::FamilyCheck& check : report.per_k) {
                py::dict entry;
                entry["family"] = letter_of(check.family);
                entry["k"] = check.k;
                entry["match"] = check.match;
                if (check.mismatch) {
                    py::dict mm;
                    mm["power"] = check.mismatch->power;
                    mm["direct"] = check.mismatch->direct.str();
                    mm["closed"] = check.mismatch->closed.str();
                    entry["first_mismatch"] = mm;
                } else {
                    entry["first_mismatch"] = py::none();
                }
                per_k.append(entry);
            }
            py::dict out;
            out["k_max"] = report.k_max;
            out["order"] = report.order;
            out["all_match"] = report.all_match;
            out["per_k"] = per_k;
            return out;
        },
        py::arg("k_max") = 12, py::arg("order") = 41,
        "Compare direct and closed coefficients for every family and k <= k_max.");

    m.def(
        "bivariate_matches",
        [](int x_order, int y_order) {
            const auto direct =
                goddard::bivariate_series(goddard::BivariateMethod::Direct, x_order, y_order);
            const auto closed =
                goddard::bivariate_series(goddard::BivariateMethod::Closed, x_order, y_order);
            const auto angle =
                goddard::bivariate_series(goddard::BivariateMethod::Angle, x_order, y_order);
            return direct == closed && closed == angle;
        },
        py::arg("x_order") = 8, py::arg("y_order") = 25,
        "True when the direct, closed and angle-addition bivariate constructions agree.");

    m.def(
        "eval_partial",
        [](const std::string& family, int k, double y, int n_terms) {
            return goddard::eval_partial(make_spec(family, k), y, n_terms);
        },
        py::arg("family"), py::arg("k"), py::arg("y"), py::arg("n_terms") = 30,
        "Compensated sum of the first n_terms series terms at y.");

    m.def(
        "eval_closed",
        [](const std::string& family, int k, double y) {
            return goddard::eval_closed(make_spec(family, k), y);
        },
        py::arg("family"), py::arg("k"), py::arg("y"),
        "Closed-form value at y; A and B evaluate through y = 0.");

    m.def(
        "tail_bound",
        [](const std::string& family, int k, double y, int n_terms) {
            const goddard::TailBound tb = goddard::tail_bound(make_spec(family, k), y, n_terms);
            return py::make_tuple(tb.bound, tb.valid);
        },
        py::arg("family"), py::arg("k"), py::arg("y"), py::arg("n_terms") = 30,
        "(bound, valid): first omitted term magnitude and whether quoting it is justified.");

    m.def(
        "sample_grid",
        [](const std::string& family, int k, double y_min, double y_max, int steps,
           int n_terms) {
            py::list rows;
            for (const goddard::NumericSample& s :
                 goddard::sample_grid(make_spec(family, k), y_min, y_max, steps, n_terms)) {
                rows.append(sample_dict(s));
            }
            return rows;
        },
        py::arg("family"), py::arg("k"), py::arg("y_min"), py::arg("y_max"), py::arg("steps"),
        py::arg("n_terms") = 30,
        "steps + 1 evaluation records over [y_min, y_max], endpoints included.");
}
