#include "goddard/numeric_eval.hpp"

#include <cmath>
#include <string>

namespace goddard {

namespace {

constexpr double kNearZeroThreshold = 0.01;
constexpr int kFallbackOrder = 12;

double ipow(double base, int exponent) {
    if (exponent < 0) {
        return 1.0 / ipow(base, -exponent);
    }
    double acc = 1.0;
    for (int i = 0; i < exponent; ++i) {
        acc *= base;
    }
    return acc;
}

int term_power(Family family, int n) {
    switch (family) {
        case Family::S: return 2 * n + 1;
        case Family::A: return 2 * n - 1;
        case Family::B: return 2 * n - 2;
    }
    return 0;
}

int binomial_index(Family family, int k) {
    switch (family) {
        case Family::S: return k;
        case Family::A: return 2 * k;
        case Family::B: return 2 * k + 1;
    }
    return 0;
}

// Signed value of the n-th defining term at y, n >= 1.
double term_value(GoddardSpec spec, double y, int n) {
    BigInt b = binomial(static_cast<unsigned>(2 * n + 1),
                        static_cast<unsigned>(binomial_index(spec.family, spec.k)));
    if (b.is_zero()) {
        return 0.0;
    }
    Rational factor(std::move(b), factorial(static_cast<unsigned>(2 * n + 1)));
    double magnitude = factor.to_double() * ipow(y, term_power(spec.family, n));
    return n % 2 == 1 ? magnitude : -magnitude;
}

void require_terms(int n_terms) {
    if (n_terms < 1) {
        throw UsageError("term count must be at least 1, got " + std::to_string(n_terms));
    }
}

}  // namespace

double eval_partial(GoddardSpec spec, double y, int n_terms) {
    require_terms(n_terms);
    // Neumaier compensation; the terms alternate and can cancel heavily.
    double sum = 0.0;
    double comp = 0.0;
    for (int n = 1; n <= n_terms; ++n) {
        const double t = term_value(spec, y, n);
        const double next = sum + t;
        if (std::fabs(sum) >= std::fabs(t)) {
            comp += (sum - next) + t;
        } else {
            comp += (t - next) + sum;
        }
        sum = next;
    }
    return sum + comp;
}

double eval_closed(GoddardSpec spec, double y) {
    if (spec.family != Family::S && std::fabs(y) < kNearZeroThreshold) {
        return eval_double(closed_to_series(closed_form(spec), kFallbackOrder), y);
    }
    double acc = 0.0;
    const ClosedFormExpression expr = closed_form(spec);  // keep alive for the loop
    for (const ClosedTerm& t : expr.terms()) {
        double trig = 1.0;
        switch (t.trig) {
            case Trig::None: break;
            case Trig::Sin: trig = std::sin(y); break;
            case Trig::Cos: trig = std::cos(y); break;
        }
        acc += t.coef.to_double() * ipow(y, t.power) * trig;
    }
    return acc;
}

TailBound tail_bound(GoddardSpec spec, double y, int n_terms) {
    require_terms(n_terms);
    TailBound result;
    result.bound = std::fabs(term_value(spec, y, n_terms + 1));
    result.valid = true;
    for (int m = n_terms; m <= n_terms + 4; ++m) {
        if (!(std::fabs(term_value(spec, y, m + 1)) <= std::fabs(term_value(spec, y, m)))) {
            result.valid = false;
            break;
        }
    }
    return result;
}

std::vector<NumericSample> sample_grid(GoddardSpec spec, double y_min, double y_max,
                                       int steps, int n_terms) {
    if (steps < 1) {
        throw UsageError("steps must be at least 1, got " + std::to_string(steps));
    }
    if (!(y_min <= y_max)) {
        throw UsageError("grid bounds out of order: y_min > y_max");
    }
    require_terms(n_terms);
    std::vector<NumericSample> rows;
    rows.reserve(static_cast<std::size_t>(steps) + 1);
    const double span = y_max - y_min;
    for (int i = 0; i <= steps; ++i) {
        // Endpoints are exact; interior points are evenly spaced.
        double y = y_min + span * i / steps;
        if (i == 0) {
            y = y_min;
        } else if (i == steps) {
            y = y_max;
        }
        NumericSample row;
        row.y = y;
        row.partial_sum = eval_partial(spec, y, n_terms);
        row.closed_value = eval_closed(spec, y);
        row.abs_error = std::fabs(row.partial_sum - row.closed_value);
        TailBound tb = tail_bound(spec, y, n_terms);
        row.tail_bound = tb.bound;
        row.bound_valid = tb.valid;
        row.terms_used = n_terms;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace goddard
