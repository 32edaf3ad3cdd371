#ifndef GODDARD_NUMERIC_EVAL_HPP
#define GODDARD_NUMERIC_EVAL_HPP

#include <vector>

#include "goddard/goddard_series.hpp"

namespace goddard {

// One grid point: the truncated sum, the closed-form value, and the
// alternating-series bound on the truncation error.
struct NumericSample {
    double y = 0.0;
    double partial_sum = 0.0;
    double closed_value = 0.0;
    double abs_error = 0.0;   // |partial_sum - closed_value|
    double tail_bound = 0.0;  // magnitude of the first omitted term
    bool bound_valid = false;
    int terms_used = 0;
};

// Compensated sum of terms n = 1..n_terms of the defining series at y.
// Each term's rational factor is formed exactly and converted to double once.
double eval_partial(GoddardSpec spec, double y, int n_terms);

// Closed-form value with platform sin/cos. Families A and B switch to the
// order-12 exact expansion below |y| < 0.01, where dividing by y^2 or y^3
// would cancel catastrophically (and fail outright at y = 0).
double eval_closed(GoddardSpec spec, double y);

struct TailBound {
    double bound = 0.0;
    bool valid = false;
};

// Leibniz-style remainder: bound = |t_{n_terms+1}|. valid reports whether the
// term magnitudes are nonincreasing over the next five steps, the empirical
// license for quoting the bound.
TailBound tail_bound(GoddardSpec spec, double y, int n_terms);

// steps + 1 evenly spaced samples over [y_min, y_max], endpoints included.
std::vector<NumericSample> sample_grid(GoddardSpec spec, double y_min, double y_max,
                                       int steps, int n_terms);

}  // namespace goddard

#endif
