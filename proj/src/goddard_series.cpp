#include "goddard/goddard_series.hpp"

#include <algorithm>
#include <string>
#include <tuple>
#include <utility>

namespace goddard {

namespace {

void require_nonnegative_k(int k) {
    if (k < 0) {
        throw UsageError("family index k must be nonnegative, got " + std::to_string(k));
    }
}

// y-power of the n-th defining term.
int term_power(Family family, int n) {
    switch (family) {
        case Family::S: return 2 * n + 1;
        case Family::A: return 2 * n - 1;
        case Family::B: return 2 * n - 2;
    }
    return 0;
}

// Lower index of the binomial C(2n+1, .) for the family.
int binomial_index(Family family, int k) {
    switch (family) {
        case Family::S: return k;
        case Family::A: return 2 * k;
        case Family::B: return 2 * k + 1;
    }
    return 0;
}

bool term_order(const ClosedTerm& a, const ClosedTerm& b) {
    return std::tuple(a.power, static_cast<int>(a.trig)) <
           std::tuple(b.power, static_cast<int>(b.trig));
}

}  // namespace

ClosedFormExpression ClosedFormExpression::with_term(Rational coef, int power, Trig trig) const {
    ClosedFormExpression out = *this;
    auto it = std::find_if(out.terms_.begin(), out.terms_.end(), [&](const ClosedTerm& t) {
        return t.power == power && t.trig == trig;
    });
    if (it != out.terms_.end()) {
        it->coef = it->coef + coef;
        if (it->coef.is_zero()) {
            out.terms_.erase(it);
        }
        return out;
    }
    if (coef.is_zero()) {
        return out;
    }
    out.terms_.push_back(ClosedTerm{std::move(coef), power, trig});
    std::sort(out.terms_.begin(), out.terms_.end(), term_order);
    return out;
}

ClosedFormExpression ClosedFormExpression::scaled(const Rational& factor) const {
    ClosedFormExpression out;
    if (factor.is_zero()) {
        return out;
    }
    out.terms_ = terms_;
    for (ClosedTerm& t : out.terms_) {
        t.coef = factor * t.coef;
    }
    return out;
}

TruncatedSeries direct_series(GoddardSpec spec, int order) {
    require_nonnegative_k(spec.k);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    const int j = binomial_index(spec.family, spec.k);
    for (int n = 1;; ++n) {
        const int p = term_power(spec.family, n);
        if (p > order) {
            break;
        }
        BigInt b = binomial(static_cast<unsigned>(2 * n + 1), static_cast<unsigned>(j));
        if (b.is_zero()) {
            continue;
        }
        if (n % 2 == 0) {
            b = -b;  // sign (-1)^{n+1}, n counted from 1
        }
        c[static_cast<std::size_t>(p)] = Rational(std::move(b), factorial(static_cast<unsigned>(2 * n + 1)));
    }
    return TruncatedSeries(order, std::move(c));
}

ClosedFormExpression closed_form(GoddardSpec spec) {
    require_nonnegative_k(spec.k);
    const int k = spec.k;
    ClosedFormExpression e;
    switch (spec.family) {
        case Family::S:
            if (k == 0) {
                return e.with_term(Rational(1), 1, Trig::None).with_term(Rational(-1), 0, Trig::Sin);
            }
            if (k == 1) {
                return e.with_term(Rational(1), 1, Trig::None).with_term(Rational(-1), 1, Trig::Cos);
            }
            if (k % 2 == 0) {
                BigInt sign = ((k + 2) / 2) % 2 == 0 ? 1 : -1;
                return e.with_term(Rational(sign, factorial(static_cast<unsigned>(k))), k, Trig::Sin);
            } else {
                BigInt sign = ((k + 1) / 2) % 2 == 0 ? 1 : -1;
                return e.with_term(Rational(sign, factorial(static_cast<unsigned>(k))), k, Trig::Cos);
            }
        case Family::A:
            // y^-2 S_{2k}: for k >= 1 this is (-1)^{k+1} y^{2k-2} sin y / (2k)!.
            if (k == 0) {
                return e.with_term(Rational(1), -1, Trig::None).with_term(Rational(-1), -2, Trig::Sin);
            }
            return e.with_term(Rational(k % 2 == 1 ? 1 : -1, factorial(static_cast<unsigned>(2 * k))),
                               2 * k - 2, Trig::Sin);
        case Family::B:
            // y^-3 S_{2k+1}: for k >= 1 this is (-1)^{k+1} y^{2k-2} cos y / (2k+1)!.
            if (k == 0) {
                return e.with_term(Rational(1), -2, Trig::None).with_term(Rational(-1), -2, Trig::Cos);
            }
            return e.with_term(Rational(k % 2 == 1 ? 1 : -1, factorial(static_cast<unsigned>(2 * k + 1))),
                               2 * k - 2, Trig::Cos);
    }
    return e;
}

TruncatedSeries closed_to_series(const ClosedFormExpression& expr, int order) {
    int shift = 0;
    for (const ClosedTerm& t : expr.terms()) {
        shift = std::max(shift, -t.power);
    }
    // Expand y^shift * expr at a working order raised by the shift, so the
    // final shift-division loses nothing.
    const int working = order + shift;
    TruncatedSeries acc(working);
    for (const ClosedTerm& t : expr.terms()) {
        const int p = t.power + shift;
        if (p > working) {
            continue;  // entirely above truncation
        }
        TruncatedSeries base(working - p);
        switch (t.trig) {
            case Trig::None: base = TruncatedSeries::constant(Rational(1), working - p); break;
            case Trig::Sin: base = sin_series(working - p); break;
            case Trig::Cos: base = cos_series(working - p); break;
        }
        acc = acc + shift_mul(t.coef * base, p);
    }
    for (int i = 0; i < shift; ++i) {
        if (!acc[i].is_zero()) {
            throw NegativePowerResidueError(
                "expansion leaves " + acc[i].str() + " * y^" + std::to_string(i - shift) +
                "; the singularity at y = 0 is not removable");
        }
    }
    return shift_div(acc, shift);
}

std::optional<CoefficientMismatch> first_mismatch(const TruncatedSeries& direct,
                                                  const TruncatedSeries& closed) {
    if (direct.order() != closed.order()) {
        throw OrderMismatchError("compared series must share one order");
    }
    for (int i = 0; i <= direct.order(); ++i) {
        if (!(direct[i] == closed[i])) {
            return CoefficientMismatch{i, direct[i], closed[i]};
        }
    }
    return std::nullopt;
}

VerificationReport verify_theorem(int k_max, int order) {
    require_nonnegative_k(k_max);
    VerificationReport report;
    report.k_max = k_max;
    report.order = order;
    report.all_match = true;
    for (Family family : {Family::S, Family::A, Family::B}) {
        for (int k = 0; k <= k_max; ++k) {
            GoddardSpec spec{family, k};
            TruncatedSeries direct = direct_series(spec, order);
            TruncatedSeries closed = closed_to_series(closed_form(spec), order);
            auto mismatch = first_mismatch(direct, closed);
            report.per_k.push_back(FamilyCheck{family, k, !mismatch.has_value(), mismatch});
            report.all_match = report.all_match && !mismatch.has_value();
        }
    }
    return report;
}

namespace {

BivariateTruncatedSeries bivariate_direct(int x_order, int y_order) {
    std::vector<TruncatedSeries> rows;
    rows.reserve(static_cast<std::size_t>(x_order) + 1);
    for (int k = 0; k <= x_order; ++k) {
        rows.push_back(direct_series(GoddardSpec{Family::S, k}, y_order));
    }
    return BivariateTruncatedSeries(std::move(rows));
}

// The x^0 and x^1 rows of the polynomial xy + y.
TruncatedSeries linear_row(int k, int y_order) {
    TruncatedSeries row(y_order);
    if (k <= 1 && y_order >= 1) {
        std::vector<Rational> c(static_cast<std::size_t>(y_order) + 1);
        c[1] = Rational(1);
        row = TruncatedSeries(y_order, std::move(c));
    }
    return row;
}

// Row k of sin((1+x)y) is sum_j (-1)^j C(2j+1, k) y^{2j+1} / (2j+1)!.
BivariateTruncatedSeries bivariate_closed(int x_order, int y_order) {
    std::vector<TruncatedSeries> rows;
    rows.reserve(static_cast<std::size_t>(x_order) + 1);
    for (int k = 0; k <= x_order; ++k) {
        std::vector<Rational> c(static_cast<std::size_t>(y_order) + 1);
        for (int j = 0; 2 * j + 1 <= y_order; ++j) {
            BigInt b = binomial(static_cast<unsigned>(2 * j + 1), static_cast<unsigned>(k));
            if (b.is_zero()) {
                continue;
            }
            if (j % 2 == 0) {
                b = -b;  // row = poly - sin((1+x)y) row
            }
            c[static_cast<std::size_t>(2 * j + 1)] =
                Rational(std::move(b), factorial(static_cast<unsigned>(2 * j + 1)));
        }
        rows.push_back(linear_row(k, y_order) + TruncatedSeries(y_order, std::move(c)));
    }
    return BivariateTruncatedSeries(std::move(rows));
}

// Row k of sin(xy) is (-1)^{(k-1)/2} y^k / k! for odd k; of cos(xy),
// (-1)^{k/2} y^k / k! for even k.
BivariateTruncatedSeries bivariate_angle(int x_order, int y_order) {
    std::vector<TruncatedSeries> rows;
    rows.reserve(static_cast<std::size_t>(x_order) + 1);
    for (int k = 0; k <= x_order; ++k) {
        TruncatedSeries row = linear_row(k, y_order);
        if (k <= y_order) {
            const bool even = k % 2 == 0;
            const int half = even ? k / 2 : (k - 1) / 2;
            Rational monomial(half % 2 == 0 ? BigInt(-1) : BigInt(1),
                              factorial(static_cast<unsigned>(k)));
            TruncatedSeries trig = even ? sin_series(y_order - k) : cos_series(y_order - k);
            row = row + shift_mul(monomial * trig, k);
        }
        rows.push_back(row);
    }
    return BivariateTruncatedSeries(std::move(rows));
}

}  // namespace

BivariateTruncatedSeries bivariate_series(BivariateMethod method, int x_order, int y_order) {
    switch (method) {
        case BivariateMethod::Direct: return bivariate_direct(x_order, y_order);
        case BivariateMethod::Closed: return bivariate_closed(x_order, y_order);
        case BivariateMethod::Angle: return bivariate_angle(x_order, y_order);
    }
    throw UsageError("unknown bivariate construction method");
}

}  // namespace goddard
