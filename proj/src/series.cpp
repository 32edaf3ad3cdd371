#include "goddard/series.hpp"

#include <algorithm>
#include <ostream>
#include <string>
#include <utility>

namespace goddard {

namespace {

void require_nonnegative_order(int order) {
    if (order < 0) {
        throw UsageError("series order must be nonnegative, got " + std::to_string(order));
    }
}

void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order()) {
        throw OrderMismatchError("series orders differ: " + std::to_string(a.order()) +
                                 " vs " + std::to_string(b.order()));
    }
}

}  // namespace

TruncatedSeries::TruncatedSeries(int order) {
    require_nonnegative_order(order);
    coeffs_.resize(static_cast<std::size_t>(order) + 1);
}

TruncatedSeries::TruncatedSeries(int order, std::vector<Rational> coeffs)
    : coeffs_(std::move(coeffs)) {
    require_nonnegative_order(order);
    if (coeffs_.size() != static_cast<std::size_t>(order) + 1) {
        throw OrderMismatchError("coefficient list length does not match order + 1");
    }
}

TruncatedSeries TruncatedSeries::constant(Rational value, int order) {
    TruncatedSeries s(order);
    s.coeffs_[0] = std::move(value);
    return s;
}

bool TruncatedSeries::is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(),
                       [](const Rational& c) { return c.is_zero(); });
}

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<Rational> c(a.coefficients().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = a.coefficients()[i] + b.coefficients()[i];
    }
    return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a + (-b);
}

TruncatedSeries operator-(const TruncatedSeries& s) {
    std::vector<Rational> c(s.coefficients().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[i] = -s.coefficients()[i];
    }
    return TruncatedSeries(s.order(), std::move(c));
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    // Cauchy product in the quotient ring: degrees above the common order drop.
    std::vector<Rational> c(a.coefficients().size());
    for (std::size_t i = 0; i < c.size(); ++i) {
        for (std::size_t j = 0; j <= i; ++j) {
            if (a.coefficients()[j].is_zero() || b.coefficients()[i - j].is_zero()) {
                continue;
            }
            c[i] = c[i] + a.coefficients()[j] * b.coefficients()[i - j];
        }
    }
    return TruncatedSeries(a.order(), std::move(c));
}

TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s) {
    std::vector<Rational> out(s.coefficients().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = c * s.coefficients()[i];
    }
    return TruncatedSeries(s.order(), std::move(out));
}

TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner) {
    require_same_order(outer, inner);
    if (!inner.coefficients()[0].is_zero()) {
        throw NonzeroConstantTermError(
            "composition requires a zero constant term in the inner series");
    }
    // Horner over the outer coefficients, highest degree first.
    const int n = outer.order();
    TruncatedSeries acc = TruncatedSeries::constant(outer[n], n);
    for (int i = n - 1; i >= 0; --i) {
        acc = acc * inner + TruncatedSeries::constant(outer[i], n);
    }
    return acc;
}

TruncatedSeries shift_div(const TruncatedSeries& s, int m) {
    if (m < 0 || m > s.order()) {
        throw OrderMismatchError("shift amount " + std::to_string(m) +
                                 " out of range for order " + std::to_string(s.order()));
    }
    for (int i = 0; i < m; ++i) {
        if (!s[i].is_zero()) {
            throw NonzeroLowOrderError("coefficient of y^" + std::to_string(i) +
                                       " is " + s[i].str() +
                                       "; division by y^" + std::to_string(m) +
                                       " is not exact");
        }
    }
    std::vector<Rational> c(s.coefficients().begin() + m, s.coefficients().end());
    return TruncatedSeries(s.order() - m, std::move(c));
}

TruncatedSeries shift_mul(const TruncatedSeries& s, int m) {
    if (m < 0) {
        throw UsageError("shift amount must be nonnegative");
    }
    std::vector<Rational> c(s.coefficients().size() + static_cast<std::size_t>(m));
    std::copy(s.coefficients().begin(), s.coefficients().end(), c.begin() + m);
    return TruncatedSeries(s.order() + m, std::move(c));
}

TruncatedSeries sin_series(int order) {
    require_nonnegative_order(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int j = 0; 2 * j + 1 <= order; ++j) {
        BigInt sign = (j % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(2 * j + 1)] =
            Rational(sign, factorial(static_cast<unsigned>(2 * j + 1)));
    }
    return TruncatedSeries(order, std::move(c));
}

TruncatedSeries cos_series(int order) {
    require_nonnegative_order(order);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (int j = 0; 2 * j <= order; ++j) {
        BigInt sign = (j % 2 == 0) ? 1 : -1;
        c[static_cast<std::size_t>(2 * j)] =
            Rational(sign, factorial(static_cast<unsigned>(2 * j)));
    }
    return TruncatedSeries(order, std::move(c));
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    os << "[";
    for (int i = 0; i <= s.order(); ++i) {
        os << (i == 0 ? "" : ", ") << s[i];
    }
    return os << "]";
}

double eval_double(const TruncatedSeries& s, double y) {
    double acc = 0.0;
    for (int i = s.order(); i >= 0; --i) {
        acc = acc * y + s[i].to_double();
    }
    return acc;
}

BivariateTruncatedSeries::BivariateTruncatedSeries(int x_order, int y_order) {
    require_nonnegative_order(x_order);
    rows_.assign(static_cast<std::size_t>(x_order) + 1, TruncatedSeries(y_order));
}

BivariateTruncatedSeries::BivariateTruncatedSeries(std::vector<TruncatedSeries> rows)
    : rows_(std::move(rows)) {
    if (rows_.empty()) {
        throw UsageError("a bivariate series needs at least the x^0 row");
    }
    for (const TruncatedSeries& r : rows_) {
        if (r.order() != rows_.front().order()) {
            throw OrderMismatchError("all rows of a bivariate series must share one y-order");
        }
    }
}

}  // namespace goddard
