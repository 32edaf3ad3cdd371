#ifndef GODDARD_SERIES_HPP
#define GODDARD_SERIES_HPP

#include <iosfwd>
#include <vector>

#include "goddard/rational.hpp"

namespace goddard {

// Formal power series in y truncated at a fixed order: degrees 0..order
// inclusive are stored, everything above lives in the discarded ideal
// (arithmetic happens in the quotient ring mod y^{order+1}). Binary
// operations require equal orders; mixing orders is an error, never a
// silent truncation.
class TruncatedSeries {
public:
    explicit TruncatedSeries(int order);
    TruncatedSeries(int order, std::vector<Rational> coeffs);

    static TruncatedSeries constant(Rational value, int order);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Rational& operator[](int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    bool is_zero() const;

    bool operator==(const TruncatedSeries&) const = default;

private:
    std::vector<Rational> coeffs_;  // index i holds the coefficient of y^i
};

TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator-(const TruncatedSeries& s);
TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries operator*(const Rational& c, const TruncatedSeries& s);

// outer(inner(y)), truncated to the common order. inner must have zero
// constant term.
TruncatedSeries compose(const TruncatedSeries& outer, const TruncatedSeries& inner);

// Exact division by y^m: the m lowest coefficients must vanish; the result
// has order s.order() - m.
TruncatedSeries shift_div(const TruncatedSeries& s, int m);

// Multiplication by y^m without loss: the result has order s.order() + m.
TruncatedSeries shift_mul(const TruncatedSeries& s, int m);

TruncatedSeries sin_series(int order);
TruncatedSeries cos_series(int order);

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s);

// Horner evaluation of the truncated polynomial in double precision.
double eval_double(const TruncatedSeries& s, double y);

// Series in x whose x^k coefficient is a TruncatedSeries in y; every row has
// the same y-order.
class BivariateTruncatedSeries {
public:
    BivariateTruncatedSeries(int x_order, int y_order);
    explicit BivariateTruncatedSeries(std::vector<TruncatedSeries> rows);

    int x_order() const { return static_cast<int>(rows_.size()) - 1; }
    int y_order() const { return rows_.front().order(); }
    const TruncatedSeries& row(int k) const { return rows_.at(static_cast<std::size_t>(k)); }

    bool operator==(const BivariateTruncatedSeries&) const = default;

private:
    std::vector<TruncatedSeries> rows_;
};

}  // namespace goddard

#endif
