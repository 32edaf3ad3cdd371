#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "goddard/series.hpp"

using goddard::BigInt;
using goddard::Rational;
using goddard::TruncatedSeries;

namespace {

TruncatedSeries make(std::vector<Rational> coeffs) {
    int order = static_cast<int>(coeffs.size()) - 1;
    return TruncatedSeries(order, std::move(coeffs));
}

BigInt factorial_by_products(unsigned n) {
    BigInt acc = 1;
    for (unsigned i = 1; i <= n; ++i) {
        acc = acc * i;
    }
    return acc;
}

// Independent convolution oracle: full product up to degree 2N, then truncate.
TruncatedSeries convolve_oracle(const TruncatedSeries& a, const TruncatedSeries& b) {
    const int n = a.order();
    std::vector<Rational> full(static_cast<std::size_t>(2 * n) + 1);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            full[static_cast<std::size_t>(i + j)] =
                full[static_cast<std::size_t>(i + j)] + a[i] * b[j];
        }
    }
    full.resize(static_cast<std::size_t>(n) + 1);
    return TruncatedSeries(n, std::move(full));
}

TruncatedSeries random_series(std::mt19937& rng, int order) {
    std::uniform_int_distribution<int> num(-100, 100);
    std::uniform_int_distribution<int> den(1, 100);
    std::vector<Rational> c(static_cast<std::size_t>(order) + 1);
    for (auto& x : c) {
        x = Rational(num(rng), den(rng));
    }
    return TruncatedSeries(order, std::move(c));
}

}  // namespace

TEST_CASE("addition is coefficient-wise and order-checked") {
    TruncatedSeries a = make({Rational(1), Rational(1)});
    TruncatedSeries b = make({Rational(1), Rational(-1)});
    CHECK(a + b == make({Rational(2), Rational()}));

    TruncatedSeries s = make({Rational(3, 7), Rational(-2, 5), Rational(1)});
    CHECK(s + TruncatedSeries(2) == s);

    CHECK_THROWS_AS(a + s, goddard::OrderMismatchError);
}

TEST_CASE("sin + cos at order 5") {
    TruncatedSeries expected = make({Rational(1), Rational(1), Rational(-1, 2),
                                     Rational(-1, 6), Rational(1, 24), Rational(1, 120)});
    CHECK(goddard::sin_series(5) + goddard::cos_series(5) == expected);
}

TEST_CASE("multiplication truncates to the common order") {
    TruncatedSeries one_plus = make({Rational(1), Rational(1), Rational()});
    TruncatedSeries one_minus = make({Rational(1), Rational(-1), Rational()});
    CHECK(one_plus * one_minus == make({Rational(1), Rational(), Rational(-1)}));

    TruncatedSeries y = make({Rational(), Rational(1)});
    CHECK((y * y).is_zero());  // y^2 falls outside order 1

    CHECK_THROWS_AS(y * one_plus, goddard::OrderMismatchError);
}

TEST_CASE("sin^2 + cos^2 = 1, checked against the convolution oracle") {
    for (int order : {8, 40}) {
        TruncatedSeries sin = goddard::sin_series(order);
        TruncatedSeries cos = goddard::cos_series(order);
        TruncatedSeries lhs = sin * sin + cos * cos;
        CHECK(lhs == TruncatedSeries::constant(Rational(1), order));
        CHECK(lhs == convolve_oracle(sin, sin) + convolve_oracle(cos, cos));
    }
}

TEST_CASE("ring axioms hold exactly on random series") {
    std::mt19937 rng(415926535);
    std::uniform_int_distribution<int> order_dist(0, 12);
    for (int i = 0; i < 100; ++i) {
        const int order = order_dist(rng);
        TruncatedSeries a = random_series(rng, order);
        TruncatedSeries b = random_series(rng, order);
        TruncatedSeries c = random_series(rng, order);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("composition substitutes the inner series") {
    TruncatedSeries sin7 = goddard::sin_series(7);

    std::vector<Rational> id(8);
    id[1] = Rational(1);
    CHECK(goddard::compose(sin7, TruncatedSeries(7, id)) == sin7);

    std::vector<Rational> neg(8);
    neg[1] = Rational(-1);
    CHECK(goddard::compose(sin7, TruncatedSeries(7, neg)) == -sin7);

    // Direct-substitution oracle: sin(c y) has coefficients c^i * sin[i].
    for (int c = 1; c <= 3; ++c) {
        const int order = 9;
        std::vector<Rational> inner(static_cast<std::size_t>(order) + 1);
        inner[1] = Rational(c);
        std::vector<Rational> expected(static_cast<std::size_t>(order) + 1);
        BigInt power = 1;
        for (int i = 0; i <= order; ++i) {
            expected[static_cast<std::size_t>(i)] =
                Rational(power) * goddard::sin_series(order)[i];
            power *= c;
        }
        CHECK(goddard::compose(goddard::sin_series(order), TruncatedSeries(order, inner)) ==
              TruncatedSeries(order, expected));
    }
}

TEST_CASE("compose(sin, 2y) at order 5") {
    std::vector<Rational> inner(6);
    inner[1] = Rational(2);
    TruncatedSeries expected = make({Rational(), Rational(2), Rational(),
                                     Rational(-4, 3), Rational(), Rational(4, 15)});
    CHECK(goddard::compose(goddard::sin_series(5), TruncatedSeries(5, inner)) == expected);
}

TEST_CASE("composition rejects a nonzero inner constant term") {
    TruncatedSeries sin3 = goddard::sin_series(3);
    std::vector<Rational> inner(4);
    inner[0] = Rational(1, 7);
    CHECK_THROWS_AS(goddard::compose(sin3, TruncatedSeries(3, inner)),
                    goddard::NonzeroConstantTermError);
    CHECK_THROWS_AS(goddard::compose(sin3, goddard::sin_series(5)),
                    goddard::OrderMismatchError);
}

TEST_CASE("shift-division moves indices down") {
    // y^3/6 - y^5/120 at order 5, divided by y^2.
    TruncatedSeries s = make({Rational(), Rational(), Rational(), Rational(1, 6),
                              Rational(), Rational(-1, 120)});
    TruncatedSeries expected = make({Rational(), Rational(1, 6), Rational(), Rational(-1, 120)});
    CHECK(goddard::shift_div(s, 2) == expected);
    CHECK(goddard::shift_div(s, 0) == s);

    TruncatedSeries blocked = make({Rational(1), Rational(1)});
    CHECK_THROWS_AS(goddard::shift_div(blocked, 1), goddard::NonzeroLowOrderError);
}

TEST_CASE("shift round-trip: divide undoes padded multiplication") {
    std::mt19937 rng(271828);
    std::uniform_int_distribution<int> order_dist(0, 10);
    std::uniform_int_distribution<int> m_dist(0, 3);
    for (int i = 0; i < 50; ++i) {
        TruncatedSeries s = random_series(rng, order_dist(rng));
        const int m = m_dist(rng);
        CHECK(goddard::shift_div(goddard::shift_mul(s, m), m) == s);
    }
}

TEST_CASE("elementary sin and cos coefficients match the Taylor oracle") {
    TruncatedSeries sin5 = goddard::sin_series(5);
    CHECK(sin5 == make({Rational(), Rational(1), Rational(), Rational(-1, 6),
                        Rational(), Rational(1, 120)}));
    TruncatedSeries cos4 = goddard::cos_series(4);
    CHECK(cos4 == make({Rational(1), Rational(), Rational(-1, 2), Rational(), Rational(1, 24)}));
    CHECK(goddard::sin_series(0) == TruncatedSeries(0));

    const int order = 19;
    TruncatedSeries sin = goddard::sin_series(order);
    TruncatedSeries cos = goddard::cos_series(order);
    for (int j = 0; 2 * j <= order; ++j) {
        BigInt sign = j % 2 == 0 ? 1 : -1;
        if (2 * j + 1 <= order) {
            CHECK(sin[2 * j + 1] == Rational(sign, factorial_by_products(2 * j + 1)));
            CHECK(sin[2 * j].is_zero());
        }
        CHECK(cos[2 * j] == Rational(sign, factorial_by_products(2 * j)));
        if (2 * j + 1 <= order) {
            CHECK(cos[2 * j + 1].is_zero());
        }
    }
}

TEST_CASE("double evaluation against the platform sine") {
    CHECK(goddard::eval_double(goddard::sin_series(15), 0.0) == 0.0);
    CHECK(std::fabs(goddard::eval_double(goddard::sin_series(15), 1.0) - 0.8414709848) <= 1e-9);
    CHECK(std::fabs(goddard::eval_double(goddard::sin_series(15), 1.0) - std::sin(1.0)) <= 1e-12);
    CHECK(goddard::eval_double(TruncatedSeries::constant(Rational(1), 6), 3.7) == 1.0);

    const double inf = std::numeric_limits<double>::infinity();
    CHECK(!std::isfinite(goddard::eval_double(goddard::sin_series(3), inf)));
}

TEST_CASE("bivariate container validates row shape") {
    goddard::BivariateTruncatedSeries z(2, 5);
    CHECK(z.x_order() == 2);
    CHECK(z.y_order() == 5);
    CHECK(z.row(1) == TruncatedSeries(5));

    std::vector<TruncatedSeries> ragged{TruncatedSeries(3), TruncatedSeries(4)};
    CHECK_THROWS_AS(goddard::BivariateTruncatedSeries(std::move(ragged)),
                    goddard::OrderMismatchError);
}
