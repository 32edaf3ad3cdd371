#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "goddard/numeric_eval.hpp"

using goddard::Family;
using goddard::GoddardSpec;

TEST_CASE("partial sums at fixed points") {
    CHECK(goddard::eval_partial({Family::S, 0}, 0.0, 10) == 0.0);

    // S_1(pi) = pi - pi cos(pi) = 2 pi.
    const double pi = std::numbers::pi;
    CHECK(std::fabs(goddard::eval_partial({Family::S, 1}, pi, 30) - 2 * pi) <= 1e-8);

    // Only the n=1 term C(3,1)/3! survives at y^0.
    CHECK(goddard::eval_partial({Family::B, 0}, 0.0, 5) == 0.5);

    CHECK_THROWS_AS(goddard::eval_partial({Family::S, 0}, 1.0, 0), goddard::UsageError);
}

TEST_CASE("closed-form values at fixed points") {
    const double pi = std::numbers::pi;
    CHECK(std::fabs(goddard::eval_closed({Family::S, 0}, pi / 2) - (pi / 2 - 1.0)) <= 1e-9);
    CHECK(std::fabs(goddard::eval_closed({Family::A, 0}, 0.0)) <= 1e-12);
    CHECK(std::fabs(goddard::eval_closed({Family::B, 0}, 0.0) - 0.5) <= 1e-12);
}

TEST_CASE("removable singularity is continuous through the threshold") {
    CHECK(std::fabs(goddard::eval_closed({Family::B, 0}, 1e-6) - 0.5) < 1e-6);

    // The fallback expansion and the direct quotient agree near |y| = 0.01.
    for (double y : {0.009, 0.011, -0.009, -0.011}) {
        const double direct = (1.0 - std::cos(y)) / (y * y);
        CHECK(std::fabs(goddard::eval_closed({Family::B, 0}, y) - direct) <= 1e-9);
    }
}

TEST_CASE("tail bound equals the first omitted term") {
    auto tb = goddard::tail_bound({Family::S, 0}, 1.0, 3);
    CHECK(tb.valid);
    CHECK(std::fabs(tb.bound - 1.0 / 362880.0) <= 1e-20);  // C(9,0)/9!

    auto zero = goddard::tail_bound({Family::S, 0}, 0.0, 3);
    CHECK(zero.valid);
    CHECK(zero.bound == 0.0);

    // At y = 50 the term magnitudes are still growing past n = 4.
    auto growing = goddard::tail_bound({Family::S, 0}, 50.0, 3);
    CHECK(!growing.valid);
}

TEST_CASE("partial sums sit within the tail bound of the closed value") {
    // The Leibniz bound governs the truncation error of the exact partial
    // sum.  Both evaluation routes round independently to doubles, so the
    // measured |partial - closed| additionally carries ~1 ulp of noise from
    // each side; kNoise absorbs that without masking a wrong sum.  (At 30
    // terms the mathematical bound is ~1e-44..1e-107, far below double
    // resolution, so the short-sum runs below are where the bound itself is
    // the binding constraint.)
    constexpr double kNoise = 1e-13;
    for (Family family : {Family::S, Family::A, Family::B}) {
        for (int k = 0; k <= 8; ++k) {
            for (double y : {0.5, -0.5, 1.0, -1.0, 2.0, -2.0, 5.0, -5.0}) {
                GoddardSpec spec{family, k};
                const double closed = goddard::eval_closed(spec, y);
                const double slack = kNoise * (1.0 + std::fabs(closed));
                // Short sums start at k+2 so the five-pair monotonicity
                // window sits past the leading run of zero terms (the first
                // nonzero term index grows with k); inside that run the
                // window would certify a zero bound it cannot actually see
                // beyond.
                for (int n_terms : {k + 2, k + 3, k + 4, k + 5, 30}) {
                    const double partial = goddard::eval_partial(spec, y, n_terms);
                    const double err = std::fabs(partial - closed);
                    auto tb = goddard::tail_bound(spec, y, n_terms);
                    CAPTURE(static_cast<int>(family));
                    CAPTURE(k);
                    CAPTURE(y);
                    CAPTURE(n_terms);
                    if (tb.valid) {
                        CHECK(err <= tb.bound + slack);
                    }
                }
                const double err30 =
                    std::fabs(goddard::eval_partial(spec, y, 30) - closed);
                CHECK(err30 <= 1e-10 * (1.0 + std::fabs(closed)));
            }
        }
    }
}

TEST_CASE("odd/even symmetry of the closed forms") {
    for (double y : {0.3, 1.7}) {
        for (int k = 0; k <= 8; ++k) {
            const double s_pos = goddard::eval_closed({Family::S, k}, y);
            const double s_neg = goddard::eval_closed({Family::S, k}, -y);
            CHECK(std::fabs(s_neg + s_pos) <= 1e-12 * std::fabs(s_pos));

            const double b_pos = goddard::eval_closed({Family::B, k}, y);
            const double b_neg = goddard::eval_closed({Family::B, k}, -y);
            CHECK(std::fabs(b_neg - b_pos) <= 1e-12 * std::fabs(b_pos));
        }
    }
}

TEST_CASE("a long enough partial sum reproduces the closed value") {
    for (Family family : {Family::S, Family::A, Family::B}) {
        for (int k = 0; k <= 4; ++k) {
            for (double y : {-2.0, -0.7, 0.4, 2.0}) {
                GoddardSpec spec{family, k};
                auto tb = goddard::tail_bound(spec, y, 40);
                REQUIRE(tb.valid);
                REQUIRE(tb.bound < 1e-15);
                CHECK(std::fabs(goddard::eval_partial(spec, y, 40) -
                                goddard::eval_closed(spec, y)) <= 1e-12);
            }
        }
    }
}

TEST_CASE("sample grids") {
    auto degenerate = goddard::sample_grid({Family::S, 0}, 2.0, 2.0, 1, 10);
    REQUIRE(degenerate.size() == 2);
    CHECK(degenerate[0].y == 2.0);
    CHECK(degenerate[1].y == 2.0);
    CHECK(degenerate[0].partial_sum == degenerate[1].partial_sum);

    auto rows = goddard::sample_grid({Family::S, 2}, -1.0, 1.0, 2, 25);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].y == -1.0);
    CHECK(rows[1].y == 0.0);
    CHECK(rows[2].y == 1.0);
    for (const auto& row : rows) {
        CHECK(row.terms_used == 25);
        CHECK(row.abs_error == std::fabs(row.partial_sum - row.closed_value));
        if (row.bound_valid) {
            CHECK(row.abs_error <= row.tail_bound);
        }
    }

    CHECK_THROWS_AS(goddard::sample_grid({Family::S, 0}, 0.0, 1.0, 0, 10),
                    goddard::UsageError);
    CHECK_THROWS_AS(goddard::sample_grid({Family::S, 0}, 1.0, 0.0, 3, 10),
                    goddard::UsageError);
}
