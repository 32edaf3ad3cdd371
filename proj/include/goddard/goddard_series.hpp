#ifndef GODDARD_GODDARD_SERIES_HPP
#define GODDARD_GODDARD_SERIES_HPP

#include <optional>
#include <vector>

#include "goddard/series.hpp"

namespace goddard {

// The three Goddard families. Each member is an alternating binomial series
// over odd factorials:
//   S_k: sum_{n>=1} (-1)^{n+1} C(2n+1, k)    y^{2n+1} / (2n+1)!
//   A_k: sum_{n>=1} (-1)^{n+1} C(2n+1, 2k)   y^{2n-1} / (2n+1)!
//   B_k: sum_{n>=1} (-1)^{n+1} C(2n+1, 2k+1) y^{2n-2} / (2n+1)!
// with A_k = y^-2 S_{2k} and B_k = y^-3 S_{2k+1} as formal identities.
enum class Family { S, A, B };

struct GoddardSpec {
    Family family = Family::S;
    int k = 0;  // k >= 0 for every family

    bool operator==(const GoddardSpec&) const = default;
};

enum class Trig { None, Sin, Cos };

// One summand c * y^power * trig(y). Negative powers are allowed so the A/B
// closed forms can be written down as stated for y != 0; expansion must see
// them cancel.
struct ClosedTerm {
    Rational coef;
    int power = 0;
    Trig trig = Trig::None;

    bool operator==(const ClosedTerm&) const = default;
};

// Normalized sum of ClosedTerms: at most one term per (power, trig), zero
// coefficients dropped, terms kept sorted so equal expressions compare equal.
class ClosedFormExpression {
public:
    ClosedFormExpression() = default;

    ClosedFormExpression with_term(Rational coef, int power, Trig trig) const;
    ClosedFormExpression scaled(const Rational& factor) const;

    const std::vector<ClosedTerm>& terms() const { return terms_; }

    bool operator==(const ClosedFormExpression&) const = default;

private:
    std::vector<ClosedTerm> terms_;
};

// Exact partial sum of the defining series: every term with y-power <= order.
TruncatedSeries direct_series(GoddardSpec spec, int order);

// Closed form of the family member:
//   S_0 = y - sin y,  S_1 = y - y cos y,
//   S_k = y^k/k! * (-1)^{(k+2)/2} sin y   (k >= 2 even)
//       = y^k/k! * (-1)^{(k+1)/2} cos y   (k >= 2 odd)
// A and B follow by shifting the S powers down by 2 and 3.
ClosedFormExpression closed_form(GoddardSpec spec);

// Exact expansion to the requested order. Terms with negative powers are
// expanded at a raised working order and shift-divided back; a nonvanishing
// low coefficient is a NegativePowerResidueError.
TruncatedSeries closed_to_series(const ClosedFormExpression& expr, int order);

struct CoefficientMismatch {
    int power = 0;
    Rational direct;
    Rational closed;

    bool operator==(const CoefficientMismatch&) const = default;
};

// Lowest power where two equal-order series differ, if any.
std::optional<CoefficientMismatch> first_mismatch(const TruncatedSeries& direct,
                                                  const TruncatedSeries& closed);

struct FamilyCheck {
    Family family = Family::S;
    int k = 0;
    bool match = false;
    std::optional<CoefficientMismatch> mismatch;
};

struct VerificationReport {
    int k_max = 0;
    int order = 0;
    std::vector<FamilyCheck> per_k;  // ordered by family (S, A, B), then k
    bool all_match = false;
};

// Coefficient-by-coefficient comparison of direct_series against the
// expansion of closed_form, for every family and every k <= k_max.
VerificationReport verify_theorem(int k_max, int order);

// The three routes to the generating function S(x,y) = sum_k S_k(y) x^k:
//   Direct — rows are the defining partial sums;
//   Closed — expand xy + y - sin((1+x)y) with (1+x)^{2j+1} opened binomially;
//   Angle  — expand xy + y - sin(xy)cos(y) - cos(xy)sin(y) per power of x.
enum class BivariateMethod { Direct, Closed, Angle };

BivariateTruncatedSeries bivariate_series(BivariateMethod method, int x_order, int y_order);

}  // namespace goddard

#endif
