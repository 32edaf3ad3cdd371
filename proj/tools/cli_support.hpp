#ifndef GODDARD_TOOLS_CLI_SUPPORT_HPP
#define GODDARD_TOOLS_CLI_SUPPORT_HPP

#include <string>
#include <vector>

#include "goddard/goddard_series.hpp"
#include "goddard/numeric_eval.hpp"

// Everything the goddard binary prints lives here, separated from flag
// parsing so the serializers and the exit-code mapping stay unit-testable.
namespace goddard::cli {

// %.17g: enough digits to round-trip any double, so fixed inputs give
// byte-identical output on one platform.
std::string format_double(double v);

char family_letter(Family family);
Family parse_family(const std::string& name);  // accepts exactly "S", "A", "B"

// verify payload: {"k_max":..,"order":..,"all_match":..,"per_k":[..]} with
// per_k entries ordered by family S, A, B, then k ascending.
std::string verify_json(const VerificationReport& report);

// 0 when every coefficient and the bivariate cross-check agree, 1 otherwise.
int verify_exit_code(const VerificationReport& report, bool bivariate_match);

// Direct and closed coefficient lists for one family member, both rendered
// canonically, plus whether they agree.
struct CoefficientTable {
    GoddardSpec spec;
    int order = 0;
    std::vector<std::string> direct;
    std::vector<std::string> closed;
    bool match = false;
};

CoefficientTable coefficient_table(GoddardSpec spec, int order);
std::string coeffs_json(const CoefficientTable& table);
std::string coeffs_csv(const CoefficientTable& table);

// One evaluation point, assembled from the partial sum, the closed form and
// the remainder bound.
NumericSample eval_sample(GoddardSpec spec, double y, int n_terms);
std::string sample_json(const NumericSample& sample);

// CSV table over a y-grid; header row plus one line per sample.
std::string table_csv(const std::vector<NumericSample>& rows);

// True when the direct, closed and angle-addition constructions of the
// bivariate generating function coincide exactly.
bool bivariate_triple_match(int x_order, int y_order);

}  // namespace goddard::cli

#endif
