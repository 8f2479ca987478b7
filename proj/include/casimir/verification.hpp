#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace casimir::verification {

struct CriterionResult {
    int id;
    std::string title;
    bool passed;
    std::string detail;
};

CriterionResult check_sphere_headline();
CriterionResult check_sphere_diameter_sum();
CriterionResult check_sphere_tail_robustness();
CriterionResult check_cylinder_headline();
CriterionResult check_cylinder_identities();
CriterionResult check_diffractive_term();
CriterionResult check_wkb_spectrum();
CriterionResult check_alpha_integral_curves();
CriterionResult check_surface_correction();
CriterionResult check_property_suites();

/// Every acceptance criterion in order.
std::vector<CriterionResult> run_acceptance_suite();

/// One "[PASS]/[FAIL] <id>. <title>: <detail>" line per criterion; returns
/// true iff all passed.
bool report(const std::vector<CriterionResult>& results, std::ostream& out);

}  // namespace casimir::verification
