#pragma once
// ============================================================================
// suites: the named verification checks behind `verify` and the acceptance
// gate. Each check owns its construction, its expected values, and its
// tolerance; suites group them:
//   counts     family separation, full-shift ladder, gauge count identity
//   scaling    exact tower rates, extrapolation, truncated-snowflake
//              transport, coarse interval advisory
//   hausdorff  snowflake dimension scaling, ball sandwich, mass certificates
//   products   product lower bounds, power maps
//   gauges     order estimation, membership, neighborhoods
// ============================================================================

#include <cstdint>
#include <string>
#include <vector>

namespace mdim {

struct check_result {
    std::int32_t criterion = 0;  // stable 1..13 id used by the acceptance gate
    std::string name;
    bool pass = false;
    bool advisory = false;  // advisory checks report WARN and never gate
    double measured = 0;
    double target = 0;
    double tol = 0;
    std::string note;
};

check_result check_family_separation();     // 1
check_result check_psi_exact_rates();       // 2
check_result check_phi_extrapolation();     // 3
check_result check_full_shift_ladder();     // 4
check_result check_gauge_count_identity();  // 5
check_result check_snowflake_dimension();   // 6
check_result check_ball_sandwich();         // 7
check_result check_cylinder_mass();         // 8
check_result check_product_lower_bound();   // 9
check_result check_power_map();             // 10
check_result check_trunc_transport();       // 11
check_result check_gauge_orders();          // 12
check_result check_interval_advisory();     // 13

const std::vector<std::string>& suite_names();  // counts..gauges, all

// runs one suite (or "all"); unknown names are validation errors
std::vector<check_result> run_suite(const std::string& suite);

// "[PASS|FAIL|WARN] name: measured=... target=... (note)"
std::string format_check_line(const check_result& c);

}  // namespace mdim
