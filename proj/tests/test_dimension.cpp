// ============================================================================
// dimension: scale-resolved covers, rate extrapolation, certificates
// ============================================================================

#include <cmath>
#include <vector>

#include "doctest.h"
#include "mdimlab/cantor.hpp"
#include "mdimlab/dimension.hpp"
#include "mdimlab/interval.hpp"

using namespace mdim;

namespace {

scale_cover uniform_cover(const std::string& label, double count, double diam) {
    scale_cover c;
    c.label = label;
    c.strata.push_back({std::log(count), std::log(diam)});
    return c;
}

}  // namespace

TEST_CASE("cover_sum_log evaluates count * diam^s stratum sums") {
    const auto c = uniform_cover("two-quarters", 2.0, 0.25);
    CHECK(cover_sum_log(c, 0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(cover_sum_log(c, 1.0) == doctest::Approx(std::log(0.5)).epsilon(1e-15));
    CHECK(cover_sum_log(c, 0.5) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("dim_h_at_scale bisects to the critical exponent") {
    // one candidate cover: 2 sets of diameter 1/4; sum = 2 (1/4)^s crosses
    // theta = 1 exactly at s = 1/2
    const std::vector<scale_cover> covers = {uniform_cover("c", 2.0, 0.25)};
    const auto r = dim_h_at_scale(covers, 0.5, 1.0, 1e-4);
    CHECK(r.s == doctest::Approx(0.5).epsilon(1e-3));
    CHECK(r.hi - r.lo <= 1e-4 + 1e-12);
    CHECK(r.lo <= r.s);
    CHECK(r.s <= r.hi);
    CHECK_FALSE(r.saturated);
}

TEST_CASE("dim_h_at_scale picks the cheapest cover and flags saturation") {
    // a second, cheaper cover lowers the critical exponent: the inf is over
    // candidate covers
    const std::vector<scale_cover> covers = {uniform_cover("a", 4.0, 0.25),
                                             uniform_cover("b", 2.0, 0.25)};
    const auto r = dim_h_at_scale(covers, 0.5, 1.0, 1e-4);
    CHECK(r.s == doctest::Approx(0.5).epsilon(1e-3));

    // a cover of many unit-adjacent sets keeps the sum above theta up to the
    // cap: saturated
    const std::vector<scale_cover> fat = {uniform_cover("fat", 1000.0, 0.45)};
    const auto rs = dim_h_at_scale(fat, 0.5, 1.0, 1e-3, 4.0);
    CHECK(rs.saturated);
    CHECK(rs.s == doctest::Approx(4.0));
}

TEST_CASE("dim_h_at_scale validates covers against the scale") {
    const std::vector<scale_cover> bad = {uniform_cover("too-big", 2.0, 0.5)};
    CHECK_THROWS_AS((void)dim_h_at_scale(bad, 0.5, 1.0), validation_error);
    CHECK_THROWS_AS((void)dim_h_at_scale({}, 0.5, 1.0), validation_error);
}

TEST_CASE("fit_affine recovers exact lines") {
    const std::vector<double> xs = {0.0, 1.0, 2.0, 3.0};
    const std::vector<double> ys = {1.0, 3.0, 5.0, 7.0};
    const auto f = fit_affine(xs, ys);
    CHECK(f.slope == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(f.intercept == doctest::Approx(1.0).epsilon(1e-14));
    CHECK_THROWS_AS((void)fit_affine({1.0}, {2.0}), validation_error);
    CHECK_THROWS_AS((void)fit_affine({1.0, 2.0}, {2.0}), validation_error);
}

TEST_CASE("box_dim_estimate fits log N against |log eps|") {
    // N(eps) = eps^-0.75 exactly
    std::vector<std::pair<double, double>> data;
    for (int q = 1; q <= 5; ++q) {
        const double eps = std::pow(2.0, -q);
        data.push_back({eps, 0.75 * std::fabs(std::log(eps))});
    }
    const auto f = box_dim_estimate(data);
    CHECK(f.slope == doctest::Approx(0.75).epsilon(1e-12));
}

TEST_CASE("box_cap_cantor is log 2 / log alpha plus the honesty pad") {
    CHECK(box_cap_cantor(3.0) ==
          doctest::Approx(std::log(2.0) / std::log(3.0) + 1e-6).epsilon(1e-9));
    CHECK(box_cap_cantor(9.0) ==
          doctest::Approx(std::log(2.0) / std::log(9.0) + 1e-6).epsilon(1e-9));
}

TEST_CASE("mass distribution certificates accept below s_max and reject above") {
    // one ball: mu = 1/8, diam = 1/4 -> s_max = log(1/8)/log(1/4) = 1.5
    const std::vector<mass_ball> balls = {{std::log(1.0 / 8.0), std::log(0.25)}};
    CHECK(mass_dist_s_max(balls) == doctest::Approx(1.5).epsilon(1e-14));
    CHECK(mass_dist_lower_bound(balls, 1.4).certified);
    CHECK_FALSE(mass_dist_lower_bound(balls, 1.6).certified);
    const auto r = mass_dist_lower_bound(balls, 1.5);
    CHECK(r.worst == doctest::Approx(0.0).epsilon(1e-12));

    // several balls: the tightest one rules
    const std::vector<mass_ball> mixed = {{std::log(0.5), std::log(0.5)},
                                          {std::log(0.125), std::log(0.25)}};
    CHECK(mass_dist_s_max(mixed) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("mdim_m_estimate reproduces hand-computed rates and intercepts") {
    // fabricate counts N(eps, n) = exp(v * |log eps| * n) so every rung has
    // per-rung value exactly v
    const double v = 0.4;
    count_table tab;
    const std::vector<double> ladder = {1e-2, 1e-3};
    for (const double eps : ladder) {
        for (std::int32_t n = 2; n <= 4; ++n) {
            count_row row;
            row.eps = eps;
            row.n = n;
            row.log_sep_lower = v * std::fabs(std::log(eps)) * n;
            row.method = "formula";
            tab.rows.push_back(row);
        }
    }
    const auto est = mdim_m_estimate(tab, 2, 4);
    REQUIRE(est.per_eps.size() == 2);
    CHECK(est.per_eps[0].value == doctest::Approx(v).epsilon(1e-12));
    CHECK(est.per_eps[1].value == doctest::Approx(v).epsilon(1e-12));
    // constant series extrapolates to itself with a tight bracket
    CHECK(est.extrapolated == doctest::Approx(v).epsilon(1e-9));
    CHECK(est.lo == doctest::Approx(v).epsilon(1e-9));
    CHECK(est.hi == doctest::Approx(v).epsilon(1e-9));
    CHECK(est.kind == "mdim_m");

    // two-rung linear-in-x series: intercept from the affine fit by hand
    count_table tab2;
    const double vals[2] = {0.30, 0.36};
    for (int i = 0; i < 2; ++i) {
        for (std::int32_t n = 1; n <= 2; ++n) {
            count_row row;
            row.eps = ladder[i];
            row.n = n;
            row.log_sep_lower = vals[i] * std::fabs(std::log(ladder[i])) * n;
            row.method = "formula";
            tab2.rows.push_back(row);
        }
    }
    const auto est2 = mdim_m_estimate(tab2, 1, 2);
    const double x0 = 1.0 / std::sqrt(std::fabs(std::log(ladder[0])));
    const double x1 = 1.0 / std::sqrt(std::fabs(std::log(ladder[1])));
    const double slope = (vals[1] - vals[0]) / (x1 - x0);
    const double intercept = vals[0] - slope * x0;
    CHECK(est2.extrapolated == doctest::Approx(intercept).epsilon(1e-10));
    // deepest rung caps lo; the reflected pad sets hi
    CHECK(est2.lo == doctest::Approx(std::min(vals[1], intercept)).epsilon(1e-10));
    CHECK(est2.hi ==
          doctest::Approx(std::max(vals[1], intercept + std::max(0.0, intercept - vals[1])))
              .epsilon(1e-10));
}

TEST_CASE("mdim_m_estimate rejects incomplete grids") {
    count_table tab;
    tab.rows.push_back({0.1, 1, 0.0, 0.0, 0.0, "formula"});
    CHECK_THROWS_AS((void)mdim_m_estimate(tab, 1, 2), validation_error);
}

TEST_CASE("mdim_h_bracket carries the family certificate") {
    const auto sys = make_tower_psi(1, 3.0);
    const std::int32_t k = 2, top = 7;
    const auto est = mdim_h_bracket(sys, k, top);
    // lower leg: uniform measure on the exact family, one member per ball
    const std::int32_t slots = strip_per_step(sys, k);
    const double log_mu = -static_cast<double>(slots * (top - 1)) * std::log(2.0);
    const double s_max = log_mu / std::log(eps_rung(sys, k));
    CHECK(est.lo == doctest::Approx(s_max / top).epsilon(1e-12));
    CHECK(est.hi == doctest::Approx(box_cap_cantor(3.0)).epsilon(1e-12));
    CHECK(est.extrapolated == doctest::Approx(0.5 * (est.lo + est.hi)).epsilon(1e-12));
    CHECK(est.kind == "mdim_h");
    CHECK(est.lo <= est.hi);

    // hi_cap clamps the upper leg but never below the certified lower leg
    const auto capped = mdim_h_bracket(sys, k, top, est.lo * 0.5);
    CHECK(capped.hi == doctest::Approx(capped.lo).epsilon(1e-12));

    CHECK_THROWS_AS((void)mdim_h_bracket(make_full_shift(3.0), 2, 5),
                    validation_error);
    CHECK_THROWS_AS((void)mdim_h_bracket(sys, 2, 1), validation_error);
}

TEST_CASE("power_map_check sees no violations on consistent tables") {
    const auto t = make_phi_sr(1, 1);
    const auto e = metric_euclid1d();
    const auto pts = grid_sample(65);
    const std::int32_t m = 2, p = 2;
    const auto base = make_interval_table(t, *e, pts, m * p);
    const auto pow_tab = make_interval_table(t, *e, pts, m, p);
    const auto r = power_map_check(*pow_tab, *base, m, p);
    CHECK(r.pairs == 65u * 64u / 2u);
    CHECK(r.violations == 0);
    CHECK(r.max_excess == 0.0);
}

TEST_CASE("power_map_check detects seeded violations") {
    // fabricate tables where the power side exceeds the base side
    std::vector<std::vector<double>> lo(4, std::vector<double>(4, 0.0));
    std::vector<std::vector<double>> hi(4, std::vector<double>(4, 0.0));
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = i + 1; j < 4; ++j) {
            lo[i][j] = lo[j][i] = 0.25;
            hi[i][j] = hi[j][i] = 0.5;
        }
    }
    hi[0][1] = hi[1][0] = 0.75;  // one pair where power > base
    const auto base = make_matrix_table(lo);
    const auto pow_tab = make_matrix_table(hi);
    const auto r = power_map_check(*pow_tab, *base, 1, 1);
    CHECK(r.pairs == 6);
    CHECK(r.violations == 6);  // every 0.5 > 0.25 pair violates
    CHECK(r.max_excess == doctest::Approx(0.5).epsilon(1e-15));
    const auto ok = power_map_check(*base, *pow_tab, 1, 1);
    CHECK(ok.violations == 0);
}
