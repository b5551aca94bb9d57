#pragma once
// ============================================================================
// gauge: admissible gauge functions g on (0, rho]
//
// A usable gauge is positive, non-decreasing, vanishes at 0, and has upper
// order k_M = limsup log g(x)/log x at most 1. The order estimate drives the
// scaling law: composing a gauge of order k with a metric divides dimension
// rates by k. Neighborhoods B(g, eps) = { h : x^eps g < h < g x^-eps } give
// the stability statement |k(h) - k(g)| <= eps and need rho < 1 so that
// x^eps actually shrinks.
// ============================================================================

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mdimlab/common.hpp"

namespace mdim {

struct gauge_spec {
    enum class kind { power, log1p, log1p_power, tabulated };

    kind k = kind::power;
    double a = 1.0;    // exponent for power / log1p_power
    double rho = 0.5;  // right end of the domain (0, rho]
    // tabulated: sorted (x, g(x)) nodes, log-log interpolated (exact on powers)
    std::vector<std::pair<double, double>> table;
};

gauge_spec make_power_gauge(double a, double rho = 0.5);
gauge_spec make_log1p_gauge(double rho = 0.5);
gauge_spec make_log1p_power_gauge(double a, double rho = 0.5);
gauge_spec make_tabulated_gauge(std::vector<std::pair<double, double>> nodes,
                                double rho = 0.5);
// builtin table: sqrt sampled on a geometric grid over [x_lo, rho]
gauge_spec make_sqrt_table_gauge(double rho = 0.5, int nodes = 64,
                                 double x_lo = 1e-12);

double gauge_eval(const gauge_spec& g, double x);

std::string gauge_name(const gauge_spec& g);

// ----------------------------------------------------------------------------
// membership check on a geometric grid over (x_lo, rho]
// ----------------------------------------------------------------------------

struct membership_report {
    bool ok = true;
    std::string violation;   // empty when ok
    double k_upper_seen = 0; // max log g / log x over the grid tail
};

membership_report check_membership(const gauge_spec& g, int grid = 256,
                                   double x_lo = 1e-10);

// ----------------------------------------------------------------------------
// order estimation
// ----------------------------------------------------------------------------

struct k_estimate {
    double k_hat = 0;    // mean ratio over the deepest half of the ladder
    double k_lo = 0;     // min tail ratio
    double k_hi = 0;     // max tail ratio
    std::vector<std::pair<double, double>> ratios;  // (x, log g(x)/log x)
};

// ladder must be strictly decreasing, inside (0, rho], all below 1
k_estimate estimate_k(const gauge_spec& g, const std::vector<double>& ladder);

// ----------------------------------------------------------------------------
// neighborhoods
// ----------------------------------------------------------------------------

// true iff x^eps g(x) < h(x) < g(x) x^-eps strictly on a geometric grid over
// (x_lo, rho']; rho' = min(rho_g, rho_h) must be < 1
bool neighborhood_contains(const gauge_spec& g, const gauge_spec& h, double eps,
                           int grid = 256, double x_lo = 1e-10);

}  // namespace mdim
