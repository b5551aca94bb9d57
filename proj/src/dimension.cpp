#include "mdimlab/dimension.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace mdim {

// ============================================================================
// cover sums and scale-resolved dimension
// ============================================================================

double cover_sum_log(const scale_cover& c, double s) {
    if (s < 0.0) throw validation_error("cover sum needs s >= 0");
    std::vector<double> terms;
    terms.reserve(c.strata.size());
    const double ninf = -std::numeric_limits<double>::infinity();
    for (const auto& st : c.strata) {
        if (st.log_diam == ninf) {
            // zero-diameter sets: diam^s is 1 at s = 0, else 0
            terms.push_back(s == 0.0 ? st.log_count : ninf);
        } else {
            terms.push_back(st.log_count + s * st.log_diam);
        }
    }
    return log_sum_exp(terms);
}

dim_scale_result dim_h_at_scale(const std::vector<scale_cover>& covers, double eps,
                                double theta, double tol, double s_cap) {
    if (covers.empty()) {
        throw validation_error("dimension at scale needs at least one candidate cover");
    }
    if (!(eps > 0.0) || !(theta > 0.0)) {
        throw validation_error("scale and threshold must be positive");
    }
    if (!(tol > 0.0) || !(s_cap > 0.0)) {
        throw validation_error("tolerance and cap must be positive");
    }
    const double diam_cap = std::log(std::min(eps, 1.0));
    for (const auto& c : covers) {
        if (c.strata.empty()) {
            throw validation_error("candidate cover has no strata");
        }
        for (const auto& st : c.strata) {
            if (!(st.log_diam < diam_cap)) {
                throw validation_error(
                    "cover diameters must be < min(eps, 1) (cover '" + c.label + "')");
            }
        }
    }
    const double log_theta = std::log(theta);
    auto content_holds = [&](double s) {
        // inf over candidate covers of the s-sum
        double best = std::numeric_limits<double>::infinity();
        for (const auto& c : covers) best = std::min(best, cover_sum_log(c, s));
        return best >= log_theta;
    };

    dim_scale_result res;
    if (!content_holds(0.0)) {
        res.s = res.lo = res.hi = 0.0;
        return res;
    }
    if (content_holds(s_cap)) {
        res.s = res.lo = res.hi = s_cap;
        res.saturated = true;
        return res;
    }
    double lo = 0.0, hi = s_cap;
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (content_holds(mid)) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    res.lo = lo;
    res.hi = hi;
    res.s = 0.5 * (lo + hi);
    return res;
}

// ============================================================================
// fits
// ============================================================================

affine_fit fit_affine(const std::vector<double>& xs, const std::vector<double>& ys) {
    if (xs.size() != ys.size() || xs.size() < 2) {
        throw validation_error("affine fit needs >= 2 paired samples");
    }
    const double n = static_cast<double>(xs.size());
    kahan_acc sx, sy;
    for (double x : xs) sx.add(x);
    for (double y : ys) sy.add(y);
    const double mx = sx.sum / n, my = sy.sum / n;
    kahan_acc sxx, sxy;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx.add((xs[i] - mx) * (xs[i] - mx));
        sxy.add((xs[i] - mx) * (ys[i] - my));
    }
    if (sxx.sum == 0.0) throw validation_error("affine fit: degenerate x values");
    affine_fit f;
    f.slope = sxy.sum / sxx.sum;
    f.intercept = my - f.slope * mx;
    return f;
}

box_fit box_dim_estimate(const std::vector<std::pair<double, double>>& eps_logcount) {
    std::vector<double> xs, ys;
    xs.reserve(eps_logcount.size());
    ys.reserve(eps_logcount.size());
    for (const auto& [eps, log_n] : eps_logcount) {
        if (!(eps > 0.0) || eps >= 1.0) {
            throw validation_error("box fit scales must lie in (0,1)");
        }
        xs.push_back(-std::log(eps));
        ys.push_back(log_n);
    }
    box_fit b;
    b.fit = fit_affine(xs, ys);
    b.slope = b.fit.slope;
    return b;
}

double box_cap_cantor(double alpha) {
    // exact covering data: 2^m cylinders of diameter 2 alpha^-m/(alpha-1);
    // log N is affine in |log eps|, so the fitted slope is exact
    std::vector<std::pair<double, double>> data;
    for (std::int32_t m = 8; m <= 40; ++m) {
        data.emplace_back(cylinder_diam(alpha, m),
                          static_cast<double>(m) * std::log(2.0));
    }
    return box_dim_estimate(data).slope + 1e-6;
}

// ============================================================================
// rate estimates
// ============================================================================

dim_estimate mdim_m_estimate(const count_table& tab, std::int32_t n1, std::int32_t n2) {
    if (n2 <= n1) throw validation_error("horizon window needs n1 < n2");
    // group rows by eps, preserving ladder order
    std::vector<double> order;
    std::map<double, std::map<std::int32_t, double>> sep;
    for (const auto& r : tab.rows) {
        if (sep.find(r.eps) == sep.end()) order.push_back(r.eps);
        sep[r.eps][r.n] = r.log_sep_lower;
    }
    if (order.empty()) throw validation_error("empty count table");

    dim_estimate est;
    est.kind = "mdim_m";
    for (double eps : order) {
        const auto& by_n = sep[eps];
        const auto i1 = by_n.find(n1), i2 = by_n.find(n2);
        if (i1 == by_n.end() || i2 == by_n.end()) {
            throw validation_error("count table missing horizon window rows");
        }
        const double rate = (i2->second - i1->second) / static_cast<double>(n2 - n1);
        if (!(eps < 1.0)) throw validation_error("rates need eps < 1");
        est.per_eps.push_back({eps, rate / (-std::log(eps))});
    }

    if (est.per_eps.size() == 1) {
        est.extrapolated = est.per_eps.front().value;
        est.lo = est.hi = est.extrapolated;
        return est;
    }
    std::vector<double> xs, ys;
    for (const auto& rp : est.per_eps) {
        xs.push_back(1.0 / std::sqrt(-std::log(rp.eps)));
        ys.push_back(rp.value);
    }
    const affine_fit f = fit_affine(xs, ys);
    est.extrapolated = f.intercept;
    const double deepest = est.per_eps.back().value;
    est.lo = std::max(0.0, std::min(deepest, est.extrapolated));
    est.hi = std::max(deepest,
                      est.extrapolated + std::max(0.0, est.extrapolated - deepest));
    return est;
}

// ============================================================================
// mass distribution
// ============================================================================

mass_result mass_dist_lower_bound(const std::vector<mass_ball>& balls, double s) {
    if (balls.empty()) throw validation_error("mass certificate needs balls");
    if (!(s >= 0.0)) throw validation_error("mass certificate needs s >= 0");
    mass_result res;
    res.worst = -std::numeric_limits<double>::infinity();
    for (const auto& b : balls) {
        if (!(b.log_diam < 0.0)) {
            throw validation_error("mass certificate balls need diam < 1");
        }
        // log mu <= s log diam <=> excess <= 0
        res.worst = std::max(res.worst, b.log_mu - s * b.log_diam);
    }
    res.certified = res.worst <= 0.0;
    res.s_max = mass_dist_s_max(balls);
    return res;
}

double mass_dist_s_max(const std::vector<mass_ball>& balls) {
    if (balls.empty()) throw validation_error("mass certificate needs balls");
    double s_max = std::numeric_limits<double>::infinity();
    for (const auto& b : balls) {
        if (!(b.log_diam < 0.0)) {
            throw validation_error("mass certificate balls need diam < 1");
        }
        if (b.log_mu >= 0.0) return 0.0;
        // log mu / log diam: both negative, ratio positive
        s_max = std::min(s_max, b.log_mu / b.log_diam);
    }
    return s_max;
}

dim_estimate mdim_h_bracket(const cantor_system& sys, std::int32_t k,
                            std::int32_t window_top, double hi_cap) {
    if (sys.k == cantor_system::kind::full_shift) {
        throw validation_error("the bracket is defined for the tower systems");
    }
    if (window_top < 2) throw validation_error("bracket window must reach horizon 2");
    const std::int32_t n = window_top - 1;
    const std::int32_t slots = strip_per_step(sys, k);
    const double eps = eps_rung(sys, k);

    dim_estimate est;
    est.kind = "mdim_h";
    // diagnostics: certified per-rung values at this window for rungs 1..k
    for (std::int32_t kk = 1; kk <= k; ++kk) {
        const std::int32_t sl = strip_per_step(sys, kk);
        const double e = eps_rung(sys, kk);
        const double cert = (static_cast<double>(sl) * n * std::log(2.0)) /
                            (static_cast<double>(window_top) * (-std::log(e)));
        est.per_eps.push_back({e, cert});
    }
    // lower leg: uniform measure on the exact (window_top, eps)-separated
    // family; any set of diameter <= eps holds at most one member
    std::vector<mass_ball> balls;
    balls.push_back({-(static_cast<double>(slots) * n) * std::log(2.0),
                     std::log(eps)});
    est.lo = mass_dist_s_max(balls) / static_cast<double>(window_top);
    // upper leg: box cap of the base space, tightened by any caller bound
    est.hi = std::min(box_cap_cantor(sys.alpha), hi_cap);
    if (est.hi < est.lo) est.hi = est.lo;  // degenerate caller cap
    est.extrapolated = 0.5 * (est.lo + est.hi);
    return est;
}

// ============================================================================
// power maps
// ============================================================================

power_check_result power_map_check(const pair_table& power_tab,
                                   const pair_table& base_tab, std::int32_t m,
                                   std::int32_t p) {
    if (power_tab.count() != base_tab.count()) {
        throw validation_error("power check needs matching samples");
    }
    if (m < 1 || p < 1) throw validation_error("power check needs m >= 1, p >= 1");
    if (power_tab.max_horizon() < m || base_tab.max_horizon() < m * p) {
        throw validation_error("power check horizons exceed the tables");
    }
    const std::size_t n = power_tab.count();
    power_check_result res;
    std::vector<double> rp(n), rb(n);
    for (std::size_t i = 0; i < n; ++i) {
        power_tab.row(i, m, rp.data());
        base_tab.row(i, m * p, rb.data());
        for (std::size_t j = i + 1; j < n; ++j) {
            ++res.pairs;
            if (rp[j] > rb[j]) {
                ++res.violations;
                res.max_excess = std::max(res.max_excess, rp[j] - rb[j]);
            }
        }
    }
    return res;
}

}  // namespace mdim
