#include "mdimlab/gauge.hpp"

#include <algorithm>
#include <cmath>

namespace mdim {

namespace {

void require_rho(double rho) {
    if (!(rho > 0.0) || !std::isfinite(rho)) {
        throw validation_error("gauge rho must be positive and finite");
    }
}

// geometric grid from hi down to lo, inclusive at both ends
std::vector<double> geometric_grid(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw validation_error("geometric grid needs 0 < lo < hi and >= 2 nodes");
    }
    std::vector<double> xs(static_cast<std::size_t>(n));
    const double step = (std::log(hi) - std::log(lo)) / (n - 1);
    for (int i = 0; i < n; ++i) {
        xs[static_cast<std::size_t>(i)] = std::exp(std::log(lo) + step * i);
    }
    xs.front() = lo;
    xs.back() = hi;
    return xs;
}

}  // namespace

gauge_spec make_power_gauge(double a, double rho) {
    require_rho(rho);
    if (!(a > 0.0)) throw validation_error("power gauge needs a > 0");
    gauge_spec g;
    g.k = gauge_spec::kind::power;
    g.a = a;
    g.rho = rho;
    return g;
}

gauge_spec make_log1p_gauge(double rho) {
    require_rho(rho);
    gauge_spec g;
    g.k = gauge_spec::kind::log1p;
    g.rho = rho;
    return g;
}

gauge_spec make_log1p_power_gauge(double a, double rho) {
    require_rho(rho);
    if (!(a > 0.0)) throw validation_error("log1p_power gauge needs a > 0");
    gauge_spec g;
    g.k = gauge_spec::kind::log1p_power;
    g.a = a;
    g.rho = rho;
    return g;
}

gauge_spec make_tabulated_gauge(std::vector<std::pair<double, double>> nodes,
                                double rho) {
    require_rho(rho);
    if (nodes.size() < 2) {
        throw validation_error("tabulated gauge needs at least 2 nodes");
    }
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (!(nodes[i].first > 0.0) || !(nodes[i].second > 0.0)) {
            throw validation_error("tabulated gauge nodes must be positive");
        }
        if (i > 0 && !(nodes[i].first > nodes[i - 1].first)) {
            throw validation_error("tabulated gauge nodes must be strictly increasing in x");
        }
    }
    gauge_spec g;
    g.k = gauge_spec::kind::tabulated;
    g.rho = rho;
    g.table = std::move(nodes);
    return g;
}

gauge_spec make_sqrt_table_gauge(double rho, int nodes, double x_lo) {
    auto xs = geometric_grid(x_lo, rho, nodes);
    std::vector<std::pair<double, double>> tab;
    tab.reserve(xs.size());
    for (double x : xs) tab.emplace_back(x, std::sqrt(x));
    return make_tabulated_gauge(std::move(tab), rho);
}

double gauge_eval(const gauge_spec& g, double x) {
    if (!(x > 0.0)) {
        if (x == 0.0) return 0.0;  // continuous extension at 0
        throw validation_error("gauge argument must be >= 0");
    }
    if (x > g.rho * (1.0 + 1e-12)) {
        throw validation_error("gauge argument exceeds domain (0, rho]");
    }
    switch (g.k) {
        case gauge_spec::kind::power:
            return std::pow(x, g.a);
        case gauge_spec::kind::log1p:
            return std::log1p(x);
        case gauge_spec::kind::log1p_power:
            return std::log1p(std::pow(x, g.a));
        case gauge_spec::kind::tabulated: {
            // log-log linear interpolation; boundary segments extrapolate,
            // so pure power tables evaluate exactly everywhere
            const auto& t = g.table;
            std::size_t hi = 1;
            while (hi + 1 < t.size() && t[hi].first < x) ++hi;
            const std::size_t lo = hi - 1;
            const double lx0 = std::log(t[lo].first), lx1 = std::log(t[hi].first);
            const double ly0 = std::log(t[lo].second), ly1 = std::log(t[hi].second);
            const double u = (std::log(x) - lx0) / (lx1 - lx0);
            return std::exp(ly0 + u * (ly1 - ly0));
        }
    }
    throw validation_error("gauge_eval: unknown gauge kind");
}

std::string gauge_name(const gauge_spec& g) {
    switch (g.k) {
        case gauge_spec::kind::power:
            return "power(a=" + format_g9(g.a) + ")";
        case gauge_spec::kind::log1p:
            return "log1p";
        case gauge_spec::kind::log1p_power:
            return "log1p_power(a=" + format_g9(g.a) + ")";
        case gauge_spec::kind::tabulated:
            return "tabulated(" + std::to_string(g.table.size()) + " nodes)";
    }
    return "unknown";
}

membership_report check_membership(const gauge_spec& g, int grid, double x_lo) {
    membership_report rep;
    const auto xs = geometric_grid(std::min(x_lo, g.rho / 4.0), g.rho, grid);
    std::vector<double> vals;
    vals.reserve(xs.size());
    for (double x : xs) {
        const double v = gauge_eval(g, x);
        if (!(v > 0.0) || !std::isfinite(v)) {
            rep.ok = false;
            rep.violation = "g(" + format_g9(x) + ") is not positive and finite";
            return rep;
        }
        vals.push_back(v);
    }
    for (std::size_t i = 1; i < xs.size(); ++i) {
        if (vals[i] < vals[i - 1]) {
            rep.ok = false;
            rep.violation = "g is decreasing near x=" + format_g9(xs[i]);
            return rep;
        }
    }
    if (!(vals.front() < vals.back())) {
        rep.ok = false;
        rep.violation = "g is flat across the grid (cannot vanish at 0)";
        return rep;
    }
    // upper order estimate over the deepest half of the grid; admissible
    // gauges have k_M <= 1 (small slack absorbs grid truncation)
    double k_max = 0.0;
    const std::size_t half = xs.size() / 2;
    for (std::size_t i = 0; i < half; ++i) {
        if (xs[i] >= 1.0) continue;
        k_max = std::max(k_max, std::log(vals[i]) / std::log(xs[i]));
    }
    rep.k_upper_seen = k_max;
    if (k_max > 1.0 + 0.05) {
        rep.ok = false;
        rep.violation = "upper order " + format_g9(k_max) + " exceeds 1";
        return rep;
    }
    return rep;
}

k_estimate estimate_k(const gauge_spec& g, const std::vector<double>& ladder) {
    if (ladder.empty()) throw validation_error("estimate_k: empty ladder");
    for (std::size_t i = 0; i < ladder.size(); ++i) {
        if (!(ladder[i] > 0.0) || ladder[i] >= 1.0) {
            throw validation_error("estimate_k: ladder values must lie in (0,1)");
        }
        if (ladder[i] > g.rho * (1.0 + 1e-12)) {
            throw validation_error("estimate_k: ladder value exceeds gauge domain");
        }
        if (i > 0 && !(ladder[i] < ladder[i - 1])) {
            throw validation_error("estimate_k: ladder must be strictly decreasing");
        }
    }
    k_estimate est;
    est.ratios.reserve(ladder.size());
    for (double x : ladder) {
        est.ratios.emplace_back(x, std::log(gauge_eval(g, x)) / std::log(x));
    }
    // deepest half of the ladder carries the asymptotic signal
    const std::size_t tail_begin = ladder.size() / 2;
    double lo = est.ratios[tail_begin].second;
    double hi = lo;
    kahan_acc mean;
    std::size_t n_tail = 0;
    for (std::size_t i = tail_begin; i < est.ratios.size(); ++i) {
        const double r = est.ratios[i].second;
        lo = std::min(lo, r);
        hi = std::max(hi, r);
        mean.add(r);
        ++n_tail;
    }
    est.k_hat = mean.sum / static_cast<double>(n_tail);
    est.k_lo = lo;
    est.k_hi = hi;
    return est;
}

bool neighborhood_contains(const gauge_spec& g, const gauge_spec& h, double eps,
                           int grid, double x_lo) {
    if (!(eps > 0.0)) throw validation_error("neighborhood radius must be positive");
    const double rho = std::min(g.rho, h.rho);
    if (!(rho < 1.0)) {
        throw validation_error(
            "gauge neighborhoods need rho < 1 (x^eps must shrink on the domain); "
            "rescale the gauge domain first");
    }
    const auto xs = geometric_grid(std::min(x_lo, rho / 4.0), rho, grid);
    for (double x : xs) {
        const double gv = gauge_eval(g, x);
        const double hv = gauge_eval(h, x);
        const double band = std::pow(x, eps);
        if (!(gv * band < hv) || !(hv < gv / band)) return false;
    }
    return true;
}

}  // namespace mdim
