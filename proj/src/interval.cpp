#include "mdimlab/interval.hpp"

#include <algorithm>
#include <cmath>

namespace mdim {

double tent(double x) {
    const double v = 1.0 - std::fabs(3.0 * x - 1.0);
    const double y = std::fabs(v);
    // clamp float drift so long orbits stay inside [0,1]
    return std::min(1.0, std::max(0.0, y));
}

double tent_n(double x, std::int64_t m) {
    for (std::int64_t i = 0; i < m; ++i) x = tent(x);
    return x;
}

namespace {

constexpr double boundary_tie = 1e-15;

void require_unit(double x) {
    if (!(x >= 0.0 && x <= 1.0)) {
        throw validation_error("tower points must lie in [0,1]");
    }
}

}  // namespace

interval_tower make_phi_sr(std::int32_t s, std::int32_t r) {
    if (s < 1 || r < 1) throw validation_error("phi_sr needs s >= 1 and r >= 1");
    interval_tower t;
    t.k = interval_tower::kind::phi_sr;
    t.s = s;
    t.r = r;
    double prev = 0.0;
    for (std::int32_t n = 1;; ++n) {
        const double a_n = 1.0 - std::pow(3.0, -static_cast<double>(r) * n);
        if (a_n - prev < 1e-14) break;  // deeper blocks not resolvable
        t.blocks.push_back({prev, a_n, n});
        prev = a_n;
    }
    return t;
}

interval_tower make_psi_s(std::int32_t s) {
    if (s < 1) throw validation_error("psi_s needs s >= 1");
    interval_tower t;
    t.k = interval_tower::kind::psi_s;
    t.s = s;
    const double pi = std::acos(-1.0);
    const double c = 6.0 / (pi * pi);
    double prev = 0.0;
    kahan_acc acc;
    constexpr std::int32_t n_cap = 4096;  // deeper blocks below sampling scale
    for (std::int32_t n = 1; n <= n_cap; ++n) {
        acc.add(c / (static_cast<double>(n) * static_cast<double>(n)));
        const double b_n = std::min(acc.sum, 1.0);
        if (b_n - prev < 1e-14) break;
        t.blocks.push_back({prev, b_n, n});
        prev = b_n;
    }
    return t;
}

interval_tower make_varphi_s(std::int32_t s) {
    if (s < 1) throw validation_error("varphi_s needs s >= 1");
    interval_tower t;
    t.k = interval_tower::kind::varphi_s;
    t.s = s;
    // J_n = [2^(-n^n), 2^(-n^n + 1)]; n = 5 underflows double range, so the
    // representable tower stops at n = 4
    for (std::int32_t n = 4; n >= 1; --n) {
        double e = 1.0;
        for (std::int32_t i = 0; i < n; ++i) e *= static_cast<double>(n);
        const double lo = std::pow(2.0, -e);
        const double hi = std::pow(2.0, -e + 1.0);
        t.blocks.push_back({lo, hi, n});
    }
    return t;
}

double tower_target(const interval_tower& t) {
    switch (t.k) {
        case interval_tower::kind::phi_sr:
            return static_cast<double>(t.s) / static_cast<double>(t.r + t.s);
        case interval_tower::kind::psi_s:
            return 1.0;
        case interval_tower::kind::varphi_s:
            return 0.0;
    }
    throw validation_error("unknown tower kind");
}

std::int32_t tower_block_index(const interval_tower& t, double x) {
    require_unit(x);
    // first block with hi >= x
    std::int32_t lo = 0;
    std::int32_t hi = static_cast<std::int32_t>(t.blocks.size()) - 1;
    std::int32_t found = -1;
    while (lo <= hi) {
        const std::int32_t mid = lo + (hi - lo) / 2;
        if (t.blocks[static_cast<std::size_t>(mid)].hi >= x) {
            found = mid;
            hi = mid - 1;
        } else {
            lo = mid + 1;
        }
    }
    if (found < 0) return -1;
    const auto& b = t.blocks[static_cast<std::size_t>(found)];
    if (x < b.lo) {
        // gap point (varphi towers); within tie of the gap's right edge it
        // belongs to the block starting there, but that edge is b.lo itself
        if (b.lo - x <= boundary_tie) return found;
        return -1;
    }
    // shared-boundary tie: the left edge of a non-first block belongs left
    if (found > 0 && x - b.lo <= boundary_tie &&
        t.blocks[static_cast<std::size_t>(found - 1)].hi == b.lo) {
        return found - 1;
    }
    return found;
}

double apply_tower(const interval_tower& t, double x) {
    require_unit(x);
    const std::int32_t bi = tower_block_index(t, x);
    if (bi < 0) return x;  // gaps and unresolved tails are fixed
    const auto& b = t.blocks[static_cast<std::size_t>(bi)];
    const double width = b.hi - b.lo;
    double u = (x - b.lo) / width;
    u = std::min(1.0, std::max(0.0, u));
    const std::int64_t iters =
        static_cast<std::int64_t>(t.s) * static_cast<std::int64_t>(b.n);
    const double v = tent_n(u, iters);
    return b.lo + v * width;
}

std::vector<double> grid_sample(std::size_t count) {
    if (count < 2) throw validation_error("grid sample needs at least 2 points");
    std::vector<double> xs(count);
    for (std::size_t i = 0; i < count; ++i) {
        xs[i] = static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return xs;
}

std::vector<double> tower_adaptive_sample(const interval_tower& t, double eps_min,
                                          std::int32_t horizon, std::size_t block_cap) {
    if (!(eps_min > 0.0) || eps_min >= 1.0) {
        throw validation_error("adaptive sample needs eps_min in (0, 1)");
    }
    if (horizon < 1) throw validation_error("adaptive sample horizon must be >= 1");
    if (block_cap < 2) throw validation_error("adaptive sample block cap must be >= 2");
    constexpr double oversample = 8.0;
    std::vector<double> xs;
    for (const auto& b : t.blocks) {
        const double width = b.hi - b.lo;
        const double cells = std::max(width / eps_min, 1.0);
        // per-step separated growth saturates at the cell count, so size the
        // grid to the realizable itinerary count, not to the raw expansion
        const double factor =
            std::min(std::pow(3.0, static_cast<double>(t.s) * b.n), cells);
        const double ideal = cells * std::pow(factor, horizon - 1);
        const auto n_pts = static_cast<std::size_t>(
            std::clamp(oversample * ideal, 2.0, static_cast<double>(block_cap)));
        for (std::size_t i = 0; i < n_pts; ++i) {
            xs.push_back(b.lo +
                         width * (static_cast<double>(i) + 0.5) / static_cast<double>(n_pts));
        }
        if (width < eps_min * 0.2) break;  // rest of the tail shares one ball
    }
    return xs;
}

std::vector<double> tower_eps_ladder(std::int32_t q_min, std::int32_t q_max) {
    if (q_min < 1 || q_max < q_min) {
        throw validation_error("ladder needs 1 <= q_min <= q_max");
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(q_max - q_min + 1));
    for (std::int32_t q = q_min; q <= q_max; ++q) {
        out.push_back(std::pow(3.0, -static_cast<double>(q)));
    }
    return out;
}

std::vector<double> tower_orbit_columns(const interval_tower& t,
                                        const std::vector<double>& points,
                                        std::int32_t horizon) {
    if (horizon < 1) throw validation_error("orbit horizon must be >= 1");
    const std::size_t n = points.size();
    std::vector<double> out(static_cast<std::size_t>(horizon) * n);
    parallel_for(n, [&](std::size_t i) {
        double x = points[i];
        for (std::int32_t m = 0; m < horizon; ++m) {
            out[static_cast<std::size_t>(m) * n + i] = x;
            if (m + 1 < horizon) x = apply_tower(t, x);
        }
    });
    return out;
}

}  // namespace mdim
