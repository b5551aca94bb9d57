// ============================================================================
// counting: greedy certificates vs exact oracles, pair tables, count tables
// ============================================================================

#include <cmath>
#include <random>
#include <vector>

#include "doctest.h"
#include "mdimlab/cantor.hpp"
#include "mdimlab/counting.hpp"
#include "mdimlab/interval.hpp"
#include "mdimlab/metric.hpp"

using namespace mdim;

namespace {

std::vector<std::vector<double>> random_sym_matrix(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            d[i][j] = d[j][i] = ud(rng);
        }
    }
    return d;
}

// exhaustive maximum separated subset for n <= 20: iterate all subsets
std::size_t max_sep_bitmask(const std::vector<std::vector<double>>& d, double eps) {
    const std::size_t n = d.size();
    std::size_t best = 0;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        bool ok = true;
        for (std::size_t i = 0; ok && i < n; ++i) {
            if (!((mask >> i) & 1u)) continue;
            for (std::size_t j = i + 1; ok && j < n; ++j) {
                if (!((mask >> j) & 1u)) continue;
                if (!(d[i][j] > eps)) ok = false;
            }
        }
        if (ok) best = std::max(best, static_cast<std::size_t>(__builtin_popcount(mask)));
    }
    return best;
}

double orbit_dist(const interval_tower& t, double x, double y, std::int32_t h,
                  std::int32_t stride = 1) {
    double best = 0.0;
    for (std::int32_t m = 0; m < h; ++m) {
        best = std::max(best, std::fabs(x - y));
        for (std::int32_t s = 0; s < stride; ++s) {
            x = apply_tower(t, x);
            y = apply_tower(t, y);
        }
    }
    return best;
}

}  // namespace

TEST_CASE("exact_max_separated matches the exhaustive bitmask oracle") {
    for (std::uint64_t seed : {3ull, 17ull, 91ull}) {
        const auto d = random_sym_matrix(12, seed);
        const auto tab = make_matrix_table(d);
        for (double eps : {0.25, 0.5, 0.75, 0.9}) {
            CHECK(exact_max_separated(*tab, 1, eps) == max_sep_bitmask(d, eps));
        }
    }
}

TEST_CASE("greedy_separated yields a valid separated set no larger than exact") {
    for (std::uint64_t seed : {5ull, 23ull}) {
        const auto d = random_sym_matrix(14, seed);
        const auto tab = make_matrix_table(d);
        for (double eps : {0.3, 0.6}) {
            const auto g = greedy_separated(*tab, 1, eps);
            for (std::size_t a = 0; a < g.chosen.size(); ++a) {
                for (std::size_t b = a + 1; b < g.chosen.size(); ++b) {
                    CHECK(tab->at(g.chosen[a], g.chosen[b], 1) > eps);
                }
            }
            CHECK(g.chosen.size() <= max_sep_bitmask(d, eps));
            CHECK(g.chosen.size() >= 1);
        }
    }
}

TEST_CASE("greedy_spanning covers every point within eps") {
    const auto d = random_sym_matrix(16, 7);
    const auto tab = make_matrix_table(d);
    const double eps = 0.4;
    const auto g = greedy_spanning(*tab, 1, eps);
    for (std::size_t p = 0; p < 16; ++p) {
        bool covered = false;
        for (const auto c : g.chosen) {
            if (tab->at(p, c, 1) < eps || p == c) covered = true;
        }
        CHECK(covered);
    }
}

TEST_CASE("greedy_ball_cover partitions the sample into small balls") {
    const auto t = make_phi_sr(1, 1);
    const auto e = metric_euclid1d();
    const auto pts = grid_sample(41);
    const auto tab = make_interval_table(t, *e, pts, 2);
    const double eps = 0.2;
    const auto cover = greedy_ball_cover(*tab, 2, eps);
    std::vector<int> hit(pts.size(), 0);
    for (const auto& ball : cover.balls) {
        CHECK(ball.diam < eps);  // measured diameter stays below eps
        bool center_in = false;
        for (const auto m : ball.members) {
            ++hit[m];
            if (m == ball.center) center_in = true;
        }
        CHECK(center_in);
        // measured diameter is the true max pairwise distance
        double worst = 0.0;
        for (std::size_t a = 0; a < ball.members.size(); ++a) {
            for (std::size_t b = a + 1; b < ball.members.size(); ++b) {
                worst = std::max(worst, tab->at(ball.members[a], ball.members[b], 2));
            }
        }
        CHECK(ball.diam == worst);
    }
    for (const int h : hit) CHECK(h == 1);  // exactly one ball each
}

TEST_CASE("greedy_ball_cover shrinks deterministically on a tie") {
    // center 0.5 would collect both endpoints at radius eps/2, but their
    // mutual distance ties eps, so the radius steps down by 0.9 once
    const std::vector<std::vector<double>> line = {
        {0.0, 0.5, 0.5}, {0.5, 0.0, 1.0}, {0.5, 1.0, 0.0}};
    const auto tab = make_matrix_table(line);
    const auto cover = greedy_ball_cover(*tab, 1, 1.0);
    CHECK(cover.radius == doctest::Approx(0.45).epsilon(1e-15));
    CHECK(cover.balls.size() == 3);
    for (const auto& ball : cover.balls) CHECK(ball.diam < 1.0);
}

TEST_CASE("hausdorff_sum applies the 0^0 = 1 convention") {
    CHECK(hausdorff_sum({0.5, 0.25}, 1.0) == 0.75);
    CHECK(hausdorff_sum({0.5, 0.25}, 0.0) == 2.0);
    CHECK(hausdorff_sum({0.0}, 0.0) == 1.0);  // singleton counts once
    CHECK(hausdorff_sum({0.0}, 0.5) == 0.0);
    CHECK(hausdorff_sum({0.25, 0.25}, 0.5) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("cantor pair tables equal brute-force bowen maxima") {
    const auto sys = make_tower_psi(1, 3.0);
    const auto d = metric_cantor_alpha(3.0);
    const auto fam = materialize_family(sys, 2, 2, 64, 3);
    const std::int32_t h_max = 3;
    const auto tab = make_cantor_table(sys, *d, fam.members, h_max);
    REQUIRE(tab->count() == fam.members.size());
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        for (std::size_t j = 0; j < fam.members.size(); ++j) {
            double best = 0.0;
            cantor_point a = fam.members[i], b = fam.members[j];
            for (std::int32_t m = 0; m < h_max; ++m) {
                best = std::max(best, eval_metric(*d, point{a}, point{b}));
                if (m + 1 < h_max) {
                    a = apply_map(sys, a);
                    b = apply_map(sys, b);
                }
            }
            CHECK(tab->at(i, j, h_max) == best);
        }
    }
}

TEST_CASE("interval pair tables equal brute-force orbit maxima") {
    const auto t = make_phi_sr(1, 1);
    const auto e = metric_euclid1d();
    const auto pts = grid_sample(33);
    const std::int32_t h_max = 3;
    const auto tab = make_interval_table(t, *e, pts, h_max);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            for (std::int32_t h = 1; h <= h_max; ++h) {
                CHECK(tab->at(i, j, h) == orbit_dist(t, pts[i], pts[j], h));
            }
        }
    }
}

TEST_CASE("stride tables sample every p-th iterate") {
    const auto t = make_phi_sr(1, 1);
    const auto e = metric_euclid1d();
    const auto pts = grid_sample(17);
    const std::int32_t p = 2, h = 2;
    const auto tab = make_interval_table(t, *e, pts, h, p);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            CHECK(tab->at(i, j, h) == orbit_dist(t, pts[i], pts[j], h, p));
        }
    }
}

TEST_CASE("product tables take the max across factors") {
    const auto d1 = random_sym_matrix(6, 31);
    const auto d2 = random_sym_matrix(6, 32);
    const auto t1 = make_matrix_table(d1);
    const auto t2 = make_matrix_table(d2);
    const auto prod = make_product_table(t1, t2);
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            CHECK(prod->at(i, j, 1) == std::max(d1[i][j], d2[i][j]));
        }
    }
    const auto t3 = make_matrix_table(random_sym_matrix(4, 33));
    CHECK_THROWS_AS((void)make_product_table(t1, t3), validation_error);
}

TEST_CASE("greedy_count_table validates and reports log counts") {
    const auto t = make_phi_sr(1, 1);
    const auto e = metric_euclid1d();
    const auto pts = grid_sample(65);
    const auto tab = make_interval_table(t, *e, pts, 3);
    const std::vector<double> ladder = {1.0 / 9.0, 1.0 / 27.0};
    const auto counts = greedy_count_table(*tab, ladder, 1, 3);
    REQUIRE(counts.rows.size() == 6);  // eps-major, horizon-minor
    CHECK(counts.rows[0].eps == ladder[0]);
    CHECK(counts.rows[0].n == 1);
    CHECK(counts.rows[5].eps == ladder[1]);
    CHECK(counts.rows[5].n == 3);
    for (const auto& row : counts.rows) {
        CHECK(row.method == "greedy");
        const auto g = greedy_separated(*tab, row.n, row.eps);
        CHECK(row.log_sep_lower == std::log(static_cast<double>(g.chosen.size())));
        // separated lower bounds never exceed cover upper bounds
        CHECK(row.log_sep_lower <= row.log_cov_upper + 1e-12);
    }
    CHECK_THROWS_AS((void)greedy_count_table(*tab, {0.5, 0.5}, 1, 3),
                    validation_error);
    CHECK_THROWS_AS((void)greedy_count_table(*tab, ladder, 1, 9), validation_error);
    CHECK_THROWS_AS((void)greedy_count_table(*tab, ladder, 0, 2), validation_error);
}

TEST_CASE("tower_count_table equals the manual per-block sum") {
    const auto t = make_phi_sr(1, 1);
    const auto e = metric_euclid1d();
    const auto ladder = tower_eps_ladder(2, 4);
    const std::int32_t n1 = 1, n2 = 3;
    const auto pts = tower_adaptive_sample(t, ladder.back(), n2, 512);
    const auto got = tower_count_table(t, *e, pts, ladder, n1, n2);

    // oracle: split by block, run the plain pipeline per block, add counts
    std::vector<std::vector<double>> groups;
    for (const double x : pts) {
        const auto bi = static_cast<std::size_t>(tower_block_index(t, x));
        if (groups.size() <= bi) groups.resize(bi + 1);
        groups[bi].push_back(x);
    }
    std::vector<double> sep(got.rows.size(), 0.0);
    for (const auto& g : groups) {
        if (g.empty()) continue;
        const auto tab = make_interval_table(t, *e, g, n2);
        const auto part = greedy_count_table(*tab, ladder, n1, n2);
        for (std::size_t i = 0; i < part.rows.size(); ++i) {
            sep[i] += std::exp(part.rows[i].log_sep_lower);
        }
    }
    REQUIRE(got.rows.size() == sep.size());
    for (std::size_t i = 0; i < sep.size(); ++i) {
        CHECK(got.rows[i].log_sep_lower == doctest::Approx(std::log(sep[i])));
    }
    CHECK_THROWS_AS((void)tower_count_table(t, *e, {}, ladder, n1, n2),
                    validation_error);
}

TEST_CASE("tower_count_table stays within seam slack of union greedy") {
    const auto t = make_phi_sr(1, 1);
    const auto e = metric_euclid1d();
    const auto ladder = tower_eps_ladder(2, 3);
    const auto pts = tower_adaptive_sample(t, ladder.back(), 2, 256);
    const auto summed = tower_count_table(t, *e, pts, ladder, 1, 2);
    const auto tab = make_interval_table(t, *e, pts, 2);
    const auto whole = greedy_count_table(*tab, ladder, 1, 2);
    const double seams = static_cast<double>(t.blocks.size());
    for (std::size_t i = 0; i < whole.rows.size(); ++i) {
        const double a = std::exp(summed.rows[i].log_sep_lower);
        const double b = std::exp(whole.rows[i].log_sep_lower);
        CHECK(a >= b - 0.5);          // block-local greedy never undercounts union greedy
        CHECK(a <= b + seams + 0.5);  // at most one extra point per seam
    }
}

TEST_CASE("exact_count_table carries the closed-form counts") {
    const auto sys = make_tower_psi(1, 3.0);
    const auto tab = exact_count_table(sys, 1, 3, 2, 4);
    REQUIRE(tab.rows.size() == 9);
    for (const auto& row : tab.rows) {
        CHECK(row.method == "formula");
        // recover (k, h) from the rung and horizon
        std::int32_t k = 0;
        for (std::int32_t kk = 1; kk <= 3; ++kk) {
            if (row.eps == eps_rung(sys, kk)) k = kk;
        }
        REQUIRE(k > 0);
        CHECK(row.log_sep_lower ==
              doctest::Approx(log_big(exact_sep_lower(sys, row.n, k))).epsilon(1e-12));
        CHECK(row.log_cov_upper ==
              doctest::Approx(log_big(exact_cov_upper(sys, row.n, k))).epsilon(1e-12));
    }
}

TEST_CASE("exact_max_separated guards its instance size") {
    const auto d = random_sym_matrix(4, 41);
    const auto tab = make_matrix_table(d);
    CHECK(exact_max_separated(*tab, 1, 2.0) == 1);  // nothing separates
    const auto big = random_sym_matrix(33, 42);
    const auto tb = make_matrix_table(big);
    CHECK_THROWS_AS((void)exact_max_separated(*tb, 1, 0.1), validation_error);
}
