// ============================================================================
// interval towers: tent kinematics, block geometry, orbits, samples
// ============================================================================

#include <cmath>
#include <random>

#include "doctest.h"
#include "mdimlab/interval.hpp"

using namespace mdim;

TEST_CASE("tent hand values and fixed points") {
    CHECK(tent(0.0) == 0.0);
    CHECK(tent(1.0) == 1.0);
    CHECK(tent(1.0 / 3.0) == 1.0);
    CHECK(tent(2.0 / 3.0) == 0.0);
    CHECK(tent(0.5) == 0.5);
    CHECK(tent(1.0 / 6.0) == 0.5);
    CHECK(tent(5.0 / 6.0) == 0.5);
}

TEST_CASE("tent is piecewise slope 3") {
    const double h = 1e-6;
    // interior of the three monotone branches
    for (double x : {0.1, 0.5, 0.9}) {
        const double slope = (tent(x + h) - tent(x - h)) / (2.0 * h);
        CHECK(std::fabs(slope) == doctest::Approx(3.0).epsilon(1e-6));
    }
}

TEST_CASE("tent_n is m-fold composition") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        const double x = ud(rng);
        double y = x;
        for (std::int64_t m = 0; m <= 6; ++m) {
            CHECK(tent_n(x, m) == y);
            y = tent(y);
        }
    }
}

TEST_CASE("phi_sr block endpoints are 1 - 3^-(r n)") {
    SUBCASE("r = 1") {
        const auto t = make_phi_sr(1, 1);
        REQUIRE(t.blocks.size() >= 5);
        for (std::size_t i = 0; i < 5; ++i) {
            const auto& b = t.blocks[i];
            CHECK(b.n == static_cast<std::int32_t>(i) + 1);
            CHECK(b.lo == 1.0 - std::pow(3.0, -static_cast<double>(b.n - 1)));
            CHECK(b.hi == 1.0 - std::pow(3.0, -static_cast<double>(b.n)));
        }
        CHECK(t.blocks[0].lo == 0.0);
        CHECK(t.blocks[0].hi == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
    }
    SUBCASE("r = 2 spaces blocks faster") {
        const auto t = make_phi_sr(1, 2);
        for (std::size_t i = 0; i < 3; ++i) {
            const auto& b = t.blocks[i];
            CHECK(b.hi == 1.0 - std::pow(3.0, -2.0 * b.n));
        }
    }
}

TEST_CASE("psi_s blocks are the Basel partial sums") {
    const auto t = make_psi_s(1);
    const double c = 6.0 / (M_PI * M_PI);
    double acc = 0.0;
    for (std::size_t i = 0; i < 4 && i < t.blocks.size(); ++i) {
        CHECK(t.blocks[i].lo == doctest::Approx(acc).epsilon(1e-12));
        acc += c / (static_cast<double>(i + 1) * static_cast<double>(i + 1));
        CHECK(t.blocks[i].hi == doctest::Approx(acc).epsilon(1e-12));
    }
}

TEST_CASE("varphi_s blocks are the dyadic islands, cut at representability") {
    const auto t = make_varphi_s(1);
    REQUIRE(t.blocks.size() == 4);  // 2^(-5^5) underflows
    CHECK(t.blocks[3].lo == 0.5);   // n = 1: [2^-1, 2^0]
    CHECK(t.blocks[3].hi == 1.0);
    CHECK(t.blocks[2].lo == std::pow(2.0, -4.0));  // n = 2
    CHECK(t.blocks[2].hi == std::pow(2.0, -3.0));
    CHECK(t.blocks[1].lo == std::pow(2.0, -27.0));
    CHECK(t.blocks[1].hi == std::pow(2.0, -26.0));
    CHECK(t.blocks[0].lo == std::pow(2.0, -256.0));
    CHECK(t.blocks[0].hi == std::pow(2.0, -255.0));
    // islands are genuinely disjoint with gaps
    for (std::size_t i = 1; i < t.blocks.size(); ++i) {
        CHECK(t.blocks[i - 1].hi < t.blocks[i].lo);
    }
}

TEST_CASE("tower_block_index locates blocks, gaps, and tie-breaks left") {
    const auto phi = make_phi_sr(1, 1);
    CHECK(tower_block_index(phi, 0.3) == 0);
    CHECK(tower_block_index(phi, 0.7) == 1);
    CHECK(tower_block_index(phi, 1.0 - 1e-12) >= 5);
    // shared boundary belongs to the left block
    const double seam = phi.blocks[0].hi;
    CHECK(tower_block_index(phi, seam) == 0);
    CHECK(tower_block_index(phi, seam + 5e-16) == 0);  // inside the tie window
    const auto var = make_varphi_s(1);
    CHECK(tower_block_index(var, 0.3) == -1);  // gap point
    CHECK(tower_block_index(var, 0.75) == 3);
}

TEST_CASE("apply_tower replicates the conjugated tent formula") {
    const auto t = make_phi_sr(2, 1);
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> ud(0.0, 1.0);
    for (int trial = 0; trial < 200; ++trial) {
        const double x = ud(rng);
        const auto bi = tower_block_index(t, x);
        const double got = apply_tower(t, x);
        if (bi < 0) {
            CHECK(got == x);
            continue;
        }
        const auto& b = t.blocks[static_cast<std::size_t>(bi)];
        const double w = b.hi - b.lo;
        const double u = std::min(1.0, std::max(0.0, (x - b.lo) / w));
        CHECK(got == b.lo + tent_n(u, static_cast<std::int64_t>(t.s) * b.n) * w);
    }
}

TEST_CASE("block boundaries and off-block points are fixed") {
    const auto t = make_phi_sr(1, 1);
    for (const auto& b : t.blocks) {
        CHECK(apply_tower(t, b.lo) == b.lo);
        CHECK(apply_tower(t, b.hi) == b.hi);
    }
    CHECK(apply_tower(t, 1.0) == 1.0);
    const auto var = make_varphi_s(1);
    CHECK(apply_tower(var, 0.3) == 0.3);  // gap
}

TEST_CASE("grid_sample spans [0,1] inclusively") {
    const auto g = grid_sample(5);
    REQUIRE(g.size() == 5);
    CHECK(g.front() == 0.0);
    CHECK(g.back() == 1.0);
    CHECK(g[2] == 0.5);
    CHECK_THROWS_AS((void)grid_sample(1), validation_error);
}

TEST_CASE("tower_eps_ladder is 3^-q") {
    const auto lad = tower_eps_ladder(2, 5);
    REQUIRE(lad.size() == 4);
    for (std::size_t i = 0; i < lad.size(); ++i) {
        CHECK(lad[i] == std::pow(3.0, -static_cast<double>(i + 2)));
    }
    CHECK_THROWS_AS((void)tower_eps_ladder(0, 3), validation_error);
    CHECK_THROWS_AS((void)tower_eps_ladder(3, 2), validation_error);
}

TEST_CASE("tower_orbit_columns lays iterates out column-major") {
    const auto t = make_phi_sr(1, 1);
    const std::vector<double> pts = {0.1, 0.4, 0.7, 0.95};
    const std::int32_t h = 4;
    const auto cols = tower_orbit_columns(t, pts, h);
    REQUIRE(cols.size() == pts.size() * static_cast<std::size_t>(h));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        double x = pts[i];
        for (std::int32_t m = 0; m < h; ++m) {
            CHECK(cols[static_cast<std::size_t>(m) * pts.size() + i] == x);
            x = apply_tower(t, x);
        }
    }
    CHECK_THROWS_AS((void)tower_orbit_columns(t, pts, 0), validation_error);
}

TEST_CASE("tower_adaptive_sample is deterministic and in-block") {
    const auto t = make_phi_sr(1, 1);
    const double eps_min = std::pow(3.0, -4.0);
    const auto s1 = tower_adaptive_sample(t, eps_min, 3, 4096);
    const auto s2 = tower_adaptive_sample(t, eps_min, 3, 4096);
    CHECK(s1 == s2);
    REQUIRE(!s1.empty());
    std::size_t per_block[16] = {0};
    for (const double x : s1) {
        const auto bi = tower_block_index(t, x);
        REQUIRE(bi >= 0);
        if (bi < 16) ++per_block[bi];
    }
    // every sampled block holds between 2 and cap points
    for (std::size_t i = 0; i < 16; ++i) {
        if (per_block[i] > 0) {
            CHECK(per_block[i] >= 2);
            CHECK(per_block[i] <= 4096);
        }
    }
    // deep blocks (width < eps/5) are cut after a token representative
    CHECK(per_block[8] == 0);
    // the dominant mid-depth blocks get more points than the shallow one
    CHECK(per_block[1] > per_block[0]);
}

TEST_CASE("tower_adaptive_sample validates its arguments") {
    const auto t = make_phi_sr(1, 1);
    CHECK_THROWS_AS((void)tower_adaptive_sample(t, 1.0, 3, 64), validation_error);
    CHECK_THROWS_AS((void)tower_adaptive_sample(t, 0.0, 3, 64), validation_error);
    CHECK_THROWS_AS((void)tower_adaptive_sample(t, 0.1, 0, 64), validation_error);
    CHECK_THROWS_AS((void)tower_adaptive_sample(t, 0.1, 3, 1), validation_error);
}

TEST_CASE("tower builders validate parameters and expose targets") {
    CHECK_THROWS_AS((void)make_phi_sr(0, 1), validation_error);
    CHECK_THROWS_AS((void)make_phi_sr(1, 0), validation_error);
    CHECK_THROWS_AS((void)make_psi_s(0), validation_error);
    CHECK(tower_target(make_phi_sr(1, 1)) == 0.5);
    CHECK(tower_target(make_phi_sr(2, 1)) == doctest::Approx(2.0 / 3.0));
    CHECK(tower_target(make_phi_sr(1, 3)) == 0.25);
    CHECK(tower_target(make_psi_s(2)) == 1.0);
    CHECK(tower_target(make_varphi_s(1)) == 0.0);
}
