// ============================================================================
// symbolic dynamics: word maps vs string oracles, exact counts, families
// ============================================================================

#include <cmath>
#include <set>
#include <string>

#include "doctest.h"
#include "mdimlab/cantor.hpp"
#include "mdimlab/metric.hpp"

using namespace mdim;

namespace {

// string-level oracle for one map application: block-k words keep their
// prefix (k-1 zeros and the 2) and lose `strip` symbols right after it
std::string strip_oracle(const std::string& word, std::int32_t strip) {
    const auto first2 = word.find('2');
    REQUIRE(first2 != std::string::npos);
    const std::size_t prefix = first2 + 1;
    REQUIRE(word.size() >= prefix + static_cast<std::size_t>(strip));
    return word.substr(0, prefix) + word.substr(prefix + static_cast<std::size_t>(strip));
}

std::string shift_oracle(const std::string& word) {
    REQUIRE(!word.empty());
    return word.substr(1);
}

double orbit_bowen(const cantor_system& sys, const metric_spec& d,
                   const cantor_point& x, const cantor_point& y, std::int32_t h) {
    double best = 0.0;
    cantor_point a = x, b = y;
    for (std::int32_t m = 0; m < h; ++m) {
        best = std::max(best, eval_metric(d, point{a}, point{b}));
        if (m + 1 < h) {
            a = apply_map(sys, a);
            b = apply_map(sys, b);
        }
    }
    return best;
}

}  // namespace

TEST_CASE("symbol strings round trip through packed words") {
    for (const std::string s : {"2", "02", "2020", "002200", ""}) {
        CHECK(cantor_to_symbols(cantor_from_symbols(s)).substr(0, s.size()) == s);
    }
    CHECK(cantor_from_symbols("202").bits == 0b101u);
    CHECK(cantor_from_symbols("202").depth == 3);
    CHECK_THROWS_AS((void)cantor_from_symbols("21"), validation_error);
    CHECK_THROWS_AS((void)make_cantor(1, 0), validation_error);
    CHECK_THROWS_AS((void)make_cantor(0, 65), depth_error);
}

TEST_CASE("cantor_block reads the leading zero run") {
    CHECK(cantor_block(cantor_from_symbols("2")) == 1);
    CHECK(cantor_block(cantor_from_symbols("02")) == 2);
    CHECK(cantor_block(cantor_from_symbols("0002")) == 4);
    CHECK(cantor_block(cantor_point{0, 64}) == 0);  // all-zero word
}

TEST_CASE("full shift drops the first coordinate") {
    const auto sys = make_full_shift(3.0);
    for (const std::string s : {"2020", "0220", "2222"}) {
        const auto img = apply_map(sys, cantor_from_symbols(s));
        CHECK(cantor_to_symbols(img).substr(0, s.size() - 1) == shift_oracle(s));
        CHECK(img.depth == static_cast<std::int32_t>(s.size()) - 1);
    }
}

TEST_CASE("tower maps strip slots*1 coordinates after the block prefix") {
    SUBCASE("psi_j strips j*k") {
        for (std::int32_t j : {1, 2}) {
            const auto sys = make_tower_psi(j, 3.0);
            for (std::int32_t k : {1, 2, 3}) {
                std::string word(static_cast<std::size_t>(k - 1), '0');
                word += "2";
                word += "20022020";  // payload
                const auto img = apply_map(sys, cantor_from_symbols(word));
                const std::string want = strip_oracle(word, j * k);
                CHECK(cantor_to_symbols(img).substr(0, want.size()) == want);
                CHECK(img.depth ==
                      static_cast<std::int32_t>(word.size()) - j * k);
            }
        }
    }
    SUBCASE("phi_square strips k*k") {
        const auto sys = make_tower_phi_square(3.0);
        for (std::int32_t k : {1, 2}) {
            std::string word(static_cast<std::size_t>(k - 1), '0');
            word += "2";
            word += "202200220";
            const auto img = apply_map(sys, cantor_from_symbols(word));
            const std::string want = strip_oracle(word, k * k);
            CHECK(cantor_to_symbols(img).substr(0, want.size()) == want);
        }
    }
}

TEST_CASE("the all-zero word is fixed by every system") {
    const cantor_point zero{0, 64};
    for (const auto& sys : {make_full_shift(3.0), make_tower_psi(1, 3.0),
                            make_tower_psi(3, 3.0), make_tower_phi_square(3.0)}) {
        const auto img = apply_map(sys, zero);
        CHECK(img.bits == 0);
    }
}

TEST_CASE("apply_map_n composes single applications") {
    const auto sys = make_tower_psi(1, 3.0);
    const auto x = cantor_from_symbols("0220202202202020");
    cantor_point step = x;
    for (std::int32_t m = 0; m <= 3; ++m) {
        const auto direct = apply_map_n(sys, x, m);
        CHECK(direct.bits == step.bits);
        CHECK(direct.depth == step.depth);
        if (m < 3) step = apply_map(sys, step);
    }
}

TEST_CASE("orbit_depth_needed is sharp") {
    const auto sys = make_tower_psi(2, 3.0);
    const std::int32_t k = 2, m = 3;
    const std::int32_t need = orbit_depth_needed(sys, k, m);
    // a block-k word with exactly `need` coordinates survives m applications
    std::string word(static_cast<std::size_t>(k - 1), '0');
    word += "2";
    while (word.size() < static_cast<std::size_t>(need)) word += "2";
    CHECK_NOTHROW((void)apply_map_n(sys, cantor_from_symbols(word), m));
    // one coordinate short throws
    word.pop_back();
    CHECK_THROWS_AS((void)apply_map_n(sys, cantor_from_symbols(word), m),
                    depth_error);
}

TEST_CASE("eps ladders match their closed forms") {
    SUBCASE("psi rung alpha^-(k(j+1))") {
        for (std::int32_t j : {1, 2}) {
            const auto sys = make_tower_psi(j, 3.0);
            for (std::int32_t k = 1; k <= 5; ++k) {
                CHECK(eps_rung(sys, k) ==
                      std::pow(3.0, -static_cast<double>(k * (j + 1))));
            }
        }
    }
    SUBCASE("phi rung alpha^-(k^2+k)") {
        const auto sys = make_tower_phi_square(3.0);
        for (std::int32_t k = 1; k <= 4; ++k) {
            CHECK(eps_rung(sys, k) ==
                  std::pow(3.0, -static_cast<double>(k * k + k)));
        }
    }
    SUBCASE("shift rung is the depth-k cylinder diameter") {
        const auto sys = make_full_shift(3.0);
        for (std::int32_t k = 1; k <= 6; ++k) {
            CHECK(eps_rung(sys, k) == cylinder_diam(3.0, k));
            CHECK(eps_rung(sys, k) == doctest::Approx(std::pow(3.0, -k)));
        }
    }
    SUBCASE("ladders are strictly decreasing") {
        const auto sys = make_tower_psi(1, 3.0);
        const auto lad = eps_ladder(sys, 1, 6);
        for (std::size_t i = 1; i < lad.size(); ++i) CHECK(lad[i] < lad[i - 1]);
    }
}

TEST_CASE("cylinder diameter formula: 2 alpha^-m / (alpha - 1)") {
    CHECK(cylinder_diam(3.0, 0) == 1.0);
    CHECK(cylinder_diam(3.0, 1) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(cylinder_diam(3.0, 5) == doctest::Approx(std::pow(3.0, -5.0)));
    // oracle: the all-0 and all-2 tails realize it; partial sums converge up
    const auto w = cantor_weight_table(3.0);
    const std::int32_t m = 3;
    double tail = 0.0;
    for (std::size_t i = static_cast<std::size_t>(m); i < w.size(); ++i) tail += w[i];
    CHECK(cylinder_diam(3.0, m) == doctest::Approx(tail).epsilon(1e-14));
}

TEST_CASE("exact counts reproduce the combinatorial formulas") {
    SUBCASE("tower separation 2^{slots (h-1)} and cover k 2^{h slots} + 2") {
        for (std::int32_t j : {1, 2}) {
            const auto sys = make_tower_psi(j, 3.0);
            for (std::int32_t k = 1; k <= 3; ++k) {
                const std::int32_t slots = strip_per_step(sys, k);
                CHECK(slots == j * k);
                for (std::int32_t h = 1; h <= 4; ++h) {
                    CHECK(exact_sep_lower(sys, h, k) ==
                          big_count(1) << (slots * (h - 1)));
                    CHECK(exact_cov_upper(sys, h, k) ==
                          big_count(k) * (big_count(1) << (h * slots)) + 2);
                }
            }
        }
        const auto phi = make_tower_phi_square(3.0);
        CHECK(strip_per_step(phi, 3) == 9);
        CHECK(exact_sep_lower(phi, 3, 2) == big_count(1) << 8);
    }
    SUBCASE("full shift separation 2^{h+k-1}, alphabet oracle") {
        const auto sys = make_full_shift(3.0);
        for (std::int32_t k = 1; k <= 4; ++k) {
            for (std::int32_t h = 1; h <= 5; ++h) {
                CHECK(exact_sep_lower(sys, h, k) == big_count(1) << (h + k - 1));
                CHECK(exact_sep_lower(sys, h, k) == full_shift_sep_exact(2, h, k));
                CHECK(exact_cov_upper(sys, h, k) == big_count(1) << (h + k));
            }
        }
        big_count p27 = 1;
        for (int i = 0; i < 5; ++i) p27 *= 3;
        CHECK(full_shift_sep_exact(3, 3, 3) == p27);  // 3^{h+k-1}
    }
}

TEST_CASE("log_big is exact on small counts and stable on huge ones") {
    CHECK(log_big(big_count(8)) == std::log(8.0));
    const double got = log_big(big_count(1) << 700);
    CHECK(got == doctest::Approx(700.0 * std::log(2.0)).epsilon(1e-12));
    CHECK_THROWS_AS((void)log_big(big_count(0)), validation_error);
}

TEST_CASE("materialize_family enumerates the full family under the cap") {
    const auto sys = make_tower_psi(1, 3.0);
    const auto fam = materialize_family(sys, 2, 2, 2048, 1);
    CHECK(fam.k == 2);
    CHECK(fam.n == 2);
    CHECK(fam.slots == 4);  // strip_per_step * n
    CHECK(fam.size == 16);
    CHECK(fam.complete);
    REQUIRE(fam.members.size() == 16);
    CHECK(fam.eps == eps_rung(sys, 2));

    std::set<std::uint64_t> seen;
    for (const auto& m : fam.members) {
        seen.insert(m.bits);
        // block-2 prefix: symbol 0 then 2
        CHECK((m.bits & 1u) == 0);
        CHECK(((m.bits >> 1) & 1u) == 1);
        // zero tail beyond prefix + free slots
        CHECK((m.bits >> (2 + 4)) == 0);
    }
    CHECK(seen.size() == 16);  // all distinct
}

TEST_CASE("family min pairwise bowen distance matches brute force exactly") {
    const auto sys = make_tower_psi(1, 3.0);
    const auto d = metric_cantor_alpha(3.0);
    const auto fam = materialize_family(sys, 2, 2, 2048, 1);
    REQUIRE(fam.complete);
    const std::int32_t h = fam.n + 1;
    double min_pair = 1e300;
    for (std::size_t i = 0; i < fam.members.size(); ++i) {
        for (std::size_t j = i + 1; j < fam.members.size(); ++j) {
            min_pair = std::min(
                min_pair, orbit_bowen(sys, *d, fam.members[i], fam.members[j], h));
        }
    }
    CHECK(min_pair == family_min_pairwise_bowen(sys, 2));
    CHECK(min_pair > fam.eps);  // the family is genuinely eps-separated
}

TEST_CASE("materialize_family fails loudly past the word capacity") {
    const auto sys = make_tower_psi(1, 3.0);
    // k + slots*n = 8 + 64 > 64
    CHECK_THROWS_AS((void)materialize_family(sys, 8, 8, 16, 1), depth_error);
}

TEST_CASE("capped families keep the base word and its single flips") {
    const auto sys = make_tower_psi(1, 3.0);
    const auto full = materialize_family(sys, 3, 3, 1u << 9, 7);
    REQUIRE(full.complete);
    const auto capped = materialize_family(sys, 3, 3, 64, 7);
    CHECK_FALSE(capped.complete);
    CHECK(capped.members.size() == 64);
    CHECK(capped.size == big_count(1) << 9);
    // member 0 is the base word; the next `slots` members are its single flips
    const auto base = capped.members[0].bits;
    for (std::int32_t p = 0; p < capped.slots; ++p) {
        const auto flip = capped.members[static_cast<std::size_t>(p) + 1].bits;
        const std::uint64_t diff = base ^ flip;
        CHECK((diff & (diff - 1)) == 0);  // exactly one bit differs
        CHECK(diff != 0);
    }
    std::set<std::uint64_t> seen;
    for (const auto& m : capped.members) seen.insert(m.bits);
    CHECK(seen.size() == capped.members.size());
}
