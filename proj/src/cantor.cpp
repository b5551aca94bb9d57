#include "mdimlab/cantor.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace mdim {

cantor_system make_full_shift(double alpha) {
    if (!(alpha > 1.0)) throw validation_error("alpha must exceed 1");
    return cantor_system{cantor_system::kind::full_shift, 1, alpha};
}

cantor_system make_tower_psi(std::int32_t j, double alpha) {
    if (j < 1) throw validation_error("tower index j must be >= 1");
    if (!(alpha > 1.0)) throw validation_error("alpha must exceed 1");
    return cantor_system{cantor_system::kind::tower_psi, j, alpha};
}

cantor_system make_tower_phi_square(double alpha) {
    if (!(alpha > 1.0)) throw validation_error("alpha must exceed 1");
    return cantor_system{cantor_system::kind::tower_phi_square, 1, alpha};
}

std::int32_t strip_per_step(const cantor_system& sys, std::int32_t k) {
    if (k < 1) throw validation_error("block index must be >= 1");
    switch (sys.k) {
        case cantor_system::kind::tower_psi: return sys.j * k;
        case cantor_system::kind::tower_phi_square: return k * k;
        case cantor_system::kind::full_shift: return 1;
    }
    throw validation_error("unknown system kind");
}

cantor_point apply_map(const cantor_system& sys, const cantor_point& x) {
    if (x.bits == 0) return x;  // the all-zero word is fixed by every system

    if (sys.k == cantor_system::kind::full_shift) {
        if (x.depth < 1) throw depth_error("word too shallow to shift");
        cantor_point out;
        out.bits = x.bits >> 1;
        out.depth = x.depth - 1;
        return out;
    }

    const std::int32_t k = cantor_block(x);
    const std::int32_t strip = strip_per_step(sys, k);
    if (x.depth < k + strip) {
        throw depth_error("word too shallow for one tower step (block " +
                          std::to_string(k) + " strips " + std::to_string(strip) +
                          " coordinates)");
    }
    // keep the block prefix, drop the next `strip` coordinates
    const std::uint64_t prefix = x.bits & ((std::uint64_t{1} << k) - 1);
    const std::uint64_t tail = x.bits >> (k + strip);
    cantor_point out;
    out.bits = prefix | (tail << k);
    out.depth = x.depth - strip;
    return out;
}

cantor_point apply_map_n(const cantor_system& sys, cantor_point x, std::int32_t m) {
    if (m < 0) throw validation_error("iterate count must be >= 0");
    for (std::int32_t i = 0; i < m; ++i) x = apply_map(sys, x);
    return x;
}

std::int32_t orbit_depth_needed(const cantor_system& sys, std::int32_t block,
                                std::int32_t m) {
    if (block == 0) return 0;
    return block + strip_per_step(sys, block) * m;
}

// ============================================================================
// ladders and exact counts
// ============================================================================

double eps_rung(const cantor_system& sys, std::int32_t k) {
    if (k < 1) throw validation_error("ladder rung index must be >= 1");
    switch (sys.k) {
        case cantor_system::kind::tower_psi:
            return std::pow(sys.alpha, -static_cast<double>(k) * (sys.j + 1));
        case cantor_system::kind::tower_phi_square:
            return std::pow(sys.alpha, -static_cast<double>(k) * (k + 1));
        case cantor_system::kind::full_shift:
            return cylinder_diam(sys.alpha, k);
    }
    throw validation_error("unknown system kind");
}

std::vector<double> eps_ladder(const cantor_system& sys, std::int32_t k_min,
                               std::int32_t k_max) {
    if (k_min < 1 || k_max < k_min) {
        throw validation_error("ladder needs 1 <= k_min <= k_max");
    }
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(k_max - k_min + 1));
    for (std::int32_t k = k_min; k <= k_max; ++k) out.push_back(eps_rung(sys, k));
    return out;
}

big_count exact_sep_lower(const cantor_system& sys, std::int32_t h, std::int32_t k) {
    if (h < 1) throw validation_error("horizon must be >= 1");
    if (k < 1) throw validation_error("ladder rung index must be >= 1");
    if (sys.k == cantor_system::kind::full_shift) {
        if (!(sys.alpha > 2.0)) {
            throw validation_error(
                "full-shift exact counts need alpha > 2 (single-coordinate "
                "differences must dominate the cylinder-diameter ladder)");
        }
        return pow2_big(static_cast<std::uint64_t>(h + k - 1));
    }
    const std::int32_t slots = strip_per_step(sys, k);
    return pow2_big(static_cast<std::uint64_t>(slots) *
                    static_cast<std::uint64_t>(h - 1));
}

big_count exact_cov_upper(const cantor_system& sys, std::int32_t h, std::int32_t k) {
    if (h < 1) throw validation_error("horizon must be >= 1");
    if (k < 1) throw validation_error("ladder rung index must be >= 1");
    if (sys.k == cantor_system::kind::full_shift) {
        return pow2_big(static_cast<std::uint64_t>(h + k));
    }
    // block strata: blocks 1..k-1 are eps_k-small after bounded time, block k
    // contributes k * 2^{h*slots} refined cylinders, deeper blocks plus the
    // fixed point collapse into two more sets
    const std::int32_t slots = strip_per_step(sys, k);
    big_count main = pow2_big(static_cast<std::uint64_t>(slots) *
                              static_cast<std::uint64_t>(h));
    return big_count(k) * main + 2;
}

big_count full_shift_sep_exact(std::int32_t alphabet, std::int32_t h,
                               std::int32_t k) {
    if (alphabet < 2) throw validation_error("alphabet size must be >= 2");
    if (h < 1 || k < 1) throw validation_error("horizon and rung must be >= 1");
    return pow_big(static_cast<std::uint64_t>(alphabet),
                   static_cast<std::uint64_t>(h + k - 1));
}

// ============================================================================
// separated families
// ============================================================================

double family_min_pairwise_bowen(const cantor_system& sys, std::int32_t k) {
    const std::int32_t slots = strip_per_step(sys, k);
    return 2.0 * std::pow(sys.alpha, -static_cast<double>(k + slots));
}

cylinder_family materialize_family(const cantor_system& sys, std::int32_t n,
                                   std::int32_t k, std::size_t cap,
                                   std::uint64_t seed) {
    if (sys.k == cantor_system::kind::full_shift) {
        throw validation_error("separated families are defined for the towers");
    }
    if (n < 1) throw validation_error("family needs n >= 1 free steps");
    const std::int32_t per_step = strip_per_step(sys, k);
    const std::int64_t slots64 =
        static_cast<std::int64_t>(per_step) * static_cast<std::int64_t>(n);
    if (k + slots64 > max_word_depth) {
        throw depth_error("family words need depth " + std::to_string(k + slots64) +
                          ", beyond the packed capacity (64)");
    }
    const std::int32_t slots = static_cast<std::int32_t>(slots64);

    cylinder_family fam;
    fam.k = k;
    fam.n = n;
    fam.slots = slots;
    fam.eps = eps_rung(sys, k);
    fam.size = pow2_big(static_cast<std::uint64_t>(slots));

    const std::uint64_t prefix = std::uint64_t{1} << (k - 1);  // block-k marker
    const std::int32_t depth = k + slots;
    auto member = [&](std::uint64_t choice) {
        cantor_point p;
        p.bits = prefix | (choice << k);
        p.depth = depth;
        return p;
    };

    const bool enumerable = slots < 63 && fam.size <= big_count(cap);
    if (enumerable) {
        const std::uint64_t total = std::uint64_t{1} << slots;
        fam.members.reserve(static_cast<std::size_t>(total));
        for (std::uint64_t c = 0; c < total; ++c) fam.members.push_back(member(c));
        fam.complete = true;
        return fam;
    }

    // deterministic subset: base, all single-position flips, seeded fills
    fam.complete = false;
    fam.members.push_back(member(0));
    for (std::int32_t s = 0; s < slots && fam.members.size() < cap; ++s) {
        fam.members.push_back(member(std::uint64_t{1} << s));
    }
    std::mt19937_64 rng(seed);
    const std::uint64_t mask =
        slots >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << slots) - 1);
    std::vector<std::uint64_t> seen;
    seen.reserve(fam.members.size());
    for (const auto& m : fam.members) seen.push_back(m.bits);
    while (fam.members.size() < cap) {
        const std::uint64_t c = rng() & mask;
        const std::uint64_t bits = prefix | (c << k);
        if (std::find(seen.begin(), seen.end(), bits) != seen.end()) continue;
        seen.push_back(bits);
        fam.members.push_back(member(c));
    }
    return fam;
}

}  // namespace mdim
