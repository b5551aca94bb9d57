#pragma once
// ============================================================================
// cantor: two-symbol sequence space dynamics
//
// The base space is {0,2}^N with the weighted symbol metric
// d_alpha(x,y) = sum_n alpha^-n |x_n - y_n|. Block k consists of words
// starting with k-1 zeros followed by a 2. Systems:
//   full_shift        sigma (drop the first coordinate)
//   tower_psi (j)     on block k: strip j*k coordinates after the prefix
//   tower_phi_square  on block k: strip k*k coordinates after the prefix
// The all-zero word is fixed by every system.
//
// Exact combinatorics: with the pinned ladders, separation lower bounds and
// cover upper bounds are closed-form; counts are exact big integers.
// ============================================================================

#include <cstdint>
#include <vector>

#include "mdimlab/common.hpp"
#include "mdimlab/point.hpp"

namespace mdim {

struct cantor_system {
    enum class kind { full_shift, tower_psi, tower_phi_square };

    kind k = kind::full_shift;
    std::int32_t j = 1;   // tower_psi block-stripping index (>= 1)
    double alpha = 3.0;   // metric base (> 1)
};

cantor_system make_full_shift(double alpha);
cantor_system make_tower_psi(std::int32_t j, double alpha);
cantor_system make_tower_phi_square(double alpha);

// exact diameter of a depth-m cylinder: sum_{n>m} 2 alpha^-n, attained by the
// all-0 vs all-2 tails
inline double cylinder_diam(double alpha, std::int32_t m) {
    return 2.0 * std::pow(alpha, -static_cast<double>(m)) / (alpha - 1.0);
}

// one application of the system map; throws depth_error when the word is too
// shallow to determine the image prefix
cantor_point apply_map(const cantor_system& sys, const cantor_point& x);

// word after m applications
cantor_point apply_map_n(const cantor_system& sys, cantor_point x, std::int32_t m);

// coordinates a word must carry so that m applications stay representable
// (block-k words; the all-zero word needs none)
std::int32_t orbit_depth_needed(const cantor_system& sys, std::int32_t block,
                                std::int32_t m);

// ----------------------------------------------------------------------------
// scale ladders and exact counts (ladder index k >= 1)
// ----------------------------------------------------------------------------

// eps_k: tower_psi alpha^-(k(j+1)); tower_phi_square alpha^-(k^2+k);
// full_shift the depth-k cylinder diameter 2 alpha^-k/(alpha-1)
double eps_rung(const cantor_system& sys, std::int32_t k);
std::vector<double> eps_ladder(const cantor_system& sys, std::int32_t k_min,
                               std::int32_t k_max);

// number of symbol slots a block-k family varies per horizon step
// (j*k for tower_psi, k*k for tower_phi_square)
std::int32_t strip_per_step(const cantor_system& sys, std::int32_t k);

// exact separation lower bound at horizon h (iterates 0..h-1):
//   towers: 2^{slots*(h-1)} realized inside block k
//   full shift: 2^{h+k-1}, exact (needs alpha > 2 so single-coordinate
//   differences already exceed eps_k)
big_count exact_sep_lower(const cantor_system& sys, std::int32_t h, std::int32_t k);

// exact cover upper bound at horizon h:
//   towers: k * 2^{h*slots} + 2; full shift: 2^{h+k}
big_count exact_cov_upper(const cantor_system& sys, std::int32_t h, std::int32_t k);

// full-shift exact separation count for a general alphabet size (oracle for
// tests): alphabet^{h+k-1}
big_count full_shift_sep_exact(std::int32_t alphabet, std::int32_t h, std::int32_t k);

// ----------------------------------------------------------------------------
// separated families
// ----------------------------------------------------------------------------

// The block-k family certifying exact_sep_lower at horizon n+1: words with
// the block prefix, free symbols in the next slots*n coordinates, zero tails.
struct cylinder_family {
    std::int32_t k = 1;          // block index
    std::int32_t n = 1;          // free steps (family certifies horizon n+1)
    std::int32_t slots = 1;      // free symbol positions = strip_per_step * n
    double eps = 0;              // the ladder rung the family is separated at
    big_count size;              // full family cardinality 2^slots
    std::vector<cantor_point> members;  // materialized members (zero tails)
    bool complete = false;       // members lists the whole family
};

// Materializes the family; full enumeration when 2^slots <= cap, otherwise a
// deterministic subset (base word, every single-position flip, then seeded
// fills up to cap). Throws depth_error when k + slots*n exceeds the packed
// word capacity.
cylinder_family materialize_family(const cantor_system& sys, std::int32_t n,
                                   std::int32_t k, std::size_t cap,
                                   std::uint64_t seed);

// exact minimum pairwise Bowen distance of the full family at horizon n+1:
// 2 alpha^-(k + slots_per_step), attained by single-position pairs at the
// deepest residual slot; positivity of every term rules out cancellation
double family_min_pairwise_bowen(const cantor_system& sys, std::int32_t k);

}  // namespace mdim
