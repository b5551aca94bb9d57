#pragma once
// ============================================================================
// interval: block-tower maps on [0,1]
//
// Base map: the folded tent g(x) = |1 - |3x - 1||, slopes +/-3, fixing 0, 1.
// A tower partitions [0,1] into blocks and runs an accelerated copy of g
// inside each block B_n (conjugated by the affine map onto [0,1], iterated
// s*n times), so deeper blocks carry faster dynamics at smaller scales.
//
//   phi_sr:    a_n = 1 - 3^-(r n); block n = [a_{n-1}, a_n]; rate target s/(r+s)
//   psi_s:     b_n = sum_{i<=n} 6/(pi^2 i^2); rate target 1
//   varphi_s:  J_n = [2^(-n^n), 2^(-n^n+1)] (disjoint, descending); target 0
//
// Points outside every block (gap regions, unresolved tails) are fixed.
// Block boundaries are fixed by every conjugated iterate, so the 1e-15
// boundary tie-break (assign to the LEFT block) never changes orbit values.
// ============================================================================

#include <cstdint>
#include <vector>

#include "mdimlab/common.hpp"

namespace mdim {

double tent(double x);
double tent_n(double x, std::int64_t m);

struct tower_block_t {
    double lo = 0;
    double hi = 1;
    std::int32_t n = 1;  // block index; iterate count inside is s*n
};

struct interval_tower {
    enum class kind { phi_sr, psi_s, varphi_s };

    kind k = kind::phi_sr;
    std::int32_t s = 1;
    std::int32_t r = 1;  // phi_sr only
    std::vector<tower_block_t> blocks;  // sorted by lo
};

interval_tower make_phi_sr(std::int32_t s, std::int32_t r);
interval_tower make_psi_s(std::int32_t s);
interval_tower make_varphi_s(std::int32_t s);

// closed-form target rate of the tower (s/(r+s), 1, 0)
double tower_target(const interval_tower& t);

// index into t.blocks for the block containing x, or -1 for gap/tail points;
// points within 1e-15 of a shared boundary go to the LEFT block
std::int32_t tower_block_index(const interval_tower& t, double x);

// one application of the tower map (identity off the blocks)
double apply_tower(const interval_tower& t, double x);

// uniform inclusive grid 0, 1/(count-1), ..., 1
std::vector<double> grid_sample(std::size_t count);

// resolution-matched sample for tower estimates: per-block midpoint grids
// sized to the block's separated-orbit capacity at scale eps_min over the
// horizon (expansion per step caps at the block's eps_min cell count, so a
// uniform grid starves exactly the blocks that dominate the counts).  Block
// sizes are clamped to [2, block_cap]; blocks narrower than eps_min/5 share
// one eps_min-ball with the rest of the tail, so the first such block gets a
// token pair and deeper blocks are dropped.
std::vector<double> tower_adaptive_sample(const interval_tower& t, double eps_min,
                                          std::int32_t horizon, std::size_t block_cap);

// geometric scale ladder for interval estimates: eps_q = 3^-q
std::vector<double> tower_eps_ladder(std::int32_t q_min, std::int32_t q_max);

// column-major orbit table: out[m * points.size() + i] = T^m(points[i]),
// m in [0, horizon)
std::vector<double> tower_orbit_columns(const interval_tower& t,
                                        const std::vector<double>& points,
                                        std::int32_t horizon);

}  // namespace mdim
