#pragma once
// ============================================================================
// counting: separated / spanning / cover counts over finite samples
//
// All counting ops consume a pair_table: batched access to Bowen distances
// d_h(x_i, x_j) = max over iterates m < h of d(f^m x_i, f^m x_j). Backends
// precompute orbits once and run the batch kernels per row; monotone metric
// wrappers (snowflake, truncated snowflake, gauge) commute with the Bowen
// max, so they are applied once per pair after the max.
//
// Conventions (ties are conservative):
//   separated: d_h > eps strictly        spanning/cover: d_h < eps strictly
// Greedy results are one-sided certificates: any separated family lower
// bounds the max count, any spanning set / cover upper bounds the min count.
// ============================================================================

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "mdimlab/cantor.hpp"
#include "mdimlab/interval.hpp"
#include "mdimlab/metric.hpp"

namespace mdim {

// ----------------------------------------------------------------------------
// monotone transform chains
// ----------------------------------------------------------------------------

struct dist_transform {
    enum class kind { snowflake, trunc_snowflake, gauge };
    kind k = kind::snowflake;
    double a = 1.0;
    double eps = 0.0;   // trunc_snowflake threshold
    gauge_spec g;       // gauge kind only
};

double apply_transform_chain(const std::vector<dist_transform>& chain, double d);

// Peels monotone wrappers off a metric, outermost last in the returned chain;
// sets leaf to the innermost spec. Throws if a non-monotone node (sequence,
// product, pullback) is encountered.
std::vector<dist_transform> unwrap_monotone(const metric_spec& m,
                                            const metric_spec** leaf);

// ----------------------------------------------------------------------------
// pair tables
// ----------------------------------------------------------------------------

class pair_table {
  public:
    virtual ~pair_table() = default;
    virtual std::size_t count() const = 0;
    virtual std::int32_t max_horizon() const = 0;
    // fills out[0..count) with d_h(x_i, x_*) for h <= max_horizon
    virtual void row(std::size_t i, std::int32_t h, double* out) const = 0;
    double at(std::size_t i, std::size_t j, std::int32_t h) const;
};

using pair_table_ptr = std::shared_ptr<const pair_table>;

// words + weighted symbol metric (leaf must be the alpha metric; outer
// monotone wrappers allowed); stride p > 1 tables the p-th power map
pair_table_ptr make_cantor_table(const cantor_system& sys, const metric_spec& m,
                                 const std::vector<cantor_point>& pts,
                                 std::int32_t horizon_max, std::int32_t stride = 1);

// interval orbits + |x-y| leaf with monotone wrappers
pair_table_ptr make_interval_table(const interval_tower& t, const metric_spec& m,
                                   const std::vector<double>& pts,
                                   std::int32_t horizon_max, std::int32_t stride = 1);

// componentwise pairs (x_i, y_i) with the max metric
pair_table_ptr make_product_table(pair_table_ptr left, pair_table_ptr right);

// fully materialized symmetric matrix (tests, oracles); horizon ignored
pair_table_ptr make_matrix_table(std::vector<std::vector<double>> d);

// ----------------------------------------------------------------------------
// greedy certificates
// ----------------------------------------------------------------------------

struct greedy_set {
    std::vector<std::uint32_t> chosen;  // indices in input order (first fit)
};

// first-fit maximal eps-separated subfamily (size lower-bounds max separated)
greedy_set greedy_separated(const pair_table& t, std::int32_t h, double eps);

// first-fit spanning centers (size upper-bounds min spanning)
greedy_set greedy_spanning(const pair_table& t, std::int32_t h, double eps);

struct cover_ball {
    std::uint32_t center = 0;
    std::vector<std::uint32_t> members;
    double diam = 0;  // measured max pairwise distance among members
};
struct ball_cover_result {
    std::vector<cover_ball> balls;
    double radius = 0;  // the radius actually used
};

// greedy cover by balls of radius eps/2 (shrunk deterministically if a
// measured diameter ties eps); every sample point lands in exactly one ball
ball_cover_result greedy_ball_cover(const pair_table& t, std::int32_t h, double eps);

// exact maximum separated subset via branch and bound; count() must be <= 32
std::size_t exact_max_separated(const pair_table& t, std::int32_t h, double eps);

// ----------------------------------------------------------------------------
// Hausdorff-style sums and count tables
// ----------------------------------------------------------------------------

// sum of diam^s with the 0^0 = 1 convention (diams are nonempty-set diameters)
double hausdorff_sum(const std::vector<double>& diams, double s);

struct count_row {
    double eps = 0;
    std::int32_t n = 0;           // horizon
    double log_sep_lower = 0;     // natural logs
    double log_span_upper = 0;
    double log_cov_upper = 0;
    std::string method;           // formula | greedy | oracle
};

struct count_table {
    std::vector<count_row> rows;
};

// closed-form tower / full-shift counts on the pinned ladder
count_table exact_count_table(const cantor_system& sys, std::int32_t k_min,
                              std::int32_t k_max, std::int32_t n1, std::int32_t n2);

// sample-based counts: one row per (eps, horizon)
count_table greedy_count_table(const pair_table& t, const std::vector<double>& ladder,
                               std::int32_t n1, std::int32_t n2);

// tower counts summed over invariant blocks (plus one group for gap points):
// block orbits never mix, so separated / spanning / cover counts add, and the
// quadratic greedy cost applies per block instead of to the whole sample.
// Pair with tower_adaptive_sample so the dominant deep blocks stay resolved.
count_table tower_count_table(const interval_tower& t, const metric_spec& m,
                              const std::vector<double>& pts,
                              const std::vector<double>& ladder, std::int32_t n1,
                              std::int32_t n2, std::int32_t stride = 1);

}  // namespace mdim
