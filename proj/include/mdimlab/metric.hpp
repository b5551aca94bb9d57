#pragma once
// ============================================================================
// metric: composable metric descriptions evaluated on points
//
// Leaves:
//   euclid1d          |x - y| on interval points
//   cantor_alpha      d_alpha(x,y) = sum_n alpha^-n |x_n - y_n| on words
// Wrappers:
//   seq_weighted      sum_j 2^-j d(x_j, y_j) over a finite window
//   snowflake         d^a, a in (0,1]
//   trunc_snowflake   d when d >= eps, else eps^(1-a) d^a  (a in (0,1))
//   gauge_metric      g(d) for an admissible gauge g
//   pullback          d(h(x), h(y)) for a structure map h
//   product_max       max(d_left, d_right) on pairs
//
// All wrappers are monotone transforms of their inner distance except
// product/seq, which combine components; monotonicity is what lets orbit
// code compute inner Bowen maxima first and transform once.
// ============================================================================

#include <memory>
#include <variant>
#include <vector>

#include "mdimlab/gauge.hpp"
#include "mdimlab/point.hpp"

namespace mdim {

struct metric_spec;
using metric_ptr = std::shared_ptr<const metric_spec>;

// structure maps for pullbacks
struct homeo_block_strip {  // word -> word: drop the leading k coordinates
    std::int32_t k = 1;
};
struct homeo_affine {  // [a,b] -> [0,1]
    double a = 0.0;
    double b = 1.0;
};
using homeo = std::variant<homeo_block_strip, homeo_affine>;

struct m_euclid1d {};
struct m_cantor_alpha {
    double alpha = 3.0;
};
struct m_seq_weighted {
    metric_ptr inner;
};
struct m_snowflake {
    metric_ptr inner;
    double a = 1.0;
};
struct m_trunc_snowflake {
    metric_ptr inner;
    double a = 0.5;
    double eps = 0.0;
};
struct m_gauge {
    metric_ptr inner;
    gauge_spec g;
};
struct m_pullback {
    metric_ptr inner;
    homeo h;
};
struct m_product_max {
    metric_ptr left;
    metric_ptr right;
};

struct metric_spec {
    std::variant<m_euclid1d, m_cantor_alpha, m_seq_weighted, m_snowflake,
                 m_trunc_snowflake, m_gauge, m_pullback, m_product_max>
        node;
};

// checked builders -------------------------------------------------------------

metric_ptr metric_euclid1d();
metric_ptr metric_cantor_alpha(double alpha);
metric_ptr metric_seq_weighted(metric_ptr inner);
metric_ptr metric_snowflake(metric_ptr inner, double a);
metric_ptr metric_trunc_snowflake(metric_ptr inner, double a, double eps);
metric_ptr metric_gauge(metric_ptr inner, gauge_spec g);
metric_ptr metric_pullback(metric_ptr inner, homeo h);
metric_ptr metric_product_max(metric_ptr left, metric_ptr right);

// evaluation -------------------------------------------------------------------

// per-coordinate weights of the weighted symbol metric: w[i] = 2 alpha^-(i+1)
std::vector<double> cantor_weight_table(double alpha);

// distance between two points; throws validation_error on a point/metric
// kind mismatch
double eval_metric(const metric_spec& m, const point& x, const point& y);

point apply_homeo(const homeo& h, const point& x);

// max over the sample pairs of |d1(x,y) - d2(x,y)| (uniform distance between
// two metrics, estimated on the supplied sample; all unordered pairs)
double sup_metric_distance(const metric_spec& d1, const metric_spec& d2,
                           const std::vector<point>& sample);

// diameter of a finite set under m
double set_diameter(const metric_spec& m, const std::vector<point>& pts);

}  // namespace mdim
