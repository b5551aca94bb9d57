#include "mdimlab/metric.hpp"

#include <algorithm>
#include <cmath>

#include "mdimlab/kernels.hpp"

namespace mdim {

// ============================================================================
// builders
// ============================================================================

metric_ptr metric_euclid1d() {
    return std::make_shared<const metric_spec>(metric_spec{m_euclid1d{}});
}

metric_ptr metric_cantor_alpha(double alpha) {
    if (!(alpha > 1.0) || !std::isfinite(alpha)) {
        throw validation_error("weighted symbol metric needs alpha > 1");
    }
    return std::make_shared<const metric_spec>(metric_spec{m_cantor_alpha{alpha}});
}

metric_ptr metric_seq_weighted(metric_ptr inner) {
    if (!inner) throw validation_error("seq_weighted needs an inner metric");
    return std::make_shared<const metric_spec>(
        metric_spec{m_seq_weighted{std::move(inner)}});
}

metric_ptr metric_snowflake(metric_ptr inner, double a) {
    if (!inner) throw validation_error("snowflake needs an inner metric");
    if (!(a > 0.0 && a <= 1.0)) {
        throw validation_error("snowflake exponent must lie in (0,1]");
    }
    return std::make_shared<const metric_spec>(
        metric_spec{m_snowflake{std::move(inner), a}});
}

metric_ptr metric_trunc_snowflake(metric_ptr inner, double a, double eps) {
    if (!inner) throw validation_error("trunc_snowflake needs an inner metric");
    if (!(a > 0.0 && a < 1.0)) {
        throw validation_error("trunc_snowflake exponent must lie in (0,1)");
    }
    if (!(eps > 0.0)) {
        throw validation_error("trunc_snowflake threshold must be positive");
    }
    return std::make_shared<const metric_spec>(
        metric_spec{m_trunc_snowflake{std::move(inner), a, eps}});
}

metric_ptr metric_gauge(metric_ptr inner, gauge_spec g) {
    if (!inner) throw validation_error("gauge metric needs an inner metric");
    return std::make_shared<const metric_spec>(
        metric_spec{m_gauge{std::move(inner), std::move(g)}});
}

metric_ptr metric_pullback(metric_ptr inner, homeo h) {
    if (!inner) throw validation_error("pullback needs an inner metric");
    return std::make_shared<const metric_spec>(
        metric_spec{m_pullback{std::move(inner), h}});
}

metric_ptr metric_product_max(metric_ptr left, metric_ptr right) {
    if (!left || !right) throw validation_error("product needs two factor metrics");
    return std::make_shared<const metric_spec>(
        metric_spec{m_product_max{std::move(left), std::move(right)}});
}

// ============================================================================
// evaluation
// ============================================================================

std::vector<double> cantor_weight_table(double alpha) {
    // w[i] = |0-2| * alpha^-(i+1): the coordinate-(i+1) contribution
    std::vector<double> w(static_cast<std::size_t>(max_word_depth));
    for (std::int32_t i = 0; i < max_word_depth; ++i) {
        w[static_cast<std::size_t>(i)] =
            2.0 * std::pow(alpha, -static_cast<double>(i + 1));
    }
    return w;
}

point apply_homeo(const homeo& h, const point& x) {
    if (const auto* strip = std::get_if<homeo_block_strip>(&h)) {
        const auto* cp = std::get_if<cantor_point>(&x.v);
        if (cp == nullptr) {
            throw validation_error("block strip map needs a word point");
        }
        if (strip->k < 0 || cp->depth < strip->k) {
            throw depth_error("word too shallow for block strip map");
        }
        cantor_point out;
        out.bits = cp->bits >> strip->k;
        out.depth = cp->depth - strip->k;
        return point{out};
    }
    const auto& aff = std::get<homeo_affine>(h);
    const auto* ip = std::get_if<interval_point>(&x.v);
    if (ip == nullptr) throw validation_error("affine map needs an interval point");
    if (!(aff.b > aff.a)) throw validation_error("affine map needs b > a");
    double u = (ip->x - aff.a) / (aff.b - aff.a);
    u = std::min(1.0, std::max(0.0, u));
    return point{interval_point{u}};
}

namespace {

double eval_cantor(double alpha, const cantor_point& x, const cantor_point& y) {
    // words carry zero tails beyond their depth, so the pair's effective
    // depth is the larger of the two
    static thread_local double cached_alpha = 0.0;
    static thread_local std::vector<double> w;
    if (cached_alpha != alpha) {
        w = cantor_weight_table(alpha);
        cached_alpha = alpha;
    }
    const std::uint64_t xw = x.bits ^ y.bits;
    const std::int32_t d = std::max(x.depth, y.depth);
    double out = 0.0;
    kern::xor_weight_sum(&xw, &d, 1, w.data(), &out);
    return out;
}

}  // namespace

double eval_metric(const metric_spec& m, const point& x, const point& y) {
    struct visitor {
        const point& x;
        const point& y;

        double operator()(const m_euclid1d&) const {
            const auto* a = std::get_if<interval_point>(&x.v);
            const auto* b = std::get_if<interval_point>(&y.v);
            if (a == nullptr || b == nullptr) {
                throw validation_error("euclid1d metric needs interval points");
            }
            return std::fabs(a->x - b->x);
        }
        double operator()(const m_cantor_alpha& m) const {
            const auto* a = std::get_if<cantor_point>(&x.v);
            const auto* b = std::get_if<cantor_point>(&y.v);
            if (a == nullptr || b == nullptr) {
                throw validation_error("weighted symbol metric needs word points");
            }
            return eval_cantor(m.alpha, *a, *b);
        }
        double operator()(const m_seq_weighted& m) const {
            const auto* a = std::get_if<seq_point>(&x.v);
            const auto* b = std::get_if<seq_point>(&y.v);
            if (a == nullptr || b == nullptr) {
                throw validation_error("seq_weighted metric needs sequence points");
            }
            if (a->entries.size() != b->entries.size()) {
                throw validation_error("seq_weighted windows must have equal length");
            }
            kahan_acc acc;
            double wgt = 1.0;
            for (std::size_t j = 0; j < a->entries.size(); ++j) {
                acc.add(wgt * eval_metric(*m.inner, a->entries[j], b->entries[j]));
                wgt *= 0.5;
            }
            return acc.sum;
        }
        double operator()(const m_snowflake& m) const {
            return std::pow(eval_metric(*m.inner, x, y), m.a);
        }
        double operator()(const m_trunc_snowflake& m) const {
            const double d = eval_metric(*m.inner, x, y);
            if (d >= m.eps) return d;
            return std::pow(m.eps, 1.0 - m.a) * std::pow(d, m.a);
        }
        double operator()(const m_gauge& m) const {
            return gauge_eval(m.g, eval_metric(*m.inner, x, y));
        }
        double operator()(const m_pullback& m) const {
            return eval_metric(*m.inner, apply_homeo(m.h, x), apply_homeo(m.h, y));
        }
        double operator()(const m_product_max& m) const {
            const auto* a = std::get_if<seq_point>(&x.v);
            const auto* b = std::get_if<seq_point>(&y.v);
            if (a == nullptr || b == nullptr || a->entries.size() != 2 ||
                b->entries.size() != 2) {
                throw validation_error("product metric needs paired points");
            }
            return std::max(eval_metric(*m.left, a->entries[0], b->entries[0]),
                            eval_metric(*m.right, a->entries[1], b->entries[1]));
        }
    };
    return std::visit(visitor{x, y}, m.node);
}

double sup_metric_distance(const metric_spec& d1, const metric_spec& d2,
                           const std::vector<point>& sample) {
    double worst = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        for (std::size_t j = i + 1; j < sample.size(); ++j) {
            const double a = eval_metric(d1, sample[i], sample[j]);
            const double b = eval_metric(d2, sample[i], sample[j]);
            worst = std::max(worst, std::fabs(a - b));
        }
    }
    return worst;
}

double set_diameter(const metric_spec& m, const std::vector<point>& pts) {
    double diam = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            diam = std::max(diam, eval_metric(m, pts[i], pts[j]));
        }
    }
    return diam;
}

}  // namespace mdim
