#include "mdimlab/counting.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "mdimlab/kernels.hpp"

namespace mdim {

// ============================================================================
// transform chains
// ============================================================================

double apply_transform_chain(const std::vector<dist_transform>& chain, double d) {
    for (const auto& tr : chain) {
        switch (tr.k) {
            case dist_transform::kind::snowflake:
                d = std::pow(d, tr.a);
                break;
            case dist_transform::kind::trunc_snowflake:
                if (d < tr.eps) d = std::pow(tr.eps, 1.0 - tr.a) * std::pow(d, tr.a);
                break;
            case dist_transform::kind::gauge:
                d = (d == 0.0) ? 0.0 : gauge_eval(tr.g, d);
                break;
        }
    }
    return d;
}

std::vector<dist_transform> unwrap_monotone(const metric_spec& m,
                                            const metric_spec** leaf) {
    std::vector<dist_transform> chain;
    const metric_spec* cur = &m;
    for (;;) {
        if (const auto* sf = std::get_if<m_snowflake>(&cur->node)) {
            dist_transform tr;
            tr.k = dist_transform::kind::snowflake;
            tr.a = sf->a;
            chain.push_back(tr);
            cur = sf->inner.get();
            continue;
        }
        if (const auto* ts = std::get_if<m_trunc_snowflake>(&cur->node)) {
            dist_transform tr;
            tr.k = dist_transform::kind::trunc_snowflake;
            tr.a = ts->a;
            tr.eps = ts->eps;
            chain.push_back(tr);
            cur = ts->inner.get();
            continue;
        }
        if (const auto* gm = std::get_if<m_gauge>(&cur->node)) {
            dist_transform tr;
            tr.k = dist_transform::kind::gauge;
            tr.g = gm->g;
            chain.push_back(tr);
            cur = gm->inner.get();
            continue;
        }
        if (std::holds_alternative<m_seq_weighted>(cur->node) ||
            std::holds_alternative<m_product_max>(cur->node) ||
            std::holds_alternative<m_pullback>(cur->node)) {
            throw validation_error(
                "metric is not a monotone transform chain over a single leaf");
        }
        break;
    }
    std::reverse(chain.begin(), chain.end());  // innermost first
    *leaf = cur;
    return chain;
}

// ============================================================================
// pair table backends
// ============================================================================

double pair_table::at(std::size_t i, std::size_t j, std::int32_t h) const {
    std::vector<double> buf(count());
    row(i, h, buf.data());
    return buf[j];
}

namespace {

class cantor_table final : public pair_table {
  public:
    cantor_table(const cantor_system& sys, const metric_spec& m,
                 const std::vector<cantor_point>& pts, std::int32_t horizon_max,
                 std::int32_t stride) {
        if (horizon_max < 1) throw validation_error("horizon must be >= 1");
        if (stride < 1) throw validation_error("iterate stride must be >= 1");
        const metric_spec* leaf = nullptr;
        chain_ = unwrap_monotone(m, &leaf);
        const auto* ca = std::get_if<m_cantor_alpha>(&leaf->node);
        if (ca == nullptr) {
            throw validation_error("word pair table needs the weighted symbol "
                                   "metric at the leaf");
        }
        weights_ = cantor_weight_table(ca->alpha);
        n_ = pts.size();
        h_ = horizon_max;
        words_.resize(static_cast<std::size_t>(h_));
        depths_.resize(static_cast<std::size_t>(h_));
        std::vector<cantor_point> cur = pts;
        for (std::int32_t m_i = 0; m_i < h_; ++m_i) {
            auto& wrow = words_[static_cast<std::size_t>(m_i)];
            auto& drow = depths_[static_cast<std::size_t>(m_i)];
            wrow.resize(n_);
            drow.resize(n_);
            for (std::size_t i = 0; i < n_; ++i) {
                wrow[i] = cur[i].bits;
                drow[i] = cur[i].depth;
            }
            if (m_i + 1 < h_) {
                for (std::size_t i = 0; i < n_; ++i) {
                    cur[i] = apply_map_n(sys, cur[i], stride);
                }
            }
        }
    }

    std::size_t count() const override { return n_; }
    std::int32_t max_horizon() const override { return h_; }

    void row(std::size_t i, std::int32_t h, double* out) const override {
        if (h < 1 || h > h_) throw validation_error("row horizon out of range");
        thread_local std::vector<std::uint64_t> xors;
        thread_local std::vector<std::int32_t> dts;
        thread_local std::vector<double> dist;
        xors.resize(n_);
        dts.resize(n_);
        dist.resize(n_);
        for (std::size_t j = 0; j < n_; ++j) out[j] = 0.0;
        for (std::int32_t m_i = 0; m_i < h; ++m_i) {
            const auto& wrow = words_[static_cast<std::size_t>(m_i)];
            const auto& drow = depths_[static_cast<std::size_t>(m_i)];
            const std::uint64_t wi = wrow[i];
            const std::int32_t di = drow[i];
            for (std::size_t j = 0; j < n_; ++j) {
                xors[j] = wi ^ wrow[j];
                dts[j] = std::max(di, drow[j]);
            }
            kern::xor_weight_sum(xors.data(), dts.data(), n_, weights_.data(),
                                 dist.data());
            for (std::size_t j = 0; j < n_; ++j) out[j] = std::max(out[j], dist[j]);
        }
        if (!chain_.empty()) {
            for (std::size_t j = 0; j < n_; ++j) {
                out[j] = apply_transform_chain(chain_, out[j]);
            }
        }
    }

  private:
    std::size_t n_ = 0;
    std::int32_t h_ = 0;
    std::vector<std::vector<std::uint64_t>> words_;   // [iterate][point]
    std::vector<std::vector<std::int32_t>> depths_;
    std::vector<double> weights_;
    std::vector<dist_transform> chain_;
};

class interval_table final : public pair_table {
  public:
    interval_table(const interval_tower& t, const metric_spec& m,
                   const std::vector<double>& pts, std::int32_t horizon_max,
                   std::int32_t stride) {
        if (stride < 1) throw validation_error("iterate stride must be >= 1");
        const metric_spec* leaf = nullptr;
        chain_ = unwrap_monotone(m, &leaf);
        if (!std::holds_alternative<m_euclid1d>(leaf->node)) {
            throw validation_error("interval pair table needs |x-y| at the leaf");
        }
        n_ = pts.size();
        h_ = horizon_max;
        if (stride == 1) {
            orbit_ = tower_orbit_columns(t, pts, horizon_max);
        } else {
            // keep every stride-th iterate of the full orbit
            const auto full =
                tower_orbit_columns(t, pts, (horizon_max - 1) * stride + 1);
            orbit_.resize(static_cast<std::size_t>(horizon_max) * n_);
            for (std::int32_t m_i = 0; m_i < horizon_max; ++m_i) {
                const std::size_t src = static_cast<std::size_t>(m_i) *
                                        static_cast<std::size_t>(stride) * n_;
                const std::size_t dst = static_cast<std::size_t>(m_i) * n_;
                for (std::size_t i = 0; i < n_; ++i) orbit_[dst + i] = full[src + i];
            }
        }
    }

    std::size_t count() const override { return n_; }
    std::int32_t max_horizon() const override { return h_; }

    void row(std::size_t i, std::int32_t h, double* out) const override {
        if (h < 1 || h > h_) throw validation_error("row horizon out of range");
        thread_local std::vector<double> xs;
        xs.resize(static_cast<std::size_t>(h));
        for (std::int32_t m_i = 0; m_i < h; ++m_i) {
            xs[static_cast<std::size_t>(m_i)] =
                orbit_[static_cast<std::size_t>(m_i) * n_ + i];
        }
        kern::orbit_maxdiff(xs.data(), orbit_.data(), n_,
                            static_cast<std::size_t>(h), out);
        if (!chain_.empty()) {
            for (std::size_t j = 0; j < n_; ++j) {
                out[j] = apply_transform_chain(chain_, out[j]);
            }
        }
    }

  private:
    std::size_t n_ = 0;
    std::int32_t h_ = 0;
    std::vector<double> orbit_;  // column-major [iterate][point]
    std::vector<dist_transform> chain_;
};

class product_table final : public pair_table {
  public:
    product_table(pair_table_ptr l, pair_table_ptr r)
        : left_(std::move(l)), right_(std::move(r)) {
        if (!left_ || !right_) throw validation_error("product table needs two factors");
        if (left_->count() != right_->count()) {
            throw validation_error("product factors must pair the same sample size");
        }
    }

    std::size_t count() const override { return left_->count(); }
    std::int32_t max_horizon() const override {
        return std::min(left_->max_horizon(), right_->max_horizon());
    }

    void row(std::size_t i, std::int32_t h, double* out) const override {
        thread_local std::vector<double> buf;
        buf.resize(count());
        left_->row(i, h, out);
        right_->row(i, h, buf.data());
        for (std::size_t j = 0; j < count(); ++j) out[j] = std::max(out[j], buf[j]);
    }

  private:
    pair_table_ptr left_;
    pair_table_ptr right_;
};

class matrix_table final : public pair_table {
  public:
    explicit matrix_table(std::vector<std::vector<double>> d) : d_(std::move(d)) {
        for (const auto& r : d_) {
            if (r.size() != d_.size()) {
                throw validation_error("matrix table must be square");
            }
        }
    }
    std::size_t count() const override { return d_.size(); }
    std::int32_t max_horizon() const override { return 1; }
    void row(std::size_t i, std::int32_t, double* out) const override {
        for (std::size_t j = 0; j < d_.size(); ++j) out[j] = d_[i][j];
    }

  private:
    std::vector<std::vector<double>> d_;
};

}  // namespace

pair_table_ptr make_cantor_table(const cantor_system& sys, const metric_spec& m,
                                 const std::vector<cantor_point>& pts,
                                 std::int32_t horizon_max, std::int32_t stride) {
    return std::make_shared<cantor_table>(sys, m, pts, horizon_max, stride);
}

pair_table_ptr make_interval_table(const interval_tower& t, const metric_spec& m,
                                   const std::vector<double>& pts,
                                   std::int32_t horizon_max, std::int32_t stride) {
    return std::make_shared<interval_table>(t, m, pts, horizon_max, stride);
}

pair_table_ptr make_product_table(pair_table_ptr left, pair_table_ptr right) {
    return std::make_shared<product_table>(std::move(left), std::move(right));
}

pair_table_ptr make_matrix_table(std::vector<std::vector<double>> d) {
    return std::make_shared<matrix_table>(std::move(d));
}

// ============================================================================
// greedy certificates
// ============================================================================

greedy_set greedy_separated(const pair_table& t, std::int32_t h, double eps) {
    const std::size_t n = t.count();
    greedy_set out;
    std::vector<double> buf(n);
    for (std::size_t i = 0; i < n; ++i) {
        t.row(i, h, buf.data());
        bool ok = true;
        for (std::uint32_t s : out.chosen) {
            if (!(buf[s] > eps)) {  // ties are not separated
                ok = false;
                break;
            }
        }
        if (ok) out.chosen.push_back(static_cast<std::uint32_t>(i));
    }
    return out;
}

greedy_set greedy_spanning(const pair_table& t, std::int32_t h, double eps) {
    const std::size_t n = t.count();
    greedy_set out;
    std::vector<double> buf(n);
    std::vector<char> covered(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (covered[i]) continue;
        out.chosen.push_back(static_cast<std::uint32_t>(i));
        t.row(i, h, buf.data());
        for (std::size_t j = 0; j < n; ++j) {
            if (buf[j] < eps) covered[j] = 1;  // strict: ties stay uncovered
        }
    }
    return out;
}

ball_cover_result greedy_ball_cover(const pair_table& t, std::int32_t h, double eps) {
    const std::size_t n = t.count();
    std::vector<double> buf(n);
    double radius = eps / 2.0;
    for (int attempt = 0; attempt < 8; ++attempt) {
        ball_cover_result res;
        res.radius = radius;
        std::vector<char> assigned(n, 0);
        bool valid = true;
        for (std::size_t i = 0; i < n && valid; ++i) {
            if (assigned[i]) continue;
            cover_ball ball;
            ball.center = static_cast<std::uint32_t>(i);
            t.row(i, h, buf.data());
            std::vector<std::size_t> idx;
            for (std::size_t j = 0; j < n; ++j) {
                if (!assigned[j] && buf[j] <= radius) {
                    assigned[j] = 1;
                    idx.push_back(j);
                    ball.members.push_back(static_cast<std::uint32_t>(j));
                }
            }
            // measured diameter must be strictly below eps for the cover to
            // certify the scale
            double diam = 0.0;
            std::vector<double> mbuf(n);
            for (std::size_t a = 0; a < idx.size(); ++a) {
                t.row(idx[a], h, mbuf.data());
                for (std::size_t b = a + 1; b < idx.size(); ++b) {
                    diam = std::max(diam, mbuf[idx[b]]);
                }
            }
            ball.diam = diam;
            if (!(diam < eps)) valid = false;
            res.balls.push_back(std::move(ball));
        }
        if (valid) return res;
        radius *= 0.9;  // tie at the scale: shrink deterministically
    }
    throw validation_error("ball cover could not certify the scale (persistent ties)");
}

std::size_t exact_max_separated(const pair_table& t, std::int32_t h, double eps) {
    const std::size_t n = t.count();
    if (n > 32) {
        throw validation_error("exact separated search is limited to 32 points");
    }
    std::vector<std::uint32_t> adj(n, 0);
    std::vector<double> buf(n);
    for (std::size_t i = 0; i < n; ++i) {
        t.row(i, static_cast<std::int32_t>(h), buf.data());
        for (std::size_t j = 0; j < n; ++j) {
            if (j != i && buf[j] > eps) adj[i] |= (std::uint32_t{1} << j);
        }
    }
    // max clique over the "separated" graph, branch and bound on popcount
    std::size_t best = 0;
    auto rec = [&](auto&& self, std::uint32_t cand, std::size_t size) -> void {
        if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
        if (cand == 0) {
            best = std::max(best, size);
            return;
        }
        while (cand != 0) {
            if (size + static_cast<std::size_t>(std::popcount(cand)) <= best) return;
            const int v = std::countr_zero(cand);
            cand &= cand - 1;
            self(self, cand & adj[static_cast<std::size_t>(v)], size + 1);
        }
        best = std::max(best, size);
    };
    const std::uint32_t all =
        (n == 32) ? ~std::uint32_t{0} : ((std::uint32_t{1} << n) - 1);
    rec(rec, all, 0);
    return best;
}

// ============================================================================
// sums and tables
// ============================================================================

double hausdorff_sum(const std::vector<double>& diams, double s) {
    if (s < 0.0) throw validation_error("hausdorff sum needs s >= 0");
    kahan_acc acc;
    for (double d : diams) {
        if (d < 0.0) throw validation_error("diameters must be >= 0");
        // 0^0 = 1: a singleton still costs one set at s = 0
        acc.add((d == 0.0 && s == 0.0) ? 1.0 : std::pow(d, s));
    }
    return acc.sum;
}

count_table exact_count_table(const cantor_system& sys, std::int32_t k_min,
                              std::int32_t k_max, std::int32_t n1, std::int32_t n2) {
    if (n1 < 1 || n2 < n1) throw validation_error("need 1 <= n1 <= n2");
    count_table tab;
    for (std::int32_t k = k_min; k <= k_max; ++k) {
        const double eps = eps_rung(sys, k);
        for (std::int32_t h = n1; h <= n2; ++h) {
            count_row row;
            row.eps = eps;
            row.n = h;
            row.log_sep_lower = log_big(exact_sep_lower(sys, h, k));
            row.log_cov_upper = log_big(exact_cov_upper(sys, h, k));
            row.log_span_upper = row.log_cov_upper;  // a cover yields a spanning set
            row.method = "formula";
            tab.rows.push_back(row);
        }
    }
    return tab;
}

count_table greedy_count_table(const pair_table& t, const std::vector<double>& ladder,
                               std::int32_t n1, std::int32_t n2) {
    if (n1 < 1 || n2 < n1) throw validation_error("need 1 <= n1 <= n2");
    if (n2 > t.max_horizon()) throw validation_error("window exceeds table horizon");
    for (std::size_t i = 1; i < ladder.size(); ++i) {
        if (!(ladder[i] < ladder[i - 1])) {
            throw validation_error("scale ladder must be strictly decreasing");
        }
    }
    count_table tab;
    for (double eps : ladder) {
        if (!(eps > 0.0)) throw validation_error("scales must be positive");
        for (std::int32_t h = n1; h <= n2; ++h) {
            count_row row;
            row.eps = eps;
            row.n = h;
            row.log_sep_lower =
                std::log(static_cast<double>(greedy_separated(t, h, eps).chosen.size()));
            row.log_span_upper =
                std::log(static_cast<double>(greedy_spanning(t, h, eps).chosen.size()));
            row.log_cov_upper = std::log(
                static_cast<double>(greedy_ball_cover(t, h, eps).balls.size()));
            row.method = "greedy";
            tab.rows.push_back(row);
        }
    }
    return tab;
}

count_table tower_count_table(const interval_tower& t, const metric_spec& m,
                              const std::vector<double>& pts,
                              const std::vector<double>& ladder, std::int32_t n1,
                              std::int32_t n2, std::int32_t stride) {
    // orbits never leave their block, so all three counts add across blocks
    // (separated sums can exceed the union count by one point per interior
    // seam); counting per block keeps the quadratic greedy cost local
    std::vector<std::vector<double>> groups;
    std::vector<double> gaps;
    for (const double x : pts) {
        const std::int32_t bi = tower_block_index(t, x);
        if (bi < 0) {
            gaps.push_back(x);
            continue;
        }
        const auto i = static_cast<std::size_t>(bi);
        if (groups.size() <= i) groups.resize(i + 1);
        groups[i].push_back(x);
    }
    if (!gaps.empty()) groups.push_back(std::move(gaps));

    count_table sum;
    std::vector<double> sep, span, cov;
    for (const double eps : ladder) {
        for (std::int32_t h = n1; h <= n2; ++h) {
            count_row row;
            row.eps = eps;
            row.n = h;
            row.method = "greedy";
            sum.rows.push_back(row);
            sep.push_back(0.0);
            span.push_back(0.0);
            cov.push_back(0.0);
        }
    }
    bool first = true;
    for (const auto& group : groups) {
        if (group.empty()) continue;
        const auto tab = make_interval_table(t, m, group, n2, stride);
        const count_table part = greedy_count_table(*tab, ladder, n1, n2);
        if (first && part.rows.size() != sum.rows.size()) {
            throw validation_error("tower count table row mismatch");
        }
        first = false;
        for (std::size_t i = 0; i < part.rows.size(); ++i) {
            sep[i] += std::exp(part.rows[i].log_sep_lower);
            span[i] += std::exp(part.rows[i].log_span_upper);
            cov[i] += std::exp(part.rows[i].log_cov_upper);
        }
    }
    if (first) throw validation_error("tower count table needs sample points");
    for (std::size_t i = 0; i < sum.rows.size(); ++i) {
        sum.rows[i].log_sep_lower = std::log(sep[i]);
        sum.rows[i].log_span_upper = std::log(span[i]);
        sum.rows[i].log_cov_upper = std::log(cov[i]);
    }
    return sum;
}

}  // namespace mdim
