// ============================================================================
// mdimlab: metric mean dimension laboratory
//
// Subcommands:
//   estimate       count tables + rate extrapolation for one system
//   sweep          estimate across a parameter list, with closed-form targets
//   verify         run a named verification suite (PASS/FAIL/WARN lines)
//   export-config  canonical key = value dump of the resolved configuration
//
// Exit codes: 0 ok, 1 verification failure / internal error, 2 invalid
// configuration or arguments, 3 orbit depth exhaustion.
// ============================================================================

#include <cmath>
#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mdimlab/cantor.hpp"
#include "mdimlab/config.hpp"
#include "mdimlab/counting.hpp"
#include "mdimlab/dimension.hpp"
#include "mdimlab/gauge.hpp"
#include "mdimlab/interval.hpp"
#include "mdimlab/metric.hpp"
#include "mdimlab/reports.hpp"
#include "mdimlab/suites.hpp"

namespace {

using namespace mdim;

// ----------------------------------------------------------------------------
// flag capture: raw values + presence, folded onto the config after any file
// ----------------------------------------------------------------------------

struct flag_set {
    std::string config_path;
    std::string system;
    double alpha = 0;
    std::int32_t j = 1, s = 1, r = 1;
    std::int32_t k_max = 0;
    std::string ladder_text;   // explicit comma list
    std::string window_text;   // n1:n2
    std::size_t grid = 4096;
    std::size_t family_cap = 2048;
    std::uint64_t seed = 0;
    double snowflake_a = 0, gauge_a = 0;
    std::string out_dir;
    bool deterministic = false;
    std::string suite;
    std::string parameter;
    std::string values_text;

    CLI::Option* o_system = nullptr;
    CLI::Option* o_alpha = nullptr;
    CLI::Option* o_j = nullptr;
    CLI::Option* o_s = nullptr;
    CLI::Option* o_r = nullptr;
    CLI::Option* o_k_max = nullptr;
    CLI::Option* o_ladder = nullptr;
    CLI::Option* o_window = nullptr;
    CLI::Option* o_grid = nullptr;
    CLI::Option* o_family_cap = nullptr;
    CLI::Option* o_seed = nullptr;
    CLI::Option* o_snowflake = nullptr;
    CLI::Option* o_gauge = nullptr;
    CLI::Option* o_out_dir = nullptr;
    CLI::Option* o_det = nullptr;
    CLI::Option* o_suite = nullptr;
    CLI::Option* o_parameter = nullptr;
    CLI::Option* o_values = nullptr;
};

void add_system_flags(CLI::App* cmd, flag_set& f) {
    cmd->add_option("--config", f.config_path,
                    "key = value config file (flags override file values)");
    f.o_system = cmd->add_option(
        "--system", f.system,
        "cantor-psi | cantor-phi | cantor-shift | interval-phi | interval-psi "
        "| interval-varphi");
    f.o_alpha = cmd->add_option("--alpha", f.alpha,
                                "weight base of the symbol metric (word systems)");
    f.o_j = cmd->add_option("--j", f.j, "cantor-psi tower index (>= 1)");
    f.o_s = cmd->add_option("--s", f.s, "interval tower acceleration (>= 1)");
    f.o_r = cmd->add_option("--r", f.r, "interval-phi spacing exponent (>= 1)");
    f.o_k_max = cmd->add_option("--k-max", f.k_max,
                                "deepest rung of the built-in scale ladder");
    f.o_ladder = cmd->add_option("--ladder", f.ladder_text,
                                 "explicit comma-separated scale ladder "
                                 "(overrides --k-max)");
    f.o_window = cmd->add_option("--n", f.window_text,
                                 "horizon window n1:n2 for the growth rates");
    f.o_grid = cmd->add_option("--grid", f.grid,
                               "per-block sample cap for interval systems");
    f.o_family_cap = cmd->add_option("--family-cap", f.family_cap,
                                     "materialization cap for word families");
    f.o_seed = cmd->add_option("--seed", f.seed, "seed for subsampled families");
    f.o_snowflake = cmd->add_option("--snowflake-a", f.snowflake_a,
                                    "wrap the metric in d^a, a in (0,1]");
    f.o_gauge = cmd->add_option("--gauge-a", f.gauge_a,
                                "wrap the metric in the order-a power gauge");
    f.o_out_dir = cmd->add_option("--out-dir", f.out_dir, "output directory");
    f.o_det = cmd->add_flag("--deterministic", f.deterministic,
                            "suppress timestamps so outputs are byte-identical");
}

void fold_flags(run_config& cfg, const flag_set& f) {
    if (!f.config_path.empty()) {
        apply_config_file(cfg, parse_config_file(f.config_path));
    }
    if (f.o_system && f.o_system->count()) cfg.system = f.system;
    if (f.o_alpha && f.o_alpha->count()) cfg.alpha = f.alpha;
    if (f.o_j && f.o_j->count()) cfg.j = f.j;
    if (f.o_s && f.o_s->count()) cfg.s = f.s;
    if (f.o_r && f.o_r->count()) cfg.r = f.r;
    if (f.o_k_max && f.o_k_max->count()) cfg.k_max = f.k_max;
    if (f.o_ladder && f.o_ladder->count()) {
        cfg.ladder_kind = "explicit";
        cfg.ladder_values = parse_double_list(f.ladder_text, "--ladder");
    }
    if (f.o_window && f.o_window->count()) {
        parse_window(f.window_text, &cfg.n1, &cfg.n2);
    }
    if (f.o_grid && f.o_grid->count()) cfg.grid = f.grid;
    if (f.o_family_cap && f.o_family_cap->count()) cfg.family_cap = f.family_cap;
    if (f.o_seed && f.o_seed->count()) cfg.seed = f.seed;
    if (f.o_snowflake && f.o_snowflake->count()) cfg.snowflake_a = f.snowflake_a;
    if (f.o_gauge && f.o_gauge->count()) cfg.gauge_a = f.gauge_a;
    if (f.o_out_dir && f.o_out_dir->count()) cfg.out_dir = f.out_dir;
    if (f.o_det && f.o_det->count()) cfg.deterministic = f.deterministic;
    if (f.o_suite && f.o_suite->count()) cfg.suite = f.suite;
    if (f.o_parameter && f.o_parameter->count()) cfg.parameter = f.parameter;
    if (f.o_values && f.o_values->count()) {
        cfg.values = parse_double_list(f.values_text, "--values");
    }
}

// ----------------------------------------------------------------------------
// estimation pipeline (shared by estimate and sweep)
// ----------------------------------------------------------------------------

cantor_system cantor_from_cfg(const run_config& cfg) {
    if (cfg.system == "cantor-psi") return make_tower_psi(cfg.j, cfg.alpha);
    if (cfg.system == "cantor-phi") return make_tower_phi_square(cfg.alpha);
    return make_full_shift(cfg.alpha);
}

interval_tower tower_from_cfg(const run_config& cfg) {
    if (cfg.system == "interval-phi") return make_phi_sr(cfg.s, cfg.r);
    if (cfg.system == "interval-psi") return make_psi_s(cfg.s);
    return make_varphi_s(cfg.s);
}

// combined order of the metric wrappers; dimensions divide by this
double effective_exponent(const run_config& cfg) {
    double a = 1.0;
    if (cfg.snowflake_a != 0) a *= cfg.snowflake_a;
    if (cfg.gauge_a != 0) a *= cfg.gauge_a;
    return a;
}

// closed-form rate of the configured system, adjusted for wrappers
double target_rate(const run_config& cfg) {
    double base = 0.0;
    if (cfg.system == "cantor-psi") {
        base = cfg.j * std::log(2.0) /
               ((cfg.j + 1.0) * std::log(cfg.alpha));
    } else if (cfg.system == "cantor-phi") {
        base = std::log(2.0) / std::log(cfg.alpha);
    } else if (cfg.system == "cantor-shift") {
        base = 0.0;
    } else if (cfg.system == "interval-phi") {
        base = static_cast<double>(cfg.s) / (cfg.s + cfg.r);
    } else if (cfg.system == "interval-psi") {
        base = 1.0;
    } else {  // interval-varphi
        base = 0.0;
    }
    return base / effective_exponent(cfg);
}

// Ladder rungs always name scales of the bare metric; wrapping by a monotone
// transform of order a moves the probe scale to eps^a while counts carry
// over verbatim. This keeps word tables exact under wrappers.
void transform_rungs(count_table& tab, double a) {
    if (a == 1.0) return;
    for (auto& r : tab.rows) r.eps = std::pow(r.eps, a);
}

std::vector<double> transform_ladder(std::vector<double> ladder, double a) {
    if (a != 1.0) {
        for (double& e : ladder) e = std::pow(e, a);
    }
    return ladder;
}

struct estimate_run {
    count_table counts;
    dim_estimate est;
    double target = 0;
};

estimate_run run_estimate(const run_config& cfg) {
    estimate_run out;
    const double a_eff = effective_exponent(cfg);
    if (is_cantor_system(cfg.system)) {
        if (cfg.ladder_kind == "explicit") {
            throw validation_error(
                "word systems use the built-in ladder (--k-max), not --ladder");
        }
        const cantor_system sys = cantor_from_cfg(cfg);
        out.counts = exact_count_table(sys, 1, cfg.k_max, cfg.n1, cfg.n2);
        transform_rungs(out.counts, a_eff);
    } else {
        const interval_tower t = tower_from_cfg(cfg);
        metric_ptr m = metric_euclid1d();
        if (cfg.snowflake_a != 0) m = metric_snowflake(m, cfg.snowflake_a);
        if (cfg.gauge_a != 0) {
            m = metric_gauge(m, make_power_gauge(cfg.gauge_a, 1.0));
        }
        const auto bare = resolve_ladder(cfg);
        const double eps_min = *std::min_element(bare.begin(), bare.end());
        const auto pts = tower_adaptive_sample(t, eps_min, cfg.n2, cfg.grid);
        const auto ladder = transform_ladder(bare, a_eff);
        out.counts = tower_count_table(t, *m, pts, ladder, cfg.n1, cfg.n2);
    }
    out.est = mdim_m_estimate(out.counts, cfg.n1, cfg.n2);
    out.target = target_rate(cfg);
    return out;
}

// ----------------------------------------------------------------------------
// subcommand bodies
// ----------------------------------------------------------------------------

int cmd_estimate(const run_config& cfg) {
    const estimate_run run = run_estimate(cfg);
    write_text_file(cfg.out_dir + "/count_table.csv",
                    render_count_table_csv(cfg, run.counts));
    write_text_file(cfg.out_dir + "/dimension_estimate.csv",
                    render_dimension_csv(cfg, run.est));
    write_text_file(cfg.out_dir + "/rate_plot.dat", render_plot(cfg, run.est));
    std::cout << "estimate[" << cfg.system << "]: " << run.est.kind << " = "
              << format_g9(run.est.extrapolated) << " bracket ["
              << format_g9(run.est.lo) << ", " << format_g9(run.est.hi)
              << "] target " << format_g9(run.target) << "\n";
    std::cout << "outputs: " << cfg.out_dir << "/count_table.csv "
              << cfg.out_dir << "/dimension_estimate.csv " << cfg.out_dir
              << "/rate_plot.dat\n";
    return 0;
}

std::int32_t sweep_int(double v, const std::string& what) {
    if (!(v >= 1.0) || v != std::floor(v)) {
        throw validation_error("sweep value for " + what +
                               " must be an integer >= 1, got " + format_g9(v));
    }
    return static_cast<std::int32_t>(v);
}

int cmd_sweep(const run_config& cfg) {
    // parameter / system compatibility
    if (cfg.parameter == "j" && cfg.system != "cantor-psi") {
        throw validation_error("sweep over j needs --system cantor-psi");
    }
    if (cfg.parameter == "alpha" && !is_cantor_system(cfg.system)) {
        throw validation_error("sweep over alpha needs a word system");
    }
    if (cfg.parameter == "s" && !is_interval_system(cfg.system)) {
        throw validation_error("sweep over s needs an interval system");
    }
    if (cfg.parameter == "r" && cfg.system != "interval-phi") {
        throw validation_error("sweep over r needs --system interval-phi");
    }

    std::vector<sweep_row> rows;
    for (double v : cfg.values) {
        run_config c = cfg;
        if (cfg.parameter == "j") c.j = sweep_int(v, "j");
        else if (cfg.parameter == "alpha") c.alpha = v;
        else if (cfg.parameter == "a") c.snowflake_a = v;
        else if (cfg.parameter == "s") c.s = sweep_int(v, "s");
        else c.r = sweep_int(v, "r");
        validate_config(c, "estimate");
        const estimate_run run = run_estimate(c);
        rows.push_back({v, run.est.extrapolated, run.target});
        std::cout << "sweep " << cfg.parameter << "=" << format_g9(v)
                  << ": estimate " << format_g9(run.est.extrapolated)
                  << " target " << format_g9(run.target) << " abs_err "
                  << format_g9(std::fabs(run.est.extrapolated - run.target))
                  << "\n";
    }
    write_text_file(cfg.out_dir + "/sweep.csv", render_sweep_csv(cfg, rows));
    std::cout << "outputs: " << cfg.out_dir << "/sweep.csv\n";
    return 0;
}

int cmd_verify(const run_config& cfg) {
    const auto results = run_suite(cfg.suite);
    std::size_t failed = 0, warned = 0;
    for (const auto& c : results) {
        std::cout << format_check_line(c) << "\n";
        if (!c.pass) {
            if (c.advisory) ++warned;
            else ++failed;
        }
    }
    std::cout << "suite '" << cfg.suite << "': " << (results.size() - failed - warned)
              << "/" << results.size() << " passed";
    if (warned) std::cout << ", " << warned << " advisory warning(s)";
    if (failed) std::cout << ", " << failed << " FAILED";
    std::cout << "\n";
    return failed == 0 ? 0 : 1;
}

int cmd_export_config(const run_config& cfg, const std::string& out_path) {
    const std::string text = render_config(cfg);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(out_path, text);
        std::cout << "wrote " << out_path << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mdimlab: Bowen-scale counting and dimension rate estimates"};
    app.require_subcommand(1);

    flag_set ef, sf, vf, xf;
    std::string export_path;

    CLI::App* est = app.add_subcommand(
        "estimate", "count table + extrapolated dimension rate for one system");
    add_system_flags(est, ef);

    CLI::App* swp = app.add_subcommand(
        "sweep", "estimates across a parameter list, with closed-form targets");
    add_system_flags(swp, sf);
    sf.o_parameter = swp->add_option("--parameter", sf.parameter,
                                     "one of j, alpha, a, s, r");
    sf.o_values = swp->add_option("--values", sf.values_text,
                                  "comma-separated parameter values");

    CLI::App* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("--config", vf.config_path, "key = value config file");
    vf.o_suite = ver->add_option(
        "--suite", vf.suite,
        "counts | scaling | hausdorff | products | gauges | all");

    CLI::App* exp = app.add_subcommand(
        "export-config", "canonical dump of the resolved configuration");
    add_system_flags(exp, xf);
    exp->add_option("--out", export_path, "destination file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;  // bad arguments are configuration errors
    }

    try {
        run_config cfg;
        if (est->parsed()) {
            fold_flags(cfg, ef);
            validate_config(cfg, "estimate");
            return cmd_estimate(cfg);
        }
        if (swp->parsed()) {
            fold_flags(cfg, sf);
            validate_config(cfg, "sweep");
            return cmd_sweep(cfg);
        }
        if (ver->parsed()) {
            fold_flags(cfg, vf);
            validate_config(cfg, "verify");
            return cmd_verify(cfg);
        }
        fold_flags(cfg, xf);
        validate_config(cfg, "export-config");
        return cmd_export_config(cfg, export_path);
    } catch (const validation_error& e) {
        std::cerr << tool_name << ": " << e.what() << "\n";
        return 2;
    } catch (const depth_error& e) {
        std::cerr << tool_name << ": " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << tool_name << ": internal error: " << e.what() << "\n";
        return 1;
    }
}
