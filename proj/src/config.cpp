#include "mdimlab/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mdimlab/cantor.hpp"
#include "mdimlab/interval.hpp"

namespace mdim {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

double to_double(const std::string& v, const std::string& what) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw validation_error(what + ": not a number: '" + v + "'");
    }
}

std::int64_t to_int(const std::string& v, const std::string& what) {
    try {
        std::size_t used = 0;
        const long long x = std::stoll(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw validation_error(what + ": not an integer: '" + v + "'");
    }
}

}  // namespace

bool is_cantor_system(const std::string& system) {
    return system == "cantor-psi" || system == "cantor-phi" ||
           system == "cantor-shift";
}

bool is_interval_system(const std::string& system) {
    return system == "interval-phi" || system == "interval-psi" ||
           system == "interval-varphi";
}

config_file parse_config_text(const std::string& text, const std::string& origin) {
    config_file f;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw validation_error(origin + ":" + std::to_string(lineno) +
                                   ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (key.empty()) {
            throw validation_error(origin + ":" + std::to_string(lineno) +
                                   ": empty key");
        }
        if (f.kv.count(key) != 0) {
            throw validation_error(origin + ":" + std::to_string(lineno) +
                                   ": duplicate key '" + key + "'");
        }
        f.kv[key] = val;
        f.order.push_back(key);
    }
    return f;
}

config_file parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), path);
}

void apply_config_file(run_config& cfg, const config_file& f) {
    for (const auto& key : f.order) {
        const std::string& v = f.kv.at(key);
        if (key == "system.kind") cfg.system = v;
        else if (key == "system.alpha") cfg.alpha = to_double(v, key);
        else if (key == "system.j") cfg.j = static_cast<std::int32_t>(to_int(v, key));
        else if (key == "system.s") cfg.s = static_cast<std::int32_t>(to_int(v, key));
        else if (key == "system.r") cfg.r = static_cast<std::int32_t>(to_int(v, key));
        else if (key == "ladder.kind") cfg.ladder_kind = v;
        else if (key == "ladder.k_max") cfg.k_max = static_cast<std::int32_t>(to_int(v, key));
        else if (key == "ladder.values") cfg.ladder_values = parse_double_list(v, key);
        else if (key == "window.n1") cfg.n1 = static_cast<std::int32_t>(to_int(v, key));
        else if (key == "window.n2") cfg.n2 = static_cast<std::int32_t>(to_int(v, key));
        else if (key == "sample.grid") cfg.grid = static_cast<std::size_t>(to_int(v, key));
        else if (key == "sample.family_cap") cfg.family_cap = static_cast<std::size_t>(to_int(v, key));
        else if (key == "sample.seed") cfg.seed = static_cast<std::uint64_t>(to_int(v, key));
        else if (key == "metric.snowflake_a") cfg.snowflake_a = to_double(v, key);
        else if (key == "metric.gauge_a") cfg.gauge_a = to_double(v, key);
        else if (key == "outputs.dir") cfg.out_dir = v;
        else if (key == "outputs.deterministic") cfg.deterministic = (v == "true" || v == "1");
        else if (key == "verify.suite") cfg.suite = v;
        else if (key == "sweep.parameter") cfg.parameter = v;
        else if (key == "sweep.values") cfg.values = parse_double_list(v, key);
        else throw validation_error("unknown config key '" + key + "'");
    }
}

std::vector<double> parse_double_list(const std::string& csv, const std::string& what) {
    std::vector<double> out;
    std::string cur;
    std::istringstream in(csv);
    while (std::getline(in, cur, ',')) {
        cur = trim(cur);
        if (cur.empty()) continue;
        out.push_back(to_double(cur, what));
    }
    return out;
}

void parse_window(const std::string& text, std::int32_t* n1, std::int32_t* n2) {
    const std::size_t colon = text.find(':');
    if (colon == std::string::npos) {
        throw validation_error("window must look like n1:n2, got '" + text + "'");
    }
    *n1 = static_cast<std::int32_t>(to_int(trim(text.substr(0, colon)), "window n1"));
    *n2 = static_cast<std::int32_t>(to_int(trim(text.substr(colon + 1)), "window n2"));
}

void validate_config(const run_config& cfg, const std::string& command) {
    if (command == "verify") {
        static const std::vector<std::string> suites = {
            "counts", "scaling", "hausdorff", "products", "gauges", "all"};
        if (std::find(suites.begin(), suites.end(), cfg.suite) == suites.end()) {
            throw validation_error("unknown suite '" + cfg.suite + "'");
        }
        return;  // verify needs nothing else
    }

    if (cfg.system.empty()) throw validation_error("missing system");
    if (!is_cantor_system(cfg.system) && !is_interval_system(cfg.system)) {
        throw validation_error("unknown system '" + cfg.system + "'");
    }
    if (is_cantor_system(cfg.system)) {
        if (cfg.alpha == 0) throw validation_error("missing alpha for a word system");
        if (!(cfg.alpha > 1.0)) throw validation_error("alpha must exceed 1");
        if (cfg.system == "cantor-shift" && !(cfg.alpha > 2.0)) {
            throw validation_error("full-shift exact counts need alpha > 2");
        }
        if (cfg.system == "cantor-psi" && cfg.j < 1) {
            throw validation_error("tower index j must be >= 1");
        }
    } else {
        if (cfg.s < 1) throw validation_error("tower parameter s must be >= 1");
        if (cfg.system == "interval-phi" && cfg.r < 1) {
            throw validation_error("tower parameter r must be >= 1");
        }
        if (cfg.grid < 2) throw validation_error("sample grid must be >= 2");
    }

    if (cfg.ladder_kind == "explicit") {
        if (cfg.ladder_values.empty()) {
            throw validation_error("explicit ladder needs at least one value");
        }
        for (std::size_t i = 0; i < cfg.ladder_values.size(); ++i) {
            if (!(cfg.ladder_values[i] > 0.0)) {
                throw validation_error("ladder values must be positive");
            }
            if (i > 0 && !(cfg.ladder_values[i] < cfg.ladder_values[i - 1])) {
                throw validation_error("ladder must be strictly decreasing");
            }
        }
    } else if (cfg.ladder_kind == "pinned" || cfg.ladder_kind == "geometric") {
        if (cfg.k_max < 1) throw validation_error("missing k-max (>= 1)");
    } else {
        throw validation_error("unknown ladder kind '" + cfg.ladder_kind + "'");
    }

    if (command == "estimate" || command == "sweep" || command == "export-config") {
        if (cfg.n1 < 1 || cfg.n2 < 1) throw validation_error("missing horizon window n1:n2");
        if (!(cfg.n1 < cfg.n2)) throw validation_error("window needs n1 < n2");
    }
    if (cfg.snowflake_a != 0 && !(cfg.snowflake_a > 0.0 && cfg.snowflake_a <= 1.0)) {
        throw validation_error("snowflake exponent must lie in (0,1]");
    }
    if (cfg.gauge_a != 0 && !(cfg.gauge_a > 0.0)) {
        throw validation_error("gauge exponent must be positive");
    }

    if (command == "sweep") {
        static const std::vector<std::string> params = {"j", "alpha", "a", "s", "r"};
        if (std::find(params.begin(), params.end(), cfg.parameter) == params.end()) {
            throw validation_error("sweep parameter must be one of j, alpha, a, s, r");
        }
        if (cfg.values.empty()) {
            throw validation_error("sweep needs a non-empty values list");
        }
    }
}

std::string render_config(const run_config& cfg) {
    std::ostringstream out;
    out << "system.kind = " << cfg.system << "\n";
    if (is_cantor_system(cfg.system)) {
        out << "system.alpha = " << format_g9(cfg.alpha) << "\n";
        if (cfg.system == "cantor-psi") out << "system.j = " << cfg.j << "\n";
    } else {
        out << "system.s = " << cfg.s << "\n";
        if (cfg.system == "interval-phi") out << "system.r = " << cfg.r << "\n";
    }
    out << "ladder.kind = " << cfg.ladder_kind << "\n";
    if (cfg.ladder_kind == "explicit") {
        out << "ladder.values = ";
        for (std::size_t i = 0; i < cfg.ladder_values.size(); ++i) {
            if (i) out << ",";
            out << format_g9(cfg.ladder_values[i]);
        }
        out << "\n";
    } else {
        out << "ladder.k_max = " << cfg.k_max << "\n";
    }
    out << "window.n1 = " << cfg.n1 << "\n";
    out << "window.n2 = " << cfg.n2 << "\n";
    if (is_interval_system(cfg.system)) {
        out << "sample.grid = " << cfg.grid << "\n";
    } else {
        out << "sample.family_cap = " << cfg.family_cap << "\n";
    }
    out << "sample.seed = " << cfg.seed << "\n";
    if (cfg.snowflake_a != 0) {
        out << "metric.snowflake_a = " << format_g9(cfg.snowflake_a) << "\n";
    }
    if (cfg.gauge_a != 0) {
        out << "metric.gauge_a = " << format_g9(cfg.gauge_a) << "\n";
    }
    out << "outputs.dir = " << cfg.out_dir << "\n";
    out << "outputs.deterministic = " << (cfg.deterministic ? "true" : "false") << "\n";
    return out.str();
}

std::vector<double> resolve_ladder(const run_config& cfg) {
    if (cfg.ladder_kind == "explicit") return cfg.ladder_values;
    if (is_cantor_system(cfg.system)) {
        cantor_system sys;
        if (cfg.system == "cantor-psi") sys = make_tower_psi(cfg.j, cfg.alpha);
        else if (cfg.system == "cantor-phi") sys = make_tower_phi_square(cfg.alpha);
        else sys = make_full_shift(cfg.alpha);
        return eps_ladder(sys, 1, cfg.k_max);
    }
    return tower_eps_ladder(1, cfg.k_max);
}

}  // namespace mdim
