#include "mdimlab/reports.hpp"

#include <chrono>
#include <cmath>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mdim {

namespace {

std::string config_echo(const run_config& cfg) {
    // canonical config, newlines folded to a single header-safe line
    std::string canon = render_config(cfg);
    std::string out;
    out.reserve(canon.size());
    for (char c : canon) {
        if (c == '\n') {
            if (!out.empty() && out.back() != ';') out += ';';
        } else if (c == ' ') {
            // keys and values carry no spaces; drop the padding around '='
        } else {
            out += c;
        }
    }
    if (!out.empty() && out.back() == ';') out.pop_back();
    return out;
}

std::string utc_timestamp() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return std::string(buf);
}

}  // namespace

std::string header_lines(const run_config& cfg) {
    std::ostringstream out;
    out << "# tool: " << tool_name << " " << tool_version << "\n";
    out << "# seed: " << cfg.seed << "\n";
    out << "# config: " << config_echo(cfg) << "\n";
    if (!cfg.deterministic) {
        out << "# timestamp: " << utc_timestamp() << "\n";
    }
    return out.str();
}

std::string render_count_table_csv(const run_config& cfg, const count_table& t) {
    std::ostringstream out;
    out << header_lines(cfg);
    out << "epsilon,n,log_sep_lower,log_span_upper,log_cov_upper,method\n";
    for (const auto& r : t.rows) {
        out << format_g9(r.eps) << "," << r.n << "," << format_g9(r.log_sep_lower)
            << "," << format_g9(r.log_span_upper) << ","
            << format_g9(r.log_cov_upper) << "," << r.method << "\n";
    }
    return out.str();
}

std::string render_dimension_csv(const run_config& cfg, const dim_estimate& est) {
    std::ostringstream out;
    out << header_lines(cfg);
    out << "kind,epsilon,rate,extrapolated,lo,hi\n";
    for (const auto& rp : est.per_eps) {
        out << est.kind << "," << format_g9(rp.eps) << "," << format_g9(rp.value)
            << "," << format_g9(est.extrapolated) << "," << format_g9(est.lo)
            << "," << format_g9(est.hi) << "\n";
    }
    return out.str();
}

std::string render_plot(const run_config& cfg, const dim_estimate& est) {
    std::ostringstream out;
    out << header_lines(cfg);
    for (const auto& rp : est.per_eps) {
        out << format_g9(1.0 / (-std::log(rp.eps))) << " " << format_g9(rp.value)
            << "\n";
    }
    return out.str();
}

std::string render_sweep_csv(const run_config& cfg, const std::vector<sweep_row>& rows) {
    std::ostringstream out;
    out << header_lines(cfg);
    out << "value,estimate,target,abs_err\n";
    for (const auto& r : rows) {
        out << format_g9(r.value) << "," << format_g9(r.estimate) << ","
            << format_g9(r.target) << "," << format_g9(std::fabs(r.estimate - r.target))
            << "\n";
    }
    return out.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    const std::filesystem::path p(path);
    if (p.has_parent_path()) {
        std::filesystem::create_directories(p.parent_path());
    }
    std::ofstream out(p, std::ios::binary);
    if (!out) throw validation_error("cannot write file: " + path);
    out << content;
}

std::vector<std::vector<std::string>> parse_csv_rows(const std::string& text) {
    std::vector<std::vector<std::string>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ls(line);
        while (std::getline(ls, cell, ',')) cells.push_back(cell);
        rows.push_back(std::move(cells));
    }
    return rows;
}

}  // namespace mdim
