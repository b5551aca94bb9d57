#pragma once
// ============================================================================
// reports: deterministic CSV / plot emission
//
// Every output starts with '#' header lines: tool+version, the seed, the
// canonical config echo, and a timestamp that is suppressed under
// deterministic mode so reruns are byte-identical. Numbers are %.9g.
// ============================================================================

#include <string>
#include <vector>

#include "mdimlab/config.hpp"
#include "mdimlab/counting.hpp"
#include "mdimlab/dimension.hpp"

namespace mdim {

// "# tool: ...", "# seed: ...", "# config: k=v;...", optional "# timestamp: ..."
std::string header_lines(const run_config& cfg);

// columns: epsilon,n,log_sep_lower,log_span_upper,log_cov_upper,method
std::string render_count_table_csv(const run_config& cfg, const count_table& t);

// columns: kind,epsilon,rate,extrapolated,lo,hi (summary repeated per rung)
std::string render_dimension_csv(const run_config& cfg, const dim_estimate& est);

// two whitespace-separated columns: 1/|log eps|  value
std::string render_plot(const run_config& cfg, const dim_estimate& est);

struct sweep_row {
    double value = 0;
    double estimate = 0;
    double target = 0;
};

// columns: value,estimate,target,abs_err
std::string render_sweep_csv(const run_config& cfg, const std::vector<sweep_row>& rows);

void write_text_file(const std::string& path, const std::string& content);

// data rows of a rendered CSV: '#' lines dropped, remaining lines split on
// ',' (row 0 is the column header)
std::vector<std::vector<std::string>> parse_csv_rows(const std::string& text);

}  // namespace mdim
