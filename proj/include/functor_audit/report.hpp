#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "functor_audit/pipeline.hpp"

namespace functor_audit {

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class OutputFormat { Text, Csv, Json };

/// Fixed-point with three decimals, ties to even on the exact binary value.
std::string format_3dp(double value);

/// Counters shown under the tables; all optional so that callers rendering
/// bare summaries can omit them.
struct RunTally {
    std::size_t inputs_seen = 0;
    std::size_t inputs_skipped = 0;
    std::size_t repositories = 0;
    std::size_t classes_in = 0;
    std::size_t classes_kept = 0;
    std::size_t dropped_metric = 0;
    std::size_t dropped_quantile = 0;
    std::size_t dropped_label = 0;
    std::optional<double> ncloc_low;
    std::optional<double> ncloc_high;
};

struct RenderOptions {
    bool styled = false;  // ANSI bold headings in text output
    std::optional<RunTally> tally;
};

/// Size, cohesion and complexity tables over the non-empty groups. In text
/// form the worst cohesion cell (highest LCOM5, lowest NHD) and the highest
/// complexity cell of each column are suffixed with `*`, ties included.
std::string render_tables(std::span<const GroupSummary> summaries, OutputFormat format,
                          const RenderOptions& options = {});

struct ChartSpec {
    std::string file_stem;  // lcom5, nhd, coco, cc
    std::string title;
    std::size_t metric;     // index into MetricValues::as_array()
};

/// The four bar charts, in figure order.
const std::vector<ChartSpec>& chart_specs();

/// Writes `<stem>.svg` and `<stem>.csv` for every chart. Returns the files
/// written; writes nothing and returns an empty list when no group has a
/// value to plot. Throws IoError when the directory cannot be written.
std::vector<std::filesystem::path> emit_chart_data(std::span<const GroupSummary> summaries,
                                                   const std::filesystem::path& dir);

/// Standalone SVG bar chart for one metric.
std::string render_bar_chart_svg(std::span<const GroupSummary> summaries, const ChartSpec& spec);

enum class InputMode { Source, Cam };

struct RunConfig {
    InputMode mode = InputMode::Source;
    std::vector<std::filesystem::path> inputs;
    std::optional<std::filesystem::path> cam_map;
    std::optional<std::filesystem::path> rules;
    double q_low = 0.01;
    double q_high = 0.99;
    ExcludedPolicy excluded = ExcludedPolicy::Rest;
    OutputFormat format = OutputFormat::Text;
    std::optional<std::filesystem::path> charts_dir;
    std::optional<std::filesystem::path> diagnostics_file;
    bool lenient = false;
    bool styled = false;
    unsigned jobs = 0;

    /// Throws ConfigError when the configuration is inconsistent.
    void validate() const;
};

enum ExitStatus : int { kExitOk = 0, kExitFatal = 1, kExitHighSkipRate = 2 };

/// Runs the whole study: ingest, filter, aggregate, render to `out`, and
/// write diagnostics/warnings to `diag` (or the diagnostics file). Fatal
/// errors are reported as one line on `diag`.
int run(const RunConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace functor_audit
