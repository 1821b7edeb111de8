#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "functor_audit/classifier.hpp"
#include "functor_audit/metrics.hpp"

namespace functor_audit {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MissingColumn : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class EmptyInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct ClassRecord {
    std::string qualified_name;
    std::string origin;  // source path or "csv:<file>:<row>"
    std::string repository;
    MetricValues metrics;
    long loc = 0;
    long blank_lines = 0;
    long ncloc = 0;  // loc - blank_lines
    bool has_static_member = false;
    GroupLabel label;
};

/// One skipped input, rendered as `SKIP <path>:<line> <reason>`.
struct Diagnostic {
    std::string path;
    long line = 0;
    std::string reason;

    std::string to_string() const;
};

struct IngestResult {
    std::vector<ClassRecord> records;
    std::vector<Diagnostic> diagnostics;
    std::vector<std::string> warnings;
    std::size_t inputs_seen = 0;     // files or CSV rows
    std::size_t inputs_skipped = 0;
    std::size_t repositories = 0;    // distinct repositories observed
};

struct IngestOptions {
    SuffixRules rules;
    ExcludedPolicy excluded = ExcludedPolicy::Rest;
    unsigned jobs = 0;  // 0 = hardware concurrency
};

/// Parses every `.java` file under each root (sorted, recursive). Each
/// root counts as one repository. Throws IoError if a root is missing or
/// unreadable; per-file parse failures become diagnostics.
IngestResult ingest_sources(const std::vector<std::filesystem::path>& roots, const IngestOptions& options);

/// Builds the record for one parsed class (metrics + label).
ClassRecord make_record(const SourceClass& cls, const std::string& origin, const std::string& repository,
                        const IngestOptions& options);

/// Logical CSV columns to physical header names.
struct ColumnMap {
    std::string name = "class";
    std::string lcom5 = "LCOM5";
    std::string nhd = "NHD";
    std::string cc = "CC";
    std::string coco_total = "CoCo";
    std::string coco_avg = "ACoCo";
    std::string coco_max = "MxCoCo";
    std::string coco_min = "MnCoCo";
    std::string loc = "LoC";
    std::string blank = "Blank";
    std::optional<std::string> has_static;  // truthy: 1/true/yes
    std::optional<std::string> repository;

    /// `key=Header` lines; keys are the member names above (`static` and
    /// `repo` for the optional ones). Unknown keys throw std::runtime_error.
    static ColumnMap parse(std::string_view text);
    static ColumnMap load(const std::filesystem::path& path);
};

/// Simple class name from a CSV name cell: directories, a `.java`
/// extension, package and `$`-nesting prefixes are stripped.
std::string simple_class_name(std::string_view cell);

/// One record per data row. Empty or NaN metric cells become undefined
/// metrics; rows with the wrong arity or unparsable numbers are skipped and
/// reported. Throws MissingColumn for an unmapped required header and
/// IoError when the file cannot be read.
IngestResult ingest_cam_csv(const std::filesystem::path& path, const ColumnMap& columns,
                            const IngestOptions& options);

/// Same as ingest_cam_csv over in-memory text; `origin` names the source.
IngestResult ingest_cam_csv_text(std::string_view text, const std::string& origin, const ColumnMap& columns,
                                 const IngestOptions& options);

/// Nearest-rank quantile of sorted values: element ceil(p*n)-1, clamped.
/// Throws EmptyInput for an empty span.
double quantile(std::span<const double> sorted_values, double p);

/// 1-based nearest rank used by quantile(): ceil(p*n) clamped to [1, n].
/// p*n values within 1e-9 of an integer are snapped to it first so that
/// decimal fractions like 0.07 behave as written.
std::size_t nearest_rank(std::size_t n, double p);

struct FilterBounds {
    double q_low = 0.01;
    double q_high = 0.99;
};

struct FilterResult {
    std::vector<ClassRecord> kept;
    std::size_t input_count = 0;
    std::size_t dropped_metric = 0;
    std::size_t dropped_quantile = 0;
    std::size_t dropped_label = 0;
    std::optional<double> ncloc_low;   // thresholds frozen for this run
    std::optional<double> ncloc_high;
};

/// Drops records with an undefined metric, then records whose ncloc lies
/// strictly outside [quantile(q_low), quantile(q_high)] of the survivors,
/// then Dropped-labeled records. In lenient mode the metric step is skipped.
FilterResult filter_records(std::vector<ClassRecord> records, FilterBounds bounds = {}, bool lenient = false);

/// Applies already frozen ncloc thresholds instead of recomputing them.
FilterResult filter_records_with_thresholds(std::vector<ClassRecord> records, double ncloc_low,
                                            double ncloc_high, bool lenient = false);

struct GroupSummary {
    Group group = Group::Rest;
    std::size_t class_count = 0;
    long long loc_total = 0;
    std::optional<double> loc_per_class;
    std::array<std::optional<double>, MetricValues::kCount> means{};  // MetricValues order
};

/// Groups in report order.
constexpr std::array<Group, 3> kReportGroups = {Group::ErOr, Group::Utils, Group::Rest};

/// One summary per group in kReportGroups order. Means skip undefined
/// values and are computed from sorted values with compensated summation,
/// so the result does not depend on record order.
std::vector<GroupSummary> aggregate_groups(std::span<const ClassRecord> records);

/// Compensated (Neumaier) mean of the values after sorting them.
std::optional<double> stable_mean(std::vector<double> values);

}  // namespace functor_audit
