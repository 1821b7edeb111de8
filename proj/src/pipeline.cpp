#include "functor_audit/pipeline.hpp"

#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <set>
#include <sstream>
#include <thread>

#include "csv_reader.hpp"

namespace functor_audit {

namespace fs = std::filesystem;

std::string Diagnostic::to_string() const {
    return "SKIP " + path + ":" + std::to_string(line) + " " + reason;
}

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct FileOutcome {
    std::vector<ClassRecord> records;
    std::optional<Diagnostic> diagnostic;
};

FileOutcome ingest_file(const fs::path& file, const std::string& repository, const IngestOptions& options) {
    FileOutcome out;
    const std::string origin = file.generic_string();
    std::string text;
    try {
        text = read_file(file);
    } catch (const IoError& e) {
        out.diagnostic = Diagnostic{origin, 0, "unreadable file"};
        return out;
    }
    try {
        for (const SourceClass& cls : parse_compilation_unit(text, origin)) {
            out.records.push_back(make_record(cls, origin, repository, options));
        }
    } catch (const ParseError& e) {
        out.records.clear();
        out.diagnostic = Diagnostic{origin, e.line(), e.reason()};
    }
    return out;
}

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

enum class CellStatus { Value, Empty, Bad };

CellStatus parse_number(std::string_view cell, double& out) {
    cell = trim(cell);
    if (cell.empty()) return CellStatus::Empty;
    std::string lowered(cell);
    std::transform(lowered.begin(), lowered.end(), lowered.begin(), [](unsigned char c) { return std::tolower(c); });
    if (lowered == "nan" || lowered == "na" || lowered == "null" || lowered == "none") return CellStatus::Empty;
    const auto res = std::from_chars(cell.data(), cell.data() + cell.size(), out);
    if (res.ec != std::errc{} || res.ptr != cell.data() + cell.size() || !std::isfinite(out)) {
        return CellStatus::Bad;
    }
    return CellStatus::Value;
}

bool truthy(std::string_view cell) {
    std::string v(trim(cell));
    std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
    return v == "1" || v == "true" || v == "yes" || v == "y" || v == "t";
}

}  // namespace

ClassRecord make_record(const SourceClass& cls, const std::string& origin, const std::string& repository,
                        const IngestOptions& options) {
    ClassRecord r;
    r.qualified_name = cls.qualified_name;
    r.origin = origin;
    r.repository = repository;
    r.metrics = class_metrics(cls).values();
    r.loc = cls.loc;
    r.blank_lines = cls.blank_lines;
    r.ncloc = r.loc - r.blank_lines;
    r.has_static_member = cls.has_static_member;
    r.label = classify(cls.name, cls.has_static_member, options.rules, options.excluded);
    return r;
}

IngestResult ingest_sources(const std::vector<fs::path>& roots, const IngestOptions& options) {
    struct Job {
        fs::path file;
        std::string repository;
    };
    std::vector<Job> jobs;
    std::set<std::string> repositories;
    for (const fs::path& root : roots) {
        std::error_code ec;
        if (!fs::exists(root, ec) || ec) throw IoError("input root does not exist: " + root.string());
        std::vector<fs::path> files;
        if (fs::is_regular_file(root, ec)) {
            files.push_back(root);
        } else {
            fs::recursive_directory_iterator it(root, fs::directory_options::skip_permission_denied, ec);
            if (ec) throw IoError("cannot read input root " + root.string() + ": " + ec.message());
            for (; it != fs::recursive_directory_iterator(); it.increment(ec)) {
                if (ec) throw IoError("cannot walk " + root.string() + ": " + ec.message());
                if (it->is_regular_file(ec) && it->path().extension() == ".java") files.push_back(it->path());
            }
        }
        std::sort(files.begin(), files.end());
        const std::string repo = root.lexically_normal().generic_string();
        repositories.insert(repo);
        for (auto& f : files) jobs.push_back(Job{std::move(f), repo});
    }

    std::vector<FileOutcome> outcomes(jobs.size());
    unsigned workers = options.jobs ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(jobs.size(), 1)));
    if (workers <= 1) {
        for (std::size_t i = 0; i < jobs.size(); ++i) outcomes[i] = ingest_file(jobs[i].file, jobs[i].repository, options);
    } else {
        // Strided partition: worker w handles jobs w, w+W, ... and writes
        // only its own slots, so the output order is the job order.
        std::vector<std::future<void>> futures;
        for (unsigned w = 0; w < workers; ++w) {
            futures.push_back(std::async(std::launch::async, [&, w] {
                for (std::size_t i = w; i < jobs.size(); i += workers) {
                    outcomes[i] = ingest_file(jobs[i].file, jobs[i].repository, options);
                }
            }));
        }
        for (auto& f : futures) f.get();
    }

    IngestResult result;
    result.inputs_seen = jobs.size();
    result.repositories = repositories.size();
    for (FileOutcome& o : outcomes) {
        if (o.diagnostic) {
            ++result.inputs_skipped;
            result.diagnostics.push_back(std::move(*o.diagnostic));
        }
        for (ClassRecord& r : o.records) result.records.push_back(std::move(r));
    }
    return result;
}

ColumnMap ColumnMap::parse(std::string_view text) {
    ColumnMap map;
    std::istringstream in{std::string(text)};
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string_view line = raw;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw std::runtime_error("column map line " + std::to_string(line_no) + ": expected key=column");
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string value(trim(line.substr(eq + 1)));
        if (value.empty()) throw std::runtime_error("column map line " + std::to_string(line_no) + ": empty column");
        if (key == "name") map.name = value;
        else if (key == "lcom5") map.lcom5 = value;
        else if (key == "nhd") map.nhd = value;
        else if (key == "cc") map.cc = value;
        else if (key == "coco_total") map.coco_total = value;
        else if (key == "coco_avg") map.coco_avg = value;
        else if (key == "coco_max") map.coco_max = value;
        else if (key == "coco_min") map.coco_min = value;
        else if (key == "loc") map.loc = value;
        else if (key == "blank") map.blank = value;
        else if (key == "static") map.has_static = value;
        else if (key == "repo") map.repository = value;
        else throw std::runtime_error("column map line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
    return map;
}

ColumnMap ColumnMap::load(const fs::path& path) {
    return parse(read_file(path));
}

std::string simple_class_name(std::string_view cell) {
    cell = trim(cell);
    if (const auto slash = cell.find_last_of("/\\"); slash != std::string_view::npos) cell = cell.substr(slash + 1);
    if (cell.ends_with(".java")) cell.remove_suffix(5);
    if (const auto sep = cell.find_last_of(".$"); sep != std::string_view::npos) cell = cell.substr(sep + 1);
    return std::string(cell);
}

IngestResult ingest_cam_csv(const fs::path& path, const ColumnMap& columns, const IngestOptions& options) {
    return ingest_cam_csv_text(read_file(path), path.generic_string(), columns, options);
}

IngestResult ingest_cam_csv_text(std::string_view text, const std::string& origin, const ColumnMap& columns,
                                 const IngestOptions& options) {
    bool complete = true;
    const std::vector<detail::CsvRow> rows = detail::read_csv(text, &complete);
    if (rows.empty()) throw MissingColumn(origin + ": missing header row");

    const std::vector<std::string>& header = rows.front().fields;
    auto column = [&](const std::string& name, bool required) -> std::optional<std::size_t> {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (trim(header[i]) == name) return i;
        }
        if (required) throw MissingColumn(origin + ": missing column '" + name + "'");
        return std::nullopt;
    };
    const std::size_t name_col = *column(columns.name, true);
    const std::array<std::size_t, MetricValues::kCount> metric_cols = {
        *column(columns.lcom5, true),    *column(columns.nhd, true),      *column(columns.cc, true),
        *column(columns.coco_total, true), *column(columns.coco_avg, true), *column(columns.coco_max, true),
        *column(columns.coco_min, true)};
    const std::size_t loc_col = *column(columns.loc, true);
    const std::size_t blank_col = *column(columns.blank, true);
    const auto static_col = columns.has_static ? column(*columns.has_static, true) : std::nullopt;
    const auto repo_col = columns.repository ? column(*columns.repository, true) : std::nullopt;

    IngestResult result;
    if (!static_col) {
        result.warnings.push_back(origin + ": no static-member column mapped; treating every class as having none");
    }
    std::set<std::string> repositories;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const detail::CsvRow& row = rows[r];
        ++result.inputs_seen;
        auto skip = [&](std::string reason) {
            ++result.inputs_skipped;
            result.diagnostics.push_back(Diagnostic{origin, row.line, std::move(reason)});
        };
        if (!complete && r + 1 == rows.size()) {
            skip("unterminated quoted field");
            continue;
        }
        if (row.fields.size() != header.size()) {
            skip("expected " + std::to_string(header.size()) + " fields, found " + std::to_string(row.fields.size()));
            continue;
        }
        ClassRecord rec;
        const std::string name = simple_class_name(row.fields[name_col]);
        if (name.empty()) {
            skip("empty class name");
            continue;
        }
        rec.qualified_name = std::string(trim(row.fields[name_col]));
        rec.origin = "csv:" + origin + ":" + std::to_string(row.line);

        std::array<std::optional<double>, MetricValues::kCount> values;
        bool bad = false;
        for (std::size_t m = 0; m < MetricValues::kCount && !bad; ++m) {
            double v = 0;
            switch (parse_number(row.fields[metric_cols[m]], v)) {
            case CellStatus::Value: values[m] = v; break;
            case CellStatus::Empty: break;
            case CellStatus::Bad:
                skip("unparsable " + std::string(kMetricNames[m]) + " value");
                bad = true;
                break;
            }
        }
        if (bad) continue;
        rec.metrics = MetricValues{values[0], values[1], values[2], values[3], values[4], values[5], values[6]};

        double loc = 0;
        double blank = 0;
        if (parse_number(row.fields[loc_col], loc) != CellStatus::Value ||
            parse_number(row.fields[blank_col], blank) != CellStatus::Value || loc < 0 || blank < 0 ||
            blank > loc) {
            skip("invalid LoC/blank values");
            continue;
        }
        rec.loc = std::lround(loc);
        rec.blank_lines = std::lround(blank);
        rec.ncloc = rec.loc - rec.blank_lines;
        rec.has_static_member = static_col && truthy(row.fields[*static_col]);
        if (repo_col) {
            rec.repository = std::string(trim(row.fields[*repo_col]));
            repositories.insert(rec.repository);
        }
        rec.label = classify(name, rec.has_static_member, options.rules, options.excluded);
        result.records.push_back(std::move(rec));
    }
    result.repositories = repositories.size();
    return result;
}

std::size_t nearest_rank(std::size_t n, double p) {
    const double scaled = p * static_cast<double>(n);
    const double nearest = std::round(scaled);
    double rank = std::abs(scaled - nearest) <= 1e-9 * std::max(1.0, std::abs(scaled)) ? nearest : std::ceil(scaled);
    rank = std::clamp(rank, 1.0, static_cast<double>(n));
    return static_cast<std::size_t>(rank);
}

double quantile(std::span<const double> sorted_values, double p) {
    if (sorted_values.empty()) throw EmptyInput("quantile of an empty sequence");
    return sorted_values[nearest_rank(sorted_values.size(), p) - 1];
}

namespace {

FilterResult filter_impl(std::vector<ClassRecord> records, std::optional<FilterBounds> bounds,
                         std::optional<std::pair<double, double>> frozen, bool lenient) {
    FilterResult out;
    out.input_count = records.size();

    std::vector<ClassRecord> defined;
    defined.reserve(records.size());
    for (ClassRecord& r : records) {
        if (!lenient && !r.metrics.complete()) {
            ++out.dropped_metric;
        } else {
            defined.push_back(std::move(r));
        }
    }

    if (frozen) {
        out.ncloc_low = frozen->first;
        out.ncloc_high = frozen->second;
    } else if (!defined.empty()) {
        std::vector<double> ncloc;
        ncloc.reserve(defined.size());
        for (const ClassRecord& r : defined) ncloc.push_back(static_cast<double>(r.ncloc));
        std::sort(ncloc.begin(), ncloc.end());
        out.ncloc_low = quantile(ncloc, bounds->q_low);
        out.ncloc_high = quantile(ncloc, bounds->q_high);
    }

    for (ClassRecord& r : defined) {
        const double v = static_cast<double>(r.ncloc);
        if (v < *out.ncloc_low || v > *out.ncloc_high) {
            ++out.dropped_quantile;
        } else if (r.label.group == Group::Dropped) {
            ++out.dropped_label;
        } else {
            out.kept.push_back(std::move(r));
        }
    }
    return out;
}

}  // namespace

FilterResult filter_records(std::vector<ClassRecord> records, FilterBounds bounds, bool lenient) {
    return filter_impl(std::move(records), bounds, std::nullopt, lenient);
}

FilterResult filter_records_with_thresholds(std::vector<ClassRecord> records, double ncloc_low, double ncloc_high,
                                            bool lenient) {
    return filter_impl(std::move(records), std::nullopt, std::make_pair(ncloc_low, ncloc_high), lenient);
}

std::optional<double> stable_mean(std::vector<double> values) {
    if (values.empty()) return std::nullopt;
    std::sort(values.begin(), values.end());
    double sum = 0.0;
    double compensation = 0.0;
    for (double v : values) {
        const double t = sum + v;
        if (std::abs(sum) >= std::abs(v)) {
            compensation += (sum - t) + v;
        } else {
            compensation += (v - t) + sum;
        }
        sum = t;
    }
    return (sum + compensation) / static_cast<double>(values.size());
}

std::vector<GroupSummary> aggregate_groups(std::span<const ClassRecord> records) {
    std::vector<GroupSummary> out;
    for (Group g : kReportGroups) {
        GroupSummary s;
        s.group = g;
        std::array<std::vector<double>, MetricValues::kCount> columns;
        for (const ClassRecord& r : records) {
            if (r.label.group != g) continue;
            ++s.class_count;
            s.loc_total += r.loc;
            const auto values = r.metrics.as_array();
            for (std::size_t m = 0; m < values.size(); ++m) {
                if (values[m]) columns[m].push_back(*values[m]);
            }
        }
        if (s.class_count > 0) {
            s.loc_per_class = static_cast<double>(s.loc_total) / static_cast<double>(s.class_count);
        }
        for (std::size_t m = 0; m < columns.size(); ++m) s.means[m] = stable_mean(std::move(columns[m]));
        out.push_back(s);
    }
    return out;
}

}  // namespace functor_audit
