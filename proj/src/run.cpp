#include <fstream>
#include <iostream>
#include <memory>

#include "functor_audit/report.hpp"

namespace functor_audit {

void RunConfig::validate() const {
    if (inputs.empty()) throw ConfigError("at least one --input is required");
    if (!(q_low >= 0.0 && q_low < q_high && q_high <= 1.0)) {
        throw ConfigError("quantile bounds must satisfy 0 <= q-low < q-high <= 1");
    }
    if (mode == InputMode::Source && cam_map) throw ConfigError("--cam-map only applies to --mode=cam");
}

namespace {

IngestResult ingest(const RunConfig& config, const IngestOptions& options) {
    if (config.mode == InputMode::Source) return ingest_sources(config.inputs, options);

    ColumnMap columns;
    if (config.cam_map) {
        try {
            columns = ColumnMap::load(*config.cam_map);
        } catch (const IoError&) {
            throw;
        } catch (const std::runtime_error& e) {
            throw ConfigError(e.what());
        }
    }
    IngestResult all;
    for (const auto& path : config.inputs) {
        IngestResult part = ingest_cam_csv(path, columns, options);
        all.inputs_seen += part.inputs_seen;
        all.inputs_skipped += part.inputs_skipped;
        all.repositories += part.repositories;
        for (auto& r : part.records) all.records.push_back(std::move(r));
        for (auto& d : part.diagnostics) all.diagnostics.push_back(std::move(d));
        for (auto& w : part.warnings) all.warnings.push_back(std::move(w));
    }
    return all;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& diag) {
    std::unique_ptr<std::ofstream> diag_file;
    std::ostream* log = &diag;
    try {
        config.validate();
        IngestOptions options;
        options.excluded = config.excluded;
        options.jobs = config.jobs;
        if (config.rules) {
            try {
                options.rules = SuffixRules::load(*config.rules);
            } catch (const std::runtime_error& e) {
                throw ConfigError(e.what());
            }
        }
        if (config.diagnostics_file) {
            diag_file = std::make_unique<std::ofstream>(*config.diagnostics_file);
            if (!*diag_file) throw IoError("cannot write " + config.diagnostics_file->string());
            log = diag_file.get();
        }

        IngestResult ingested = ingest(config, options);
        for (const Diagnostic& d : ingested.diagnostics) *log << d.to_string() << "\n";
        for (const std::string& w : ingested.warnings) *log << "WARN " << w << "\n";

        const std::size_t classes_in = ingested.records.size();
        FilterResult filtered =
            filter_records(std::move(ingested.records), FilterBounds{config.q_low, config.q_high}, config.lenient);
        const std::vector<GroupSummary> summaries = aggregate_groups(filtered.kept);

        RunTally tally;
        tally.inputs_seen = ingested.inputs_seen;
        tally.inputs_skipped = ingested.inputs_skipped;
        tally.repositories = ingested.repositories;
        tally.classes_in = classes_in;
        tally.classes_kept = filtered.kept.size();
        tally.dropped_metric = filtered.dropped_metric;
        tally.dropped_quantile = filtered.dropped_quantile;
        tally.dropped_label = filtered.dropped_label;
        tally.ncloc_low = filtered.ncloc_low;
        tally.ncloc_high = filtered.ncloc_high;

        RenderOptions render;
        render.styled = config.styled && config.format == OutputFormat::Text;
        render.tally = tally;
        out << render_tables(summaries, config.format, render);
        out.flush();

        if (config.charts_dir && emit_chart_data(summaries, *config.charts_dir).empty()) {
            *log << "WARN no classes left to chart; no chart files written\n";
        }

        if (ingested.inputs_seen > 0 && ingested.inputs_skipped * 10 > ingested.inputs_seen) {
            *log << "WARN " << ingested.inputs_skipped << " of " << ingested.inputs_seen
                 << " inputs were skipped\n";
            return kExitHighSkipRate;
        }
        return kExitOk;
    } catch (const ConfigError& e) {
        diag << "audit: configuration error: " << e.what() << "\n";
    } catch (const IoError& e) {
        diag << "audit: I/O error: " << e.what() << "\n";
    } catch (const MissingColumn& e) {
        diag << "audit: input error: " << e.what() << "\n";
    }
    return kExitFatal;
}

}  // namespace functor_audit
