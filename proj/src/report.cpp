#include "functor_audit/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace functor_audit {

std::string format_3dp(double value) {
    // glibc printf rounds the exact binary value, ties to even.
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", value);
    std::string s(buf);
    if (s == "-0.000") s = "0.000";
    return s;
}

namespace {

enum class Worst { None, Highest, Lowest };

struct Column {
    std::string header;
    std::string csv_key;
    Worst worst;
    // Rendered cell per summary; empty when undefined.
    std::vector<std::string> cells;
};

constexpr int kGroupWidth = 7;
constexpr int kCellWidth = 10;

std::string pad_left(const std::string& s, int width) {
    return s.size() >= static_cast<std::size_t>(width) ? s : std::string(width - s.size(), ' ') + s;
}

std::string pad_right(const std::string& s, int width) {
    return s.size() >= static_cast<std::size_t>(width) ? s : s + std::string(width - s.size(), ' ');
}

std::string cell(const std::optional<double>& v) {
    return v ? format_3dp(*v) : std::string();
}

std::vector<const GroupSummary*> visible(std::span<const GroupSummary> summaries) {
    std::vector<const GroupSummary*> out;
    for (const GroupSummary& s : summaries) {
        if (s.class_count > 0) out.push_back(&s);
    }
    return out;
}

Column metric_column(const std::vector<const GroupSummary*>& rows, std::size_t metric, Worst worst) {
    Column c{std::string(kMetricNames[metric]), {}, worst, {}};
    c.csv_key = c.header;
    std::transform(c.csv_key.begin(), c.csv_key.end(), c.csv_key.begin(),
                   [](unsigned char ch) { return std::tolower(ch); });
    for (const GroupSummary* s : rows) c.cells.push_back(cell(s->means[metric]));
    return c;
}

// Marks are decided on the printed values so that visibly equal cells tie.
std::vector<bool> worst_marks(const Column& c) {
    std::vector<bool> marks(c.cells.size(), false);
    if (c.worst == Worst::None) return marks;
    std::optional<double> best;
    for (const std::string& s : c.cells) {
        if (s.empty()) continue;
        const double v = std::stod(s);
        if (!best || (c.worst == Worst::Highest ? v > *best : v < *best)) best = v;
    }
    for (std::size_t i = 0; i < c.cells.size(); ++i) {
        marks[i] = best && !c.cells[i].empty() && std::stod(c.cells[i]) == *best;
    }
    return marks;
}

struct Table {
    std::string title;
    std::vector<Column> columns;
};

std::vector<Table> build_tables(const std::vector<const GroupSummary*>& rows) {
    Column classes{"Classes", "classes", Worst::None, {}};
    Column loc{"LoC", "loc", Worst::None, {}};
    Column lpc{"L/C", "loc_per_class", Worst::None, {}};
    for (const GroupSummary* s : rows) {
        classes.cells.push_back(std::to_string(s->class_count));
        loc.cells.push_back(std::to_string(s->loc_total));
        lpc.cells.push_back(cell(s->loc_per_class));
    }
    return {
        Table{"Group sizes", {classes, loc, lpc}},
        Table{"Cohesion", {metric_column(rows, 0, Worst::Highest), metric_column(rows, 1, Worst::Lowest)}},
        Table{"Complexity",
              {metric_column(rows, 2, Worst::Highest), metric_column(rows, 3, Worst::Highest),
               metric_column(rows, 4, Worst::Highest), metric_column(rows, 5, Worst::Highest),
               metric_column(rows, 6, Worst::Highest)}},
    };
}

std::string optional_number(const std::optional<double>& v) {
    if (!v) return "n/a";
    std::ostringstream os;
    os << *v;
    return os.str();
}

std::string render_text(const std::vector<const GroupSummary*>& rows, const RenderOptions& options) {
    std::ostringstream os;
    const auto heading = [&](const std::string& t) {
        if (options.styled) {
            os << "\x1b[1m" << t << "\x1b[0m\n";
        } else {
            os << t << "\n";
        }
    };
    bool first = true;
    for (const Table& table : build_tables(rows)) {
        if (!first) os << "\n";
        first = false;
        heading(table.title);
        os << pad_right("Group", kGroupWidth);
        for (const Column& c : table.columns) os << pad_left(c.header, kCellWidth) << ' ';
        os << "\n";
        std::vector<std::vector<bool>> marks;
        for (const Column& c : table.columns) marks.push_back(worst_marks(c));
        for (std::size_t r = 0; r < rows.size(); ++r) {
            os << pad_right(std::string(to_string(rows[r]->group)), kGroupWidth);
            for (std::size_t c = 0; c < table.columns.size(); ++c) {
                const std::string& v = table.columns[c].cells[r];
                os << pad_left(v.empty() ? "-" : v, kCellWidth) << (marks[c][r] ? '*' : ' ');
            }
            os << "\n";
        }
    }
    if (options.tally) {
        const RunTally& t = *options.tally;
        os << "\n";
        heading("Filtering");
        os << "inputs read:            " << t.inputs_seen << "\n";
        os << "inputs skipped:         " << t.inputs_skipped << "\n";
        os << "repositories:           " << t.repositories << "\n";
        os << "classes found:          " << t.classes_in << "\n";
        os << "dropped, undefined:     " << t.dropped_metric << "\n";
        os << "dropped, NCLoC outlier: " << t.dropped_quantile << "\n";
        os << "dropped, label:         " << t.dropped_label << "\n";
        os << "classes kept:           " << t.classes_kept << "\n";
        os << "NCLoC bounds:           " << optional_number(t.ncloc_low) << " .. "
           << optional_number(t.ncloc_high) << "\n";
    }
    return os.str();
}

std::string render_csv(const std::vector<const GroupSummary*>& rows) {
    std::ostringstream os;
    const std::vector<Table> tables = build_tables(rows);
    os << "group";
    for (const Table& t : tables) {
        for (const Column& c : t.columns) os << ',' << c.csv_key;
    }
    os << "\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        os << to_string(rows[r]->group);
        for (const Table& t : tables) {
            for (const Column& c : t.columns) os << ',' << c.cells[r];
        }
        os << "\n";
    }
    return os.str();
}

std::string render_json(const std::vector<const GroupSummary*>& rows, const RenderOptions& options) {
    using nlohmann::ordered_json;
    ordered_json doc;
    doc["groups"] = ordered_json::array();
    const std::vector<Table> tables = build_tables(rows);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        ordered_json g;
        g["group"] = std::string(to_string(rows[r]->group));
        for (const Table& t : tables) {
            for (const Column& c : t.columns) {
                const std::string& v = c.cells[r];
                if (v.empty()) {
                    g[c.csv_key] = nullptr;
                } else if (c.csv_key == "classes" || c.csv_key == "loc") {
                    g[c.csv_key] = std::stoll(v);
                } else {
                    g[c.csv_key] = std::stod(v);
                }
            }
        }
        doc["groups"].push_back(g);
    }
    if (options.tally) {
        const RunTally& t = *options.tally;
        ordered_json tally;
        tally["inputs_read"] = t.inputs_seen;
        tally["inputs_skipped"] = t.inputs_skipped;
        tally["repositories"] = t.repositories;
        tally["classes_found"] = t.classes_in;
        tally["dropped_undefined_metric"] = t.dropped_metric;
        tally["dropped_ncloc_outlier"] = t.dropped_quantile;
        tally["dropped_label"] = t.dropped_label;
        tally["classes_kept"] = t.classes_kept;
        tally["ncloc_low"] = t.ncloc_low ? ordered_json(*t.ncloc_low) : ordered_json(nullptr);
        tally["ncloc_high"] = t.ncloc_high ? ordered_json(*t.ncloc_high) : ordered_json(nullptr);
        doc["tally"] = tally;
    }
    return doc.dump(2) + "\n";
}

}  // namespace

std::string render_tables(std::span<const GroupSummary> summaries, OutputFormat format,
                          const RenderOptions& options) {
    const auto rows = visible(summaries);
    switch (format) {
    case OutputFormat::Text: return render_text(rows, options);
    case OutputFormat::Csv: return render_csv(rows);
    case OutputFormat::Json: return render_json(rows, options);
    }
    return {};
}

}  // namespace functor_audit
