#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "functor_audit/report.hpp"

namespace functor_audit {

namespace fs = std::filesystem;

namespace {

constexpr int kWidth = 480;
constexpr int kHeight = 320;
constexpr int kLeft = 64;
constexpr int kRight = 16;
constexpr int kTop = 40;
constexpr int kBottom = 48;
constexpr int kPlotWidth = kWidth - kLeft - kRight;
constexpr int kPlotHeight = kHeight - kTop - kBottom;
constexpr int kBarWidth = 80;

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string tick_label(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

// Axis top: the smallest multiple of a 1/2/2.5/5 x 10^n step that covers
// the largest bar, aiming for about four intervals.
double axis_max(double largest, double* step_out) {
    if (largest <= 0) {
        *step_out = 0.25;
        return 1.0;
    }
    const double raw = largest / 4.0;
    const double magnitude = std::pow(10.0, std::floor(std::log10(raw)));
    const double normalized = raw / magnitude;
    double step = 10.0;
    for (double candidate : {1.0, 2.0, 2.5, 5.0, 10.0}) {
        if (normalized <= candidate) {
            step = candidate;
            break;
        }
    }
    step *= magnitude;
    *step_out = step;
    return step * std::ceil(largest / step - 1e-12);
}

std::optional<double> printed_mean(const GroupSummary& s, std::size_t metric) {
    if (s.class_count == 0 || !s.means[metric]) return std::nullopt;
    return std::stod(format_3dp(*s.means[metric]));
}

const GroupSummary* find_group(std::span<const GroupSummary> summaries, Group g) {
    for (const GroupSummary& s : summaries) {
        if (s.group == g) return &s;
    }
    return nullptr;
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot write " + path.string());
    out << content;
    if (!out) throw IoError("cannot write " + path.string());
}

}  // namespace

const std::vector<ChartSpec>& chart_specs() {
    static const std::vector<ChartSpec> specs = {
        {"lcom5", "Average LCOM5 per group", 0},
        {"nhd", "Average NHD per group", 1},
        {"coco", "Average total CoCo per group", 3},
        {"cc", "Average total CC per group", 2},
    };
    return specs;
}

std::string render_bar_chart_svg(std::span<const GroupSummary> summaries, const ChartSpec& spec) {
    std::array<std::optional<double>, kReportGroups.size()> values;
    double largest = 0;
    for (std::size_t i = 0; i < kReportGroups.size(); ++i) {
        if (const GroupSummary* s = find_group(summaries, kReportGroups[i])) values[i] = printed_mean(*s, spec.metric);
        if (values[i]) largest = std::max(largest, *values[i]);
    }
    double step = 0;
    const double top = axis_max(largest, &step);

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "  <rect x=\"0\" y=\"0\" width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
    os << "  <text x=\"" << kWidth / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">" << spec.title
       << "</text>\n";

    const int baseline = kTop + kPlotHeight;
    for (int i = 0; step > 0 && i * step <= top + 1e-9; ++i) {
        const double v = i * step;
        const std::string y = num(baseline - v / top * kPlotHeight);
        os << "  <line x1=\"" << kLeft << "\" y1=\"" << y << "\" x2=\"" << kLeft + kPlotWidth << "\" y2=\"" << y
           << "\" stroke=\"#dddddd\"/>\n";
        os << "  <text x=\"" << kLeft - 6 << "\" y=\"" << y << "\" text-anchor=\"end\" dominant-baseline=\"middle\">"
           << tick_label(v) << "</text>\n";
    }
    os << "  <line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << baseline
       << "\" stroke=\"black\"/>\n";
    os << "  <line x1=\"" << kLeft << "\" y1=\"" << baseline << "\" x2=\"" << kLeft + kPlotWidth << "\" y2=\""
       << baseline << "\" stroke=\"black\"/>\n";

    const int slot = kPlotWidth / static_cast<int>(kReportGroups.size());
    for (std::size_t i = 0; i < kReportGroups.size(); ++i) {
        const int cx = kLeft + slot * static_cast<int>(i) + slot / 2;
        const std::string name(to_string(kReportGroups[i]));
        if (values[i]) {
            const double h = std::max(0.0, *values[i]) / top * kPlotHeight;
            os << "  <rect class=\"bar\" data-group=\"" << name << "\" x=\"" << cx - kBarWidth / 2 << "\" y=\""
               << num(baseline - h) << "\" width=\"" << kBarWidth << "\" height=\"" << num(h)
               << "\" fill=\"#4c72b0\"/>\n";
            os << "  <text x=\"" << cx << "\" y=\"" << num(baseline - h - 4) << "\" text-anchor=\"middle\">"
               << format_3dp(*values[i]) << "</text>\n";
        } else {
            os << "  <text x=\"" << cx << "\" y=\"" << baseline - 4 << "\" text-anchor=\"middle\">n/a</text>\n";
        }
        os << "  <text x=\"" << cx << "\" y=\"" << baseline + 18 << "\" text-anchor=\"middle\">" << name
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::vector<fs::path> emit_chart_data(std::span<const GroupSummary> summaries, const fs::path& dir) {
    bool any = false;
    for (const GroupSummary& s : summaries) any |= s.class_count > 0;
    if (!any) return {};

    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create chart directory " + dir.string() + ": " + ec.message());

    std::vector<fs::path> written;
    for (const ChartSpec& spec : chart_specs()) {
        const fs::path svg = dir / (spec.file_stem + ".svg");
        write_file(svg, render_bar_chart_svg(summaries, spec));
        written.push_back(svg);

        std::ostringstream csv;
        csv << "group,value\n";
        for (Group g : kReportGroups) {
            csv << to_string(g) << ',';
            if (const GroupSummary* s = find_group(summaries, g)) {
                if (s->class_count > 0 && s->means[spec.metric]) csv << format_3dp(*s->means[spec.metric]);
            }
            csv << "\n";
        }
        const fs::path data = dir / (spec.file_stem + ".csv");
        write_file(data, csv.str());
        written.push_back(data);
    }
    return written;
}

}  // namespace functor_audit
