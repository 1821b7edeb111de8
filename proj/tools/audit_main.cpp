// audit: cohesion/complexity study of functor-named Java classes.

#include <cstdlib>
#include <iostream>
#include <map>
#include <unistd.h>

#include <CLI11.hpp>

#include "functor_audit/report.hpp"

int main(int argc, char** argv) {
    using namespace functor_audit;

    CLI::App app{"Compare cohesion and complexity of -Er/-Or, -Utils and other Java classes"};
    app.name("audit");

    RunConfig config;
    std::string mode = "source";
    std::string excluded = "rest";
    std::string format = "text";
    std::vector<std::string> inputs;
    std::string cam_map, rules, charts, diagnostics;

    app.add_option("--mode", mode, "Input kind: Java source trees or a CAM-style metrics CSV")
        ->check(CLI::IsMember({"source", "cam"}))
        ->capture_default_str();
    app.add_option("--input", inputs, "Source root directory (source mode) or CSV file (cam mode)")
        ->required()
        ->expected(1, -1);
    app.add_option("--cam-map", cam_map, "Column mapping file for cam mode (key=Header lines)");
    app.add_option("--rules", rules, "Suffix rules file with [utils], [eror], [exclude] sections");
    app.add_option("--q-low", config.q_low, "Lower NCLoC quantile")->capture_default_str();
    app.add_option("--q-high", config.q_high, "Upper NCLoC quantile")->capture_default_str();
    app.add_option("--excluded-to", excluded, "Where exclusion-list names go")
        ->check(CLI::IsMember({"rest", "drop"}))
        ->capture_default_str();
    app.add_option("--format", format, "Report format")
        ->check(CLI::IsMember({"text", "csv", "json"}))
        ->capture_default_str();
    app.add_option("--charts", charts, "Directory for SVG bar charts and their CSV data");
    app.add_option("--diagnostics", diagnostics, "Write SKIP/WARN lines here instead of stderr");
    app.add_flag("--lenient", config.lenient, "Keep classes with undefined metrics; means skip missing values");
    app.add_option("--jobs", config.jobs, "Parser threads (0 = hardware concurrency)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitFatal;
    }

    config.mode = mode == "cam" ? InputMode::Cam : InputMode::Source;
    config.excluded = excluded == "drop" ? ExcludedPolicy::Drop : ExcludedPolicy::Rest;
    static const std::map<std::string, OutputFormat> kFormats = {
        {"text", OutputFormat::Text}, {"csv", OutputFormat::Csv}, {"json", OutputFormat::Json}};
    config.format = kFormats.at(format);
    for (const auto& in : inputs) config.inputs.emplace_back(in);
    if (!cam_map.empty()) config.cam_map = cam_map;
    if (!rules.empty()) config.rules = rules;
    if (!charts.empty()) config.charts_dir = charts;
    if (!diagnostics.empty()) config.diagnostics_file = diagnostics;
    config.styled = std::getenv("AUDIT_NO_COLOR") == nullptr && isatty(STDOUT_FILENO);

    return run(config, std::cout, std::cerr);
}
