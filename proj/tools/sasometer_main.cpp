#include "saso/harness/run.hpp"
#include "saso/harness/selfcheck.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

saso::scenarios::ParamMap parse_params(const std::vector<std::string>& entries) {
    saso::scenarios::ParamMap params;
    for (const std::string& entry : entries) {
        const auto eq = entry.find('=');
        if (eq == std::string::npos || eq == 0)
            throw CLI::ValidationError("--param", "expected key=value, got '" + entry + "'");
        params[entry.substr(0, eq)] = std::stod(entry.substr(eq + 1));
    }
    return params;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Runtime behaviour metrics for self-adaptive multi-agent systems"};
    app.require_subcommand(1);

    // run: execute one seeded scenario and write the metric time series.
    auto* run_cmd = app.add_subcommand("run", "run a scenario and write metric CSVs");
    saso::harness::RunConfig config;
    std::vector<std::string> param_entries;
    config.output_dir = "out";
    run_cmd->add_option("--scenario", config.scenario, "traffic, flocking or life")
        ->default_val("traffic");
    run_cmd->add_option("--seed", config.seed, "RNG seed")->default_val(1);
    run_cmd->add_option("--ticks", config.ticks, "run length (default: scenario-specific)");
    run_cmd->add_option("--out", config.output_dir, "output directory")->default_val("out");
    run_cmd->add_option("--param", param_entries, "scenario/metric parameter override key=value")
        ->take_all();

    // check: run the acceptance suite.
    auto* check_cmd = app.add_subcommand("check", "run the acceptance suite");
    saso::harness::SelfCheckOptions options;
    std::string json_path;
    check_cmd->add_option("--seeds", options.seeds, "seeds per scenario criterion")->default_val(10);
    check_cmd->add_option("--out", options.artifact_dir, "scratch directory for run artifacts");
    check_cmd->add_option("--json", json_path, "write the failure list to this file as JSON");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run_cmd->parsed()) {
            config.overrides = parse_params(param_entries);
            const saso::harness::RunResult result = saso::harness::run(config);
            std::cout << result.summary;
            std::cout << "wrote " << result.series.size() << " metric series to " << config.output_dir
                      << "\n";
            return 0;
        }

        const auto results = saso::harness::run_acceptance(options, std::cout);
        nlohmann::json failures = nlohmann::json::array();
        for (const auto& r : results) {
            if (r.passed) continue;
            failures.push_back({{"criterion", r.id},
                                {"name", r.name},
                                {"seconds", r.seconds},
                                {"failures", r.failures}});
        }
        if (!json_path.empty()) {
            std::ofstream json_file(json_path);
            json_file << failures.dump(2) << "\n";
        } else if (!failures.empty()) {
            std::cout << failures.dump(2) << "\n";
        }
        return saso::harness::all_passed(results) ? 0 : 1;
    } catch (const std::exception& error) {
        std::cerr << "error: " << error.what() << "\n";
        return 2;
    }
}
