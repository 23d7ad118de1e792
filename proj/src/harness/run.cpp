#include "saso/harness/run.hpp"

#include "saso/core/configuration_series.hpp"
#include "saso/harness/csv.hpp"
#include "saso/metrics/adaptation.hpp"
#include "saso/metrics/clustering.hpp"
#include "saso/scenarios/flocking.hpp"
#include "saso/scenarios/life.hpp"
#include "saso/scenarios/traffic.hpp"

#include <filesystem>
#include <stdexcept>

namespace saso::harness {

namespace {

// Keys consumed by the harness itself; everything else goes to the scenario.
const char* kMetricKeys[] = {"stability_m", "stability_l", "stability_epsilon",
                             "usage_window", "transfer_window", "transfer_bins"};

MetricParams metric_params_from(const std::string& scenario, const scenarios::ParamMap& overrides) {
    MetricParams params = default_metric_params(scenario);
    auto get = [&overrides](const char* key, double fallback) {
        auto it = overrides.find(key);
        return it == overrides.end() ? fallback : it->second;
    };
    params.stability.fluctuation_window =
        static_cast<int>(get("stability_m", params.stability.fluctuation_window));
    params.stability.density_window =
        static_cast<int>(get("stability_l", params.stability.density_window));
    params.stability.epsilon = get("stability_epsilon", params.stability.epsilon);
    params.usage_window = static_cast<int>(get("usage_window", params.usage_window));
    params.transfer.window = static_cast<int>(get("transfer_window", params.transfer.window));
    params.transfer.bin_count = static_cast<int>(get("transfer_bins", params.transfer.bin_count));
    return params;
}

scenarios::ParamMap scenario_params_from(const scenarios::ParamMap& overrides) {
    scenarios::ParamMap params = overrides;
    for (const char* key : kMetricKeys) params.erase(key);
    return params;
}

} // namespace

MetricParams default_metric_params(const std::string& scenario) {
    MetricParams params;
    if (scenario == "traffic") {
        params.stability = {15, 15, 2.0, 1e-3};
    } else if (scenario == "flocking") {
        params.stability = {10, 10, 1.0, 1e-3};
    } else if (scenario == "life") {
        params.stability = {15, 15, 0.05, 1e-3};
    } else {
        throw std::invalid_argument("unknown scenario: " + scenario);
    }
    params.usage_window = 5;
    params.transfer = {40, 100};
    return params;
}

Tick default_ticks(const std::string& scenario) {
    if (scenario == "traffic") return 1200;
    if (scenario == "flocking" || scenario == "life") return 1000;
    throw std::invalid_argument("unknown scenario: " + scenario);
}

std::unique_ptr<scenarios::Scenario> make_scenario(const std::string& name,
                                                   const scenarios::ParamMap& params,
                                                   std::uint64_t seed) {
    if (name == "traffic") return std::make_unique<scenarios::TrafficScenario>(params, seed);
    if (name == "flocking") return std::make_unique<scenarios::FlockingScenario>(params, seed);
    if (name == "life") return std::make_unique<scenarios::LifeScenario>(params, seed);
    throw std::invalid_argument("unknown scenario: " + name);
}

const MetricSeries& RunResult::at(const std::string& name) const {
    auto it = series.find(name);
    if (it == series.end()) throw std::out_of_range("RunResult: no series named " + name);
    return it->second;
}

RunResult run(const RunConfig& config) {
    const MetricParams metric_params = metric_params_from(config.scenario, config.overrides);
    const Tick ticks = config.ticks >= 0 ? config.ticks : default_ticks(config.scenario);
    if (metric_params.transfer.bin_count < 2)
        throw std::invalid_argument("run: transferability bin count must be >= 2");

    auto scenario = make_scenario(config.scenario, scenario_params_from(config.overrides), config.seed);
    const auto dimension = scenario->configuration_dimension();
    const auto agents = scenario->agent_count();
    const metrics::UsageBounds bounds = scenario->usage_bounds();

    const Tick transfer_warmup =
        std::max(scenario->system_start(), scenario->environment_start()) + metric_params.transfer.window - 1;
    const Tick warmup = std::max({metrics::stability_warmup(metric_params.stability),
                                  metrics::usage_warmup(metric_params.usage_window), transfer_warmup});
    if (ticks < warmup)
        throw std::invalid_argument("run: " + std::to_string(ticks) +
                                    " ticks is not enough history for every metric (need >= " +
                                    std::to_string(warmup) + ")");

    ConfigurationSeries series(dimension, agents);
    metrics::StabilityPipeline stability(agents, metric_params.stability);
    metrics::ComplexitySignal system_complexity("system", scenario->system_start());
    metrics::ComplexitySignal environment_complexity("environment", scenario->environment_start());

    RunResult result;
    result.scenario = config.scenario;
    result.seed = config.seed;
    result.ticks = ticks;
    result.metric_params = metric_params;

    const std::map<std::string, double> stability_tags = {
        {"M", static_cast<double>(metric_params.stability.fluctuation_window)},
        {"L", static_cast<double>(metric_params.stability.density_window)},
        {"epsilon", metric_params.stability.epsilon}};
    const std::map<std::string, double> usage_tags = {
        {"L", static_cast<double>(metric_params.usage_window)}};
    const std::map<std::string, double> transfer_tags = {
        {"L", static_cast<double>(metric_params.transfer.window)},
        {"bins", static_cast<double>(metric_params.transfer.bin_count)}};

    MetricSeries coherence("coherence");
    MetricSeries stability_series("stability", stability_tags);
    MetricSeries variability("variability");
    MetricSeries global_usage("global_usage", usage_tags);
    MetricSeries average_usage("average_usage", usage_tags);
    MetricSeries transferability_series("transferability", transfer_tags);
    std::vector<MetricSeries> global_by_param;
    std::vector<MetricSeries> average_by_param;
    for (Eigen::Index j = 0; j < dimension; ++j) {
        global_by_param.emplace_back("global_usage_" + std::to_string(j), usage_tags);
        average_by_param.emplace_back("average_usage_" + std::to_string(j), usage_tags);
    }

    metrics::HistogramSpec system_spec = scenario->system_histogram();
    metrics::HistogramSpec environment_spec = scenario->environment_histogram();
    if (config.scenario == "flocking") {
        // Continuous observables follow the configured bucket count.
        system_spec.bin_count = metric_params.transfer.bin_count;
        environment_spec.bin_count = metric_params.transfer.bin_count;
    }

    for (Tick t = 0; t <= ticks; ++t) {
        if (t > 0) scenario->step();

        const Eigen::MatrixXd population = scenario->configurations();
        for (std::size_t agent = 0; agent < agents; ++agent)
            series.record(t, agent, population.col(static_cast<Eigen::Index>(agent)));

        coherence.append(t, metrics::configuration_coherence(population));
        variability.append(t, metrics::configuration_variability(population));

        if (auto nu = stability.on_tick(series, t)) stability_series.append(t, *nu);

        if (t >= metrics::usage_warmup(metric_params.usage_window)) {
            double global_sum = 0.0;
            double average_sum = 0.0;
            for (Eigen::Index j = 0; j < dimension; ++j) {
                const auto g = metrics::global_parameter_usage(series, j, t, metric_params.usage_window, bounds);
                const auto a = metrics::average_parameter_usage(series, j, t, metric_params.usage_window, bounds);
                global_by_param[static_cast<std::size_t>(j)].append(t, g.value);
                average_by_param[static_cast<std::size_t>(j)].append(t, a.value);
                global_sum += g.value;
                average_sum += a.value;
            }
            global_usage.append(t, global_sum / static_cast<double>(dimension));
            average_usage.append(t, average_sum / static_cast<double>(dimension));
        }

        if (t >= scenario->system_start())
            system_complexity.append(metrics::complexity_of_samples(scenario->system_observation(), system_spec));
        if (t >= scenario->environment_start())
            environment_complexity.append(
                metrics::complexity_of_samples(scenario->environment_observation(), environment_spec));

        if (t >= transfer_warmup)
            transferability_series.append(
                t, metrics::transferability(system_complexity, environment_complexity, t, metric_params.transfer));
    }

    // The raw complexity signals ride along for inspection; transferability
    // is their windowed correlation.
    MetricSeries system_complexity_series("system_complexity", transfer_tags);
    MetricSeries environment_complexity_series("environment_complexity", transfer_tags);
    for (Tick t = scenario->system_start(); t <= ticks; ++t)
        system_complexity_series.append(t, system_complexity.at(t));
    for (Tick t = scenario->environment_start(); t <= ticks; ++t)
        environment_complexity_series.append(t, environment_complexity.at(t));

    result.series.emplace("coherence", std::move(coherence));
    result.series.emplace("stability", std::move(stability_series));
    result.series.emplace("variability", std::move(variability));
    result.series.emplace("global_usage", std::move(global_usage));
    result.series.emplace("average_usage", std::move(average_usage));
    result.series.emplace("transferability", std::move(transferability_series));
    result.series.emplace("system_complexity", std::move(system_complexity_series));
    result.series.emplace("environment_complexity", std::move(environment_complexity_series));
    if (dimension > 1) {
        for (Eigen::Index j = 0; j < dimension; ++j) {
            result.series.emplace(global_by_param[static_cast<std::size_t>(j)].name(),
                                  std::move(global_by_param[static_cast<std::size_t>(j)]));
            result.series.emplace(average_by_param[static_cast<std::size_t>(j)].name(),
                                  std::move(average_by_param[static_cast<std::size_t>(j)]));
        }
    }

    std::vector<const MetricSeries*> ordered;
    for (const auto& [name, metric_series] : result.series) ordered.push_back(&metric_series);
    result.summary = summary_text(ordered);

    if (!config.output_dir.empty()) {
        std::filesystem::create_directories(config.output_dir);
        for (const auto& [name, metric_series] : result.series) {
            const std::string path = config.output_dir + "/" + config.scenario + "_" + name + ".csv";
            write_file(path, metric_csv(metric_series));
        }
        write_file(config.output_dir + "/" + config.scenario + "_summary.txt", result.summary);
    }
    return result;
}

} // namespace saso::harness
