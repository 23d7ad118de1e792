#include "saso/core/statistics.hpp"
#include "saso/harness/csv.hpp"
#include "saso/harness/peaks.hpp"
#include "saso/harness/run.hpp"
#include "saso/metrics/stability.hpp"

#include <doctest.h>

#include <vector>

using namespace saso;
using harness::PeakDirection;
using harness::PeakReport;
using harness::TickInterval;

TEST_CASE("a constant series has no peaks") {
    MetricSeries flat("flat");
    for (Tick t = 0; t < 100; ++t) flat.append(t, 2.0);
    const PeakReport report = harness::detect_peaks(flat, {0, 49}, 3.0, {{50, 99}});
    CHECK(report.peak_ticks.empty());
    CHECK_FALSE(report.verdicts[0]);
    CHECK(report.baseline_std == 0.0);
}

TEST_CASE("a single spike on a flat baseline is the only peak") {
    MetricSeries spike("spike");
    for (Tick t = 0; t < 100; ++t) spike.append(t, t == 70 ? 12.0 : 2.0);
    const PeakReport report = harness::detect_peaks(spike, {0, 49}, 3.0, {{60, 80}});
    CHECK(report.peak_ticks == std::vector<Tick>{70});
    CHECK(report.all_detected());
}

TEST_CASE("two injected spikes are detected in their windows") {
    MetricSeries series("two");
    Rng rng(77);
    for (Tick t = 0; t < 1000; ++t) {
        double v = rng.uniform(0.0, 1.0);
        if (t == 250 || t == 750) v += 10.0;
        series.append(t, v);
    }
    const PeakReport report = harness::detect_peaks(series, {0, 200}, 3.0, {{240, 260}, {740, 760}});
    REQUIRE(report.verdicts.size() == 2);
    CHECK(report.all_detected());
    const PeakReport wrong_window = harness::detect_peaks(series, {0, 200}, 3.0, {{100, 120}});
    CHECK_FALSE(wrong_window.all_detected());
}

TEST_CASE("downward excursions need the matching direction") {
    MetricSeries dip("dip");
    Rng rng(5);
    for (Tick t = 0; t < 400; ++t) {
        double v = 5.0 + rng.uniform(-0.1, 0.1);
        if (t == 300) v = 1.0;
        dip.append(t, v);
    }
    CHECK_FALSE(harness::detect_peaks(dip, {0, 250}, 3.0, {{290, 310}}).all_detected());
    CHECK(harness::detect_peaks(dip, {0, 250}, 3.0, {{290, 310}}, PeakDirection::Below).all_detected());
    CHECK(harness::detect_peaks(dip, {0, 250}, 3.0, {{290, 310}}, PeakDirection::Both).all_detected());
}

TEST_CASE("csv output is byte-stable") {
    MetricSeries series("demo");
    series.append(0, 1.0);
    series.append(3, 0.123456789123);
    series.append(4, 2.0 / 3.0);
    const std::string expected = "tick,value\n0,1\n3,0.123456789\n4,0.666666667\n";
    CHECK(harness::metric_csv(series) == expected);

    const std::string summary = harness::summary_text({&series});
    CHECK(summary == "metric=demo, mean=0.596707819, min=0.123456789, max=1\n");
}

TEST_CASE("run emits every metric past its warm-up and is reproducible") {
    harness::RunConfig config;
    config.scenario = "flocking";
    config.seed = 4;
    config.ticks = 90;
    config.overrides = {{"shot_tick", 50.0}};
    const harness::RunResult first = harness::run(config);
    const harness::RunResult second = harness::run(config);

    const auto& params = first.metric_params;
    CHECK(params.stability.fluctuation_window == 10);
    CHECK(params.stability.epsilon == 1.0);
    CHECK(first.at("coherence").points().front().tick == 0);
    CHECK(first.at("stability").points().front().tick == metrics::stability_warmup(params.stability));
    CHECK(first.at("global_usage").points().front().tick == params.usage_window);
    CHECK(first.at("transferability").points().front().tick == 40); // lag-1 environment
    CHECK(first.at("coherence").size() == 91);

    for (const auto& [name, series] : first.series) {
        const MetricSeries& other = second.at(name);
        REQUIRE(series.size() == other.size());
        for (std::size_t i = 0; i < series.size(); ++i) {
            CHECK(series.points()[i].tick == other.points()[i].tick);
            CHECK(series.points()[i].value == other.points()[i].value);
        }
    }
}

TEST_CASE("per-parameter usage series appear only for multi-entry configurations") {
    harness::RunConfig traffic;
    traffic.scenario = "traffic";
    traffic.seed = 2;
    traffic.ticks = 60;
    const harness::RunResult result = harness::run(traffic);
    CHECK(result.series.count("global_usage_0") == 1);
    CHECK(result.series.count("global_usage_3") == 1);
    CHECK(result.series.count("average_usage_2") == 1);

    harness::RunConfig life;
    life.scenario = "life";
    life.seed = 2;
    life.ticks = 70;
    life.overrides = {{"rows", 12.0}, {"cols", 12.0}};
    const harness::RunResult life_result = harness::run(life);
    CHECK(life_result.series.count("global_usage_0") == 0);
    CHECK(life_result.series.count("global_usage") == 1);
}

TEST_CASE("config validation") {
    harness::RunConfig config;
    config.scenario = "nothing";
    CHECK_THROWS_AS((void)harness::run(config), std::invalid_argument);
    CHECK_THROWS_AS((void)harness::default_metric_params("nothing"), std::invalid_argument);
    CHECK(harness::default_ticks("traffic") == 1200);
    CHECK(harness::default_ticks("life") == 1000);

    harness::RunConfig bad_param;
    bad_param.scenario = "life";
    bad_param.ticks = 70;
    bad_param.overrides = {{"typo_key", 1.0}};
    CHECK_THROWS_AS((void)harness::run(bad_param), std::invalid_argument);

    harness::RunConfig too_short;
    too_short.scenario = "life";
    too_short.ticks = 30; // below the stability warm-up
    CHECK_THROWS_AS((void)harness::run(too_short), std::invalid_argument);
}
