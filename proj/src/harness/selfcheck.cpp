#include "saso/harness/selfcheck.hpp"

#include "saso/core/configuration_series.hpp"
#include "saso/core/statistics.hpp"
#include "saso/harness/csv.hpp"
#include "saso/harness/peaks.hpp"
#include "saso/harness/run.hpp"
#include "saso/metrics/adaptation.hpp"
#include "saso/metrics/clustering.hpp"
#include "saso/metrics/kernel_density.hpp"
#include "saso/metrics/stability.hpp"
#include "saso/metrics/transferability.hpp"
#include "saso/scenarios/flocking.hpp"
#include "saso/scenarios/life.hpp"
#include "saso/scenarios/traffic.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <queue>
#include <sstream>

namespace saso::harness {

namespace {

using metrics::StabilityParams;
using metrics::UsageBounds;
using scenarios::FlockingScenario;
using scenarios::LifeScenario;
using scenarios::TrafficScenario;

struct CheckLog {
    int checks = 0;
    std::vector<std::string> failures;

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) failures.push_back(what);
    }

    void expect_near(double got, double want, double tol, const std::string& what) {
        ++checks;
        if (!(std::abs(got - want) <= tol)) {
            std::ostringstream msg;
            msg << what << ": got " << got << ", want " << want << " (tol " << tol << ")";
            failures.push_back(msg.str());
        }
    }

    template <typename Exception, typename Fn>
    void expect_throws(Fn&& fn, const std::string& what) {
        ++checks;
        try {
            fn();
        } catch (const Exception&) {
            return;
        } catch (...) {
            failures.push_back(what + ": wrong exception type");
            return;
        }
        failures.push_back(what + ": no exception");
    }
};

Eigen::MatrixXd columns_1d(std::initializer_list<double> values) {
    Eigen::MatrixXd m(1, static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (double v : values) m(0, i++) = v;
    return m;
}

ConfigurationSeries series_1d(const std::vector<std::vector<double>>& per_tick_agent_values) {
    const auto agents = per_tick_agent_values.front().size();
    ConfigurationSeries series(1, agents);
    for (std::size_t t = 0; t < per_tick_agent_values.size(); ++t)
        for (std::size_t a = 0; a < agents; ++a)
            series.record(static_cast<Tick>(t), a,
                          Eigen::VectorXd::Constant(1, per_tick_agent_values[t][a]));
    return series;
}

// ---- independent oracles -------------------------------------------------

// Minimal best partition of column points into at most k clusters: cost is
// the plain distance sum to each cluster's mean, the k_means objective.
double exhaustive_partition_cost(const Eigen::MatrixXd& points, int k) {
    const int n = static_cast<int>(points.cols());
    std::vector<int> assignment(static_cast<std::size_t>(n), 0);
    double best = std::numeric_limits<double>::infinity();

    std::function<void(int, int)> recurse = [&](int index, int used) {
        if (index == n) {
            double cost = 0.0;
            for (int c = 0; c < used; ++c) {
                Eigen::VectorXd mean = Eigen::VectorXd::Zero(points.rows());
                int members = 0;
                for (int p = 0; p < n; ++p)
                    if (assignment[static_cast<std::size_t>(p)] == c) {
                        mean += points.col(p);
                        ++members;
                    }
                mean /= members;
                for (int p = 0; p < n; ++p)
                    if (assignment[static_cast<std::size_t>(p)] == c) cost += (points.col(p) - mean).norm();
            }
            best = std::min(best, cost);
            return;
        }
        const int limit = std::min(used + 1, k);
        for (int c = 0; c < limit; ++c) {
            assignment[static_cast<std::size_t>(index)] = c;
            recurse(index + 1, std::max(used, c + 1));
        }
    };
    recurse(0, 0);
    return best;
}

// One Game of Life step on a toroidal grid, written from the rules alone.
std::vector<std::uint8_t> life_oracle_step(const std::vector<std::uint8_t>& grid, int rows, int cols) {
    std::vector<std::uint8_t> next(grid.size(), 0);
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            int alive_neighbours = 0;
            for (int dr = -1; dr <= 1; ++dr)
                for (int dc = -1; dc <= 1; ++dc) {
                    if (dr == 0 && dc == 0) continue;
                    const int rr = (r + dr + rows) % rows;
                    const int cc = (c + dc + cols) % cols;
                    alive_neighbours += grid[static_cast<std::size_t>(rr * cols + cc)];
                }
            const bool alive = grid[static_cast<std::size_t>(r * cols + c)] != 0;
            bool next_alive = false;
            if (alive)
                next_alive = alive_neighbours == 2 || alive_neighbours == 3;
            else
                next_alive = alive_neighbours == 3;
            next[static_cast<std::size_t>(r * cols + c)] = next_alive ? 1 : 0;
        }
    }
    return next;
}

// Hop distance on the traffic street network, rebuilt from its published
// shape (3 rows, 10 columns, 4-neighbour grid).
int traffic_hops_oracle(int from, int to) {
    constexpr int rows = 3;
    constexpr int cols = 10;
    std::vector<int> dist(rows * cols, -1);
    std::queue<int> frontier;
    dist[static_cast<std::size_t>(from)] = 0;
    frontier.push(from);
    while (!frontier.empty()) {
        const int v = frontier.front();
        frontier.pop();
        const int r = v / cols;
        const int c = v % cols;
        const int candidates[4] = {r > 0 ? v - cols : -1, r < rows - 1 ? v + cols : -1,
                                   c > 0 ? v - 1 : -1, c < cols - 1 ? v + 1 : -1};
        for (int w : candidates)
            if (w >= 0 && dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                frontier.push(w);
            }
    }
    return dist[static_cast<std::size_t>(to)];
}

// Bisection on normalised binary entropy: the p in (0, 0.5] with E(p) = target.
double binary_entropy_inverse(double target) {
    auto entropy = [](double p) {
        return -(p * std::log(p) + (1.0 - p) * std::log(1.0 - p)) / std::log(2.0);
    };
    double lo = 1e-12;
    double hi = 0.5;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (entropy(mid) < target ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    std::ostringstream out;
    out << file.rdbuf();
    return out.str();
}

// ---- criterion bodies ----------------------------------------------------

void check_core_examples(CheckLog& log) {
    {
        ConfigurationSeries s(1, 1);
        s.record(0, 0, Eigen::VectorXd::Constant(1, 1.0));
        log.expect_near(s.value_at(0, 0)[0], 1.0, 0.0, "record/query round trip");
    }
    {
        ConfigurationSeries s(3, 1);
        log.expect_throws<std::invalid_argument>(
            [&] { s.record(0, 0, Eigen::VectorXd::Zero(2)); }, "record dimension mismatch");
    }
    {
        ConfigurationSeries s(1, 2);
        s.record(0, 0, Eigen::VectorXd::Zero(1));
        log.expect_throws<std::invalid_argument>(
            [&] { s.record(0, 0, Eigen::VectorXd::Zero(1)); }, "record duplicate sample");
    }
    {
        ConfigurationSeries s(1, 1);
        for (Tick t = 0; t <= 9; ++t) s.record(t, 0, Eigen::VectorXd::Constant(1, static_cast<double>(t)));
        const Eigen::MatrixXd window = s.slice(Window{9, 5}, 0);
        log.expect(window.cols() == 5, "slice returns window.length vectors");
        bool ordered = true;
        for (Eigen::Index i = 0; i < 5; ++i) ordered = ordered && window(0, i) == 5.0 + i;
        log.expect(ordered, "slice ordered by tick, ticks 5..9");
        log.expect_throws<WarmupError>([&] { (void)s.slice(Window{3, 5}, 0); }, "slice warm-up error");
        const Eigen::MatrixXd first = s.slice(Window{0, 1}, 0);
        log.expect(first.cols() == 1 && first(0, 0) == 0.0, "slice window(0,1) is the tick-0 vector");
    }
    {
        const Histogram h = make_histogram(std::vector<double>{0.0, 0.5, 1.0}, 2, 0.0, 1.0);
        log.expect(h.counts == std::vector<std::int64_t>({1, 2}), "histogram top-bin clamp {0,0.5,1}");
        const Histogram h2 = make_histogram(std::vector<double>{0.25, 0.25, 0.25, 0.25}, 4, 0.0, 1.0);
        log.expect(h2.counts == std::vector<std::int64_t>({0, 4, 0, 0}), "histogram direct binning {0.25}x4");
        const Histogram h3 = make_histogram(std::vector<double>{-5.0, 5.0}, 2, 0.0, 1.0);
        log.expect(h3.counts == std::vector<std::int64_t>({1, 1}), "histogram clamps out-of-range values");
        log.expect(h.total() == 3 && h2.total() == 4, "histogram totals equal input length");
        log.expect_near(h.probabilities().sum(), 1.0, 1e-12, "histogram probabilities sum to 1");
    }
    {
        const MeanVariance constant = mean_and_variance(std::vector<double>{1.0, 1.0, 1.0});
        log.expect(constant.mean == 1.0 && constant.variance == 0.0, "variance of constant is exactly 0");
        const MeanVariance pair = mean_and_variance(std::vector<double>{0.0, 2.0});
        log.expect_near(pair.mean, 1.0, 1e-15, "mean of {0,2}");
        log.expect_near(pair.variance, 1.0, 1e-15, "population variance of {0,2}");
        const MeanVariance singleton = mean_and_variance(std::vector<double>{3.0});
        log.expect(singleton.mean == 3.0 && singleton.variance == 0.0, "singleton variance");
        log.expect_throws<std::invalid_argument>(
            [] { (void)mean_and_variance(std::vector<double>{}); }, "variance of empty input");
    }
}

void check_density_examples(CheckLog& log) {
    using metrics::ParzenDensity;
    {
        const ParzenDensity p(columns_1d({0.0}), 1.0);
        const double at_origin = p.density(Eigen::VectorXd::Zero(1));
        bool maximal = true;
        for (double x : {-2.0, -0.5, 0.3, 1.7})
            maximal = maximal && at_origin > p.density(Eigen::VectorXd::Constant(1, x));
        log.expect(maximal, "single-kernel density maximal at its sample");
    }
    {
        const ParzenDensity one(columns_1d({0.7}), 0.9);
        const ParzenDensity two(columns_1d({0.7, 0.7}), 0.9);
        bool same = true;
        for (double x : {-1.0, 0.0, 0.7, 2.5})
            same = same && std::abs(one.density(Eigen::VectorXd::Constant(1, x)) -
                                    two.density(Eigen::VectorXd::Constant(1, x))) < 1e-12;
        log.expect(same, "identical samples collapse to one kernel");
    }
    {
        const ParzenDensity p(columns_1d({-1.5, 1.5}), 0.8);
        bool symmetric = true;
        for (double delta : {0.2, 1.5, 2.4})
            symmetric = symmetric && std::abs(p.density(Eigen::VectorXd::Constant(1, -delta)) -
                                              p.density(Eigen::VectorXd::Constant(1, delta))) < 1e-12;
        log.expect(symmetric, "symmetric sample pair gives a density symmetric about the mean");
    }
    {
        const ParzenDensity p(columns_1d({0.3, 1.1, 2.0}), 0.5);
        const ParzenDensity q(columns_1d({0.3, 1.1, 2.0}), 0.5);
        log.expect_near(metrics::kl_divergence(p, q), 0.0, 1e-9, "KL of identical densities");
    }
    {
        const ParzenDensity p(columns_1d({0.0, 0.0, 0.0}), 1.0);
        const ParzenDensity q(columns_1d({10.0, 10.0, 10.0}), 1.0);
        // Gaussian log ratio at the sample points: 10^2 / 2.
        log.expect_near(metrics::kl_divergence(p, q), 50.0, 1e-9, "KL of separated point masses, h=1");
    }
    {
        double previous = -1.0;
        bool monotone = true;
        for (int sep = 0; sep <= 10; ++sep) {
            const metrics::ParzenDensity p(columns_1d({0.0, 0.2, -0.2}), 0.7);
            const metrics::ParzenDensity q(columns_1d({0.0 + sep, 0.2 + sep, -0.2 + sep}), 0.7);
            const double kl = metrics::kl_divergence(p, q);
            monotone = monotone && kl >= previous - 1e-12;
            previous = kl;
        }
        log.expect(monotone && previous > 1.0, "KL grows with cluster separation");
    }
}

void check_stability_examples(CheckLog& log) {
    const StabilityParams params{2, 2, 0.5, 1e-3};
    {
        std::vector<std::vector<double>> values(8, std::vector<double>{1.0, 1.0});
        const ConfigurationSeries s = series_1d(values);
        log.expect(!metrics::is_active(s, 0, 3, params), "constant configuration is inactive");
        log.expect_throws<WarmupError>([&] { (void)metrics::is_active(s, 0, 2, params); },
                                       "is_active before 2L-1 warms up");
        log.expect_near(metrics::configuration_stability(s, 7, params), 0.0, 0.0,
                        "all agents permanently inactive: nu = 0");
    }
    {
        // Step change far beyond the bandwidth between the two windows.
        std::vector<std::vector<double>> values;
        for (int t = 0; t < 4; ++t) values.push_back({t < 2 ? 0.0 : 100.0});
        const ConfigurationSeries s = series_1d(values);
        const auto current = s.slice(Window{3, 2}, 0);
        const auto previous = s.slice(Window{1, 2}, 0);
        const double kl = metrics::kl_divergence(metrics::ParzenDensity::from_samples(current),
                                                 metrics::ParzenDensity::from_samples(previous));
        log.expect(kl > params.epsilon, "step-change KL oracle exceeds epsilon");
        log.expect(metrics::is_active(s, 0, 3, params), "step change flags the agent active");
        const StabilityParams infinite{2, 2, std::numeric_limits<double>::infinity(), 1e-3};
        log.expect(!metrics::is_active(s, 0, 3, infinite), "epsilon = +inf never flags activity");
    }
    {
        // Linear ramp keeps every agent active at every decidable tick.
        std::vector<std::vector<double>> values;
        for (int t = 0; t < 12; ++t) values.push_back({10.0 * t, 10.0 * t});
        const ConfigurationSeries s = series_1d(values);
        log.expect(metrics::is_active(s, 0, 5, params), "ramp keeps agents active");
        log.expect_near(metrics::configuration_stability(s, 11, params), 0.0, 1e-15,
                        "all agents permanently active: nu = 0");
    }
    log.expect_near(metrics::activity_factor(1, 1), 1.0, 0.0, "activity factor n=1, N=1");
    log.expect_near(metrics::activity_factor(0, 50), -0.49, 1e-15, "activity factor n=0, N=50");
    log.expect_near(metrics::activity_factor(50, 50), 0.51, 1e-15, "activity factor n=50, N=50");
    {
        const std::vector<double> z = {-0.49, 0.51, -0.49};
        log.expect_near(metrics::fluctuation_variance(z, 2), 0.25, 1e-15,
                        "alternating activity, M=2: nu = 0.25");
    }
    {
        // z is affine increasing in n and spans [(1-N)/2N, (N+1)/2N].
        const int n_agents = 17;
        bool affine = true;
        for (int n = 1; n <= n_agents; ++n)
            affine = affine && std::abs((metrics::activity_factor(n, n_agents) -
                                         metrics::activity_factor(n - 1, n_agents)) -
                                        1.0 / n_agents) < 1e-12;
        log.expect(affine, "z affine increasing in n");
        log.expect_near(metrics::activity_factor(0, n_agents), (1.0 - n_agents) / (2.0 * n_agents), 1e-12,
                        "z lower end");
        log.expect_near(metrics::activity_factor(n_agents, n_agents), (n_agents + 1.0) / (2.0 * n_agents),
                        1e-12, "z upper end");
    }
    {
        Rng rng(7);
        bool non_negative = true;
        for (int trial = 0; trial < 50; ++trial) {
            std::vector<double> z(9);
            for (double& v : z) v = rng.uniform(-0.5, 0.55);
            non_negative = non_negative && metrics::fluctuation_variance(z, 5) >= 0.0;
        }
        log.expect(non_negative, "nu >= 0 on random activity histories");
    }
}

void check_clustering_examples(CheckLog& log) {
    {
        Eigen::MatrixXd same(2, 5);
        same.colwise() = Eigen::Vector2d(0.3, -1.2);
        log.expect_near(metrics::average_centroid_distance(same, 1), 0.0, 0.0, "identical vectors: s_1 = 0");
        log.expect_near(metrics::average_centroid_distance(same, 3), 0.0, 0.0, "identical vectors: s_3 = 0");
        log.expect_near(metrics::configuration_variability(same), 0.0, 0.0, "identical vectors: c_v = 0");
    }
    log.expect_near(metrics::average_centroid_distance(columns_1d({0.0, 2.0}), 1), 2.0, 1e-12,
                    "s_1 of {0,2} = 2");
    log.expect_near(metrics::average_centroid_distance(columns_1d({0.0, 2.0}), 2), 0.0, 1e-12,
                    "s_2 of {0,2} = 0 (singleton clusters)");
    log.expect_near(metrics::configuration_variability(columns_1d({0.0, 2.0})), 1.0, 1e-12,
                    "c_v of {0,2} = 1");
    {
        Eigen::MatrixXd four(1, 4);
        four.setConstant(2.5);
        log.expect_near(metrics::configuration_variability(four), 0.0, 0.0,
                        "4 identical vectors, k_max = 2: c_v = 0");
    }
    log.expect_throws<std::invalid_argument>(
        [] { (void)metrics::average_centroid_distance(columns_1d({0.0, 2.0}), 3); },
        "k beyond point count rejected");
    {
        Rng rng(11);
        bool zero_at_full_k = true;
        for (int trial = 0; trial < 10; ++trial) {
            Eigen::MatrixXd points(2, 5);
            for (Eigen::Index c = 0; c < 5; ++c)
                points.col(c) = Eigen::Vector2d(rng.uniform(-1, 1), rng.uniform(-1, 1));
            zero_at_full_k = zero_at_full_k &&
                             metrics::average_centroid_distance(points, 5) < 1e-12;
        }
        log.expect(zero_at_full_k, "s_k vanishes when k equals the point count");
    }
}

void check_coherence_and_usage_examples(CheckLog& log) {
    {
        Eigen::MatrixXd same(3, 4);
        same.colwise() = Eigen::Vector3d(0.5, -2.0, 7.0);
        log.expect(metrics::configuration_coherence(same) == 1.0, "identical vectors: coherence exactly 1");
    }
    log.expect_near(metrics::configuration_coherence(columns_1d({0.0, 2.0})), 0.5, 1e-12,
                    "coherence of 1-D {0,2} is 0.5");
    log.expect(metrics::configuration_coherence(columns_1d({0.0, 2.0})) >
                   metrics::configuration_coherence(columns_1d({0.0, 4.0})),
               "spreading vectors strictly decreases coherence");
    {
        Rng rng(5);
        bool in_range = true;
        bool only_identical_hit_one = true;
        for (int trial = 0; trial < 40; ++trial) {
            Eigen::MatrixXd points(2, 6);
            for (Eigen::Index c = 0; c < 6; ++c)
                points.col(c) = Eigen::Vector2d(rng.uniform(-3, 3), rng.uniform(-3, 3));
            const double c = metrics::configuration_coherence(points);
            in_range = in_range && c > 0.0 && c <= 1.0;
            const bool identical = (points.colwise() - points.col(0)).norm() == 0.0;
            only_identical_hit_one = only_identical_hit_one && ((c == 1.0) == identical);
        }
        log.expect(in_range, "coherence stays in (0, 1]");
        log.expect(only_identical_hit_one, "coherence hits 1 only for identical vectors");
    }

    UsageBounds bounds;
    bounds.lower = Eigen::VectorXd::Zero(1);
    bounds.upper = Eigen::VectorXd::Constant(1, 10.0);
    {
        const ConfigurationSeries s = series_1d({{4.0, 4.0}, {4.0, 4.0}, {4.0, 4.0}});
        log.expect_near(metrics::global_parameter_usage(s, 0, 2, 2, bounds).value, 0.0, 0.0,
                        "constant parameter: global usage 0");
        log.expect_near(metrics::average_parameter_usage(s, 0, 2, 2, bounds).value, 0.0, 0.0,
                        "constant parameter: average usage 0");
    }
    {
        const ConfigurationSeries s = series_1d({{0.0}, {10.0}, {3.0}});
        log.expect_near(metrics::global_parameter_usage(s, 0, 2, 2, bounds).value, 1.0, 1e-12,
                        "full-span observations: global usage 1");
        log.expect_near(metrics::average_parameter_usage(s, 0, 2, 2, bounds).value, 1.0, 1e-12,
                        "full per-agent span: average usage 1");
    }
    {
        // Pooled window values {2..7} within bounds [0, 10].
        const ConfigurationSeries s = series_1d({{2.0, 5.0}, {3.0, 6.0}, {4.0, 7.0}});
        log.expect_near(metrics::global_parameter_usage(s, 0, 2, 2, bounds).value, 0.5, 1e-12,
                        "pooled {2..7} over [0,10]: global usage 0.5");
        // Agent ranges 2 and 4 over the same window.
        const ConfigurationSeries s2 = series_1d({{1.0, 3.0}, {2.0, 5.0}, {3.0, 7.0}});
        log.expect_near(metrics::average_parameter_usage(s2, 0, 2, 2, bounds).value, 0.3, 1e-12,
                        "agent ranges {2,4} over [0,10]: average usage 0.3");
    }
    {
        Rng rng(23);
        bool dominance = true;
        bool reversal_invariant = true;
        for (int trial = 0; trial < 20; ++trial) {
            std::vector<std::vector<double>> forward(6, std::vector<double>(3));
            for (auto& tick_values : forward)
                for (double& v : tick_values) v = rng.uniform(0.0, 10.0);
            std::vector<std::vector<double>> backward(forward.rbegin(), forward.rend());
            const ConfigurationSeries f = series_1d(forward);
            const ConfigurationSeries b = series_1d(backward);
            const double fg = metrics::global_parameter_usage(f, 0, 5, 5, bounds).value;
            const double fa = metrics::average_parameter_usage(f, 0, 5, 5, bounds).value;
            dominance = dominance && fg >= fa - 1e-12;
            reversal_invariant = reversal_invariant &&
                                 std::abs(fg - metrics::global_parameter_usage(b, 0, 5, 5, bounds).value) < 1e-12 &&
                                 std::abs(fa - metrics::average_parameter_usage(b, 0, 5, 5, bounds).value) < 1e-12;
        }
        log.expect(dominance, "global usage dominates average usage");
        log.expect(reversal_invariant, "usage invariant under window time reversal");
    }
    {
        UsageBounds tight;
        tight.lower = Eigen::VectorXd::Zero(1);
        tight.upper = Eigen::VectorXd::Constant(1, 1.0);
        const ConfigurationSeries s = series_1d({{0.5}, {2.0}, {0.5}});
        log.expect(metrics::global_parameter_usage(s, 0, 2, 2, tight).out_of_bounds,
                   "observation outside bounds raises the warning flag");
    }
}

void check_transferability_examples(CheckLog& log) {
    {
        Histogram uniform{{5, 5, 5, 5}};
        log.expect_near(metrics::emergence(uniform), 1.0, 1e-12, "uniform histogram: E = 1");
        Histogram point{{0, 9, 0}};
        log.expect_near(metrics::emergence(point), 0.0, 0.0, "single-bin mass: E = 0");
        Histogram skewed{{9, 1}};
        log.expect_near(metrics::emergence(skewed), 0.46899559358928122, 1e-9,
                        "binary {0.9, 0.1}: E ~ 0.46900");
        Histogram empty{{0, 0}};
        log.expect_throws<std::invalid_argument>([&] { (void)metrics::emergence(empty); },
                                                 "emergence of empty histogram rejected");
        Histogram degenerate{{4}};
        log.expect_near(metrics::emergence(degenerate), 0.0, 0.0, "bin_count = 1: E defined as 0");
        // Permutation invariance over bins.
        Histogram a{{7, 2, 1, 0}};
        Histogram b{{0, 1, 7, 2}};
        log.expect_near(metrics::emergence(a), metrics::emergence(b), 1e-15,
                        "emergence permutation-invariant over bins");
    }
    log.expect(metrics::complexity(0.0) == 0.0 && metrics::complexity(1.0) == 0.0,
               "C(0) = C(1) = 0");
    log.expect(metrics::complexity(0.5) == 1.0, "C(0.5) = 1");
    log.expect_throws<std::invalid_argument>([] { (void)metrics::complexity(1.5); },
                                             "complexity outside [0,1] rejected");
    {
        const std::vector<double> x = {1.0, 2.0, 4.0, 8.0};
        std::vector<double> y = x;
        log.expect_near(*metrics::pearson(x, y), 1.0, 1e-12, "pearson(x, x) = 1");
        for (double& v : y) v = -v;
        log.expect_near(*metrics::pearson(x, y), -1.0, 1e-12, "pearson(x, -x) = -1");
        const std::vector<double> constant = {3.0, 3.0, 3.0, 3.0};
        log.expect(!metrics::pearson(constant, x).has_value(), "constant series: undefined sentinel");
        log.expect_throws<std::invalid_argument>(
            [&] { (void)metrics::pearson(x, std::vector<double>{1.0}); }, "pearson length mismatch");
    }
    {
        metrics::ComplexitySignal system("system", 0);
        metrics::ComplexitySignal environment("environment", 0);
        Rng rng(3);
        for (int t = 0; t < 40; ++t) {
            const double v = rng.uniform(0.0, 1.0);
            system.append(v);
            environment.append(v);
        }
        log.expect_near(metrics::transferability(system, environment, 39, {40, 100}), 0.0, 1e-12,
                        "identical non-constant windows: T = 0");
    }
    {
        metrics::ComplexitySignal system("system", 0);
        metrics::ComplexitySignal environment("environment", 0);
        Rng rng(4);
        for (int t = 0; t < 40; ++t) {
            system.append(0.25);
            environment.append(rng.uniform(0.0, 1.0));
        }
        log.expect_near(metrics::transferability(system, environment, 39, {40, 100}), 1.0, 0.0,
                        "constant window: T = 1 by convention");
    }
    {
        // Monte-Carlo oracle over independent uniform windows at L = 40. The
        // exact null distribution of the correlation puts ~0.94 of its mass
        // inside |c| < 0.3, so that is the bound frozen here.
        Rng rng(12345);
        int high = 0;
        const int trials = 10000;
        for (int trial = 0; trial < trials; ++trial) {
            metrics::ComplexitySignal system("system", 0);
            metrics::ComplexitySignal environment("environment", 0);
            for (int t = 0; t < 40; ++t) {
                system.append(rng.uniform(0.0, 1.0));
                environment.append(rng.uniform(0.0, 1.0));
            }
            if (metrics::transferability(system, environment, 39, {40, 100}) > 0.7) ++high;
        }
        log.expect(high >= static_cast<int>(0.93 * trials),
                   "independent windows: T > 0.7 in >= 93% of trials (got " + std::to_string(high) + ")");
    }
    {
        Rng rng(31);
        bool in_unit = true;
        for (int trial = 0; trial < 50; ++trial) {
            metrics::ComplexitySignal system("system", 0);
            metrics::ComplexitySignal environment("environment", 0);
            for (int t = 0; t < 12; ++t) {
                system.append(rng.uniform(0.0, 1.0));
                environment.append(0.3 * system.at(t) + rng.uniform(0.0, 0.5));
            }
            const double t_value = metrics::transferability(system, environment, 11, {12, 100});
            in_unit = in_unit && t_value >= 0.0 && t_value <= 1.0;
        }
        log.expect(in_unit, "T stays in [0, 1]");
    }
    {
        const metrics::HistogramSpec spec{4, 0.0, 4.0};
        const metrics::ComplexitySignal flat = metrics::complexity_signal(
            {{1.0, 1.0, 1.0}, {2.0, 2.0, 2.0}}, 0, spec);
        log.expect(flat.at(0) == 0.0 && flat.at(1) == 0.0, "identical samples each tick: C = 0");
        const metrics::ComplexitySignal spread = metrics::complexity_signal(
            {{0.5, 1.5, 2.5, 3.5}}, 0, spec);
        log.expect_near(spread.at(0), 0.0, 1e-12, "uniform spread: E = 1 so C = 0");
        // Bisection on binary entropy for E = 0.5, then a histogram at that split.
        const double p_star = binary_entropy_inverse(0.5);
        log.expect(p_star > 0.1099 && p_star < 0.1101, "binary entropy inverse near 0.11");
        const int total = 100000;
        const int ones = static_cast<int>(std::round(p_star * total));
        std::vector<double> samples(static_cast<std::size_t>(total), 0.25);
        for (int i = 0; i < ones; ++i) samples[static_cast<std::size_t>(i)] = 0.75;
        const double c = metrics::complexity_of_samples(samples, {2, 0.0, 1.0});
        log.expect_near(c, 1.0, 1e-6, "split at entropy-0.5 point: C = 1");
    }
}

void check_traffic_examples(CheckLog& log) {
    {
        scenarios::ParamMap empty_net = {{"background_cars", 0.0}, {"wave_size", 0.0}};
        TrafficScenario world(empty_net, 1);
        bool coherent = true;
        for (int t = 0; t < 50; ++t) {
            world.step();
            coherent = coherent && metrics::configuration_coherence(world.configurations()) == 1.0;
        }
        log.expect(coherent, "empty network: equal split, coherence stays exactly 1");
    }
    {
        scenarios::ParamMap solo = {{"background_cars", 0.0}, {"wave_size", 1.0},
                                    {"wave1_tick", 1.0}, {"wave2_tick", -1.0},
                                    {"always_green", 1.0}, {"edge_travel_time", 1.0}};
        TrafficScenario world(solo, 9);
        Tick arrival = -1;
        for (Tick t = 1; t <= 60 && arrival < 0; ++t) {
            world.step();
            if (world.commuter_count() == 0) arrival = t;
        }
        const auto trips = world.commuter_trips();
        log.expect(trips.size() == 1, "exactly one commuter spawned");
        const int hops = traffic_hops_oracle(trips[0].first, trips[0].second);
        log.expect(arrival == 1 + hops,
                   "single car arrives in hop-count ticks under all-green (got " +
                       std::to_string(arrival) + ", hops " + std::to_string(hops) + ")");
    }
    {
        TrafficScenario world({}, 1);
        for (Tick t = 1; t <= 250; ++t) world.step();
        log.expect(world.commuter_count() == 500, "exactly 500 commuters alive at tick 250");
        log.expect(world.background_count() == 250, "background car count conserved");
        // Per-intersection cycle budget conserved under adaptation.
        bool conserved = true;
        for (int v = 0; v < TrafficScenario::kNodes; ++v) {
            int total = 0;
            for (int g : world.greens_at(v)) total += g;
            conserved = conserved && total == world.params().cycle_budget;
        }
        log.expect(conserved, "green budget conserved at every intersection");
    }
    {
        // Observable pipeline values, hand-computed entropy.
        const std::vector<double> zeros(10, 0.0);
        log.expect_near(metrics::complexity_of_samples(zeros, {51, 0.0, 51.0}), 0.0, 0.0,
                        "empty network queues: C = 0");
        const std::vector<double> equal(10, 3.0);
        log.expect_near(metrics::complexity_of_samples(equal, {51, 0.0, 51.0}), 0.0, 0.0,
                        "equal nonzero queues: C = 0");
        const Histogram mixed = make_histogram(std::vector<double>{0.0, 0.0, 1.0, 3.0}, 4, 0.0, 4.0);
        const double e = metrics::emergence(mixed);
        log.expect_near(e, 0.75, 1e-12, "queues {0,0,1,3}: E = 0.75");
        log.expect_near(metrics::complexity(e), 0.75, 1e-12, "queues {0,0,1,3}: C = 0.75");
    }
}

void check_flocking_examples(CheckLog& log) {
    {
        scenarios::ParamMap lone = {{"bird_count", 1.0}, {"shot_tick", -1.0}};
        FlockingScenario world(lone, 2);
        const double before = world.heading_angle(0);
        world.step();
        log.expect_near(world.heading_angle(0), before, 1e-12, "bird with no neighbours keeps heading");
    }
    {
        scenarios::ParamMap pair = {{"bird_count", 2.0}, {"shot_tick", -1.0}};
        FlockingScenario world(pair, 3);
        world.set_state(0, {10.0, 10.0}, 1.0);
        world.set_state(1, {85.0, 85.0}, 2.5);
        world.step();
        log.expect(std::abs(world.heading_angle(0) - 1.0) < 1e-12 &&
                       std::abs(world.heading_angle(1) - 2.5) < 1e-12,
                   "birds beyond the neighbour radius stay unchanged");
    }
    {
        scenarios::ParamMap pair = {{"bird_count", 2.0}, {"shot_tick", -1.0},
                                    {"cohere_weight", 0.0}, {"avoid_weight", 0.0}, {"speed", 0.0}};
        FlockingScenario world(pair, 4);
        world.set_state(0, {75.0, 75.0}, 0.0);
        world.set_state(1, {75.0, 75.0}, std::numbers::pi / 2.0);
        world.step();
        log.expect_near(world.heading_angle(0), std::numbers::pi / 4.0, 1e-9,
                        "co-located 90-degree pair rotates to the bisector (bird 0)");
        log.expect_near(world.heading_angle(1), std::numbers::pi / 4.0, 1e-9,
                        "co-located 90-degree pair rotates to the bisector (bird 1)");
        bool unit = true;
        for (int i = 0; i < 2; ++i) unit = unit && std::abs(world.heading(i).norm() - 1.0) < 1e-9;
        log.expect(unit, "headings stay unit length");
    }
    {
        const std::vector<double> parallel(50, 1.25);
        log.expect_near(metrics::complexity_of_samples(parallel, {100, 0.0, 2.0 * std::numbers::pi}),
                        0.0, 0.0, "parallel flock: C = 0");
        std::vector<double> uniform;
        for (int b = 0; b < 100; ++b)
            uniform.push_back((b + 0.5) / 100.0 * 2.0 * std::numbers::pi);
        log.expect_near(metrics::complexity_of_samples(uniform, {100, 0.0, 2.0 * std::numbers::pi}),
                        0.0, 1e-12, "headings uniform over all buckets: E = 1 so C = 0");
    }
    {
        RunConfig config;
        config.scenario = "flocking";
        config.seed = 5;
        config.ticks = 45;
        config.overrides = {{"speed", 0.0}, {"align_weight", 0.0}, {"cohere_weight", 0.0},
                            {"avoid_weight", 0.0}, {"shot_tick", -1.0}};
        const RunResult frozen = run(config);
        const MetricSeries& t_series = frozen.at("transferability");
        bool all_one = !t_series.empty();
        for (const MetricPoint& p : t_series.points()) all_one = all_one && p.value == 1.0;
        log.expect(all_one, "frozen flock: constant signals give T = 1");
    }
}

void check_life_examples(CheckLog& log) {
    {
        LifeScenario world({{"rows", 4.0}, {"cols", 4.0}}, 1);
        world.clear();
        world.set_cell(1, 1, 1);
        world.set_cell(1, 2, 1);
        world.set_cell(2, 1, 1);
        world.set_cell(2, 2, 1);
        world.step();
        world.step();
        bool still = world.alive_count() == 4 && world.cell(1, 1) && world.cell(1, 2) &&
                     world.cell(2, 1) && world.cell(2, 2);
        log.expect(still, "2x2 block is a still life");
    }
    {
        LifeScenario world({{"rows", 5.0}, {"cols", 5.0}}, 1);
        world.clear();
        world.set_cell(2, 1, 1);
        world.set_cell(2, 2, 1);
        world.set_cell(2, 3, 1);
        world.step();
        const bool vertical = world.alive_count() == 3 && world.cell(1, 2) && world.cell(2, 2) && world.cell(3, 2);
        world.step();
        const bool horizontal = world.alive_count() == 3 && world.cell(2, 1) && world.cell(2, 2) && world.cell(2, 3);
        log.expect(vertical && horizontal, "blinker oscillates with period 2");
    }
    {
        LifeScenario world({{"rows", 6.0}, {"cols", 6.0}}, 1);
        world.clear();
        world.step();
        log.expect(world.alive_count() == 0, "empty grid stays empty");
    }
    {
        LifeScenario world({}, 1);
        world.clear();
        log.expect_near(metrics::complexity_of_samples(world.system_observation(), {2, 0.0, 2.0}),
                        0.0, 0.0, "all-dead grid: C = 0");
        for (int r = 0; r < 25; ++r)
            for (int c = 0; c < 50; ++c) world.set_cell(r, c, 1);
        log.expect_near(metrics::complexity_of_samples(world.system_observation(), {2, 0.0, 2.0}),
                        0.0, 1e-12, "half-alive grid: E = 1 so C = 0");
        world.clear();
        const double p_star = binary_entropy_inverse(0.5);
        const int ones = static_cast<int>(std::round(p_star * 2500));
        for (int i = 0; i < ones; ++i) world.set_cell(i / 50, i % 50, 1);
        log.expect_near(metrics::complexity_of_samples(world.system_observation(), {2, 0.0, 2.0}),
                        1.0, 1e-4, "density near 0.11: C ~ 1");
    }
}

void check_peak_examples(CheckLog& log) {
    {
        MetricSeries flat("flat");
        for (Tick t = 0; t < 100; ++t) flat.append(t, 2.0);
        const PeakReport report = detect_peaks(flat, {0, 49}, 3.0, {{50, 99}});
        log.expect(report.peak_ticks.empty() && !report.verdicts[0], "constant series has no peaks");
    }
    {
        MetricSeries spike("spike");
        for (Tick t = 0; t < 100; ++t) spike.append(t, t == 70 ? 12.0 : 2.0);
        const PeakReport report = detect_peaks(spike, {0, 49}, 3.0, {{60, 80}});
        log.expect(report.peak_ticks == std::vector<Tick>{70} && report.verdicts[0],
                   "single spike detected at its tick (degenerate-baseline fallback)");
    }
    {
        MetricSeries two("two");
        Rng rng(77);
        for (Tick t = 0; t < 1000; ++t) {
            double v = rng.uniform(0.0, 1.0);
            if (t == 250 || t == 750) v += 10.0;
            two.append(t, v);
        }
        const PeakReport report = detect_peaks(two, {0, 200}, 3.0, {{240, 260}, {740, 760}});
        log.expect(report.all_detected(), "both injected spikes produce detected verdicts");
    }
    {
        // Emitted metric ticks respect each metric's warm-up bound.
        RunConfig config;
        config.scenario = "traffic";
        config.seed = 1;
        config.ticks = 100;
        const RunResult result = run(config);
        const auto& params = result.metric_params;
        log.expect(result.at("stability").points().front().tick ==
                       metrics::stability_warmup(params.stability),
                   "stability emission starts at its warm-up tick");
        log.expect(result.at("global_usage").points().front().tick == params.usage_window,
                   "usage emission starts at its warm-up tick");
        log.expect(result.at("transferability").points().front().tick == params.transfer.window - 1,
                   "transferability emission starts once the window is covered");
        log.expect(result.at("coherence").points().front().tick == 0, "coherence emitted from tick 0");
    }
}

CriterionResult criterion_unit_properties() {
    CriterionResult result{1, "metric unit properties and worked examples", false, 0.0, 0, {}};
    CheckLog log;
    check_core_examples(log);
    check_density_examples(log);
    check_stability_examples(log);
    check_clustering_examples(log);
    check_coherence_and_usage_examples(log);
    check_transferability_examples(log);
    check_traffic_examples(log);
    check_flocking_examples(log);
    check_life_examples(log);
    check_peak_examples(log);
    result.checks = log.checks;
    result.failures = std::move(log.failures);
    result.passed = result.failures.empty();
    return result;
}

CriterionResult criterion_oracle_equivalence() {
    CriterionResult result{2, "oracle equivalence (clustering, Game of Life)", false, 0.0, 0, {}};
    CheckLog log;

    Rng rng(2024);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = static_cast<int>(rng.uniform_int(2, 6));
        const int dim = static_cast<int>(rng.uniform_int(1, 2));
        Eigen::MatrixXd points(dim, n);
        for (Eigen::Index c = 0; c < n; ++c)
            for (Eigen::Index r = 0; r < dim; ++r) points(r, c) = rng.uniform(-5.0, 5.0);
        const int k = static_cast<int>(rng.uniform_int(1, n));
        const double got = metrics::average_centroid_distance(points, k);
        const double want = exhaustive_partition_cost(points, k) / static_cast<double>(k);
        log.expect_near(got, want, 1e-9,
                        "clustering matches exhaustive optimum (trial " + std::to_string(trial) + ")");
    }

    for (int trial = 0; trial < 100; ++trial) {
        LifeScenario world({{"rows", 10.0}, {"cols", 10.0}}, 1000 + static_cast<std::uint64_t>(trial));
        std::vector<std::uint8_t> grid(100);
        for (int r = 0; r < 10; ++r)
            for (int c = 0; c < 10; ++c) grid[static_cast<std::size_t>(r * 10 + c)] = world.cell(r, c);
        const std::vector<std::uint8_t> expected = life_oracle_step(grid, 10, 10);
        world.step();
        bool match = true;
        for (int r = 0; r < 10; ++r)
            for (int c = 0; c < 10; ++c)
                match = match && world.cell(r, c) == expected[static_cast<std::size_t>(r * 10 + c)];
        log.expect(match, "Game of Life step matches the brute-force oracle (grid " +
                              std::to_string(trial) + ")");
    }

    result.checks = log.checks;
    result.failures = std::move(log.failures);
    result.passed = result.failures.empty();
    return result;
}

const std::vector<std::string> kAdaptationMetrics = {"coherence", "stability", "variability",
                                                     "global_usage", "average_usage"};

// The stated pass bar is 8 of 10 seeds; generalise to ceil(0.8 N) when the
// suite runs with a different seed count.
int required_seeds(int seeds) { return (8 * seeds + 9) / 10; }

TickInterval series_baseline(const MetricSeries& series, Tick before) {
    return {series.points().front().tick, before - 1};
}

bool detects_windows(const MetricSeries& series, Tick disturbance_start,
                     const std::vector<TickInterval>& windows) {
    const PeakReport report = detect_peaks(series, series_baseline(series, disturbance_start), 3.0,
                                           windows, PeakDirection::Both);
    return report.all_detected();
}

double fraction_above(const MetricSeries& series, double threshold) {
    int above = 0;
    for (const MetricPoint& p : series.points())
        if (p.value > threshold) ++above;
    return static_cast<double>(above) / static_cast<double>(series.size());
}

CriterionResult criterion_traffic_disturbances(const std::vector<RunResult>& runs) {
    CriterionResult result{3, "traffic disturbance visibility (4 of 5 metrics)", false, 0.0, 0, {}};
    CheckLog log;
    const std::vector<TickInterval> windows = {{250, 320}, {750, 820}};
    const int required = required_seeds(static_cast<int>(runs.size()));
    int good_seeds = 0;
    for (const RunResult& r : runs) {
        int detecting = 0;
        std::string missing;
        for (const std::string& metric : kAdaptationMetrics) {
            if (detects_windows(r.at(metric), 250, windows))
                ++detecting;
            else
                missing += " " + metric;
        }
        if (detecting >= 4)
            ++good_seeds;
        else
            log.failures.push_back("seed " + std::to_string(r.seed) + ": only " +
                                   std::to_string(detecting) + "/5 metrics detect both waves (missing:" +
                                   missing + ")");
        ++log.checks;
    }
    log.expect(good_seeds >= required, "traffic disturbances visible for >= " +
                                           std::to_string(required) + "/" +
                                           std::to_string(runs.size()) + " seeds (got " +
                                           std::to_string(good_seeds) + ")");
    result.checks = log.checks;
    result.failures = std::move(log.failures);
    result.passed = good_seeds >= required;
    return result;
}

CriterionResult criterion_traffic_transferability(const std::vector<RunResult>& runs) {
    CriterionResult result{4, "traffic transferability band", false, 0.0, 0, {}};
    CheckLog log;
    const int required = required_seeds(static_cast<int>(runs.size()));
    int good_seeds = 0;
    for (const RunResult& r : runs) {
        const MetricSeries& t_series = r.at("transferability");
        const double mean = t_series.mean();
        const double above = fraction_above(t_series, 0.5);
        if (mean >= 0.6 && mean <= 0.95 && above >= 0.9)
            ++good_seeds;
        else
            log.failures.push_back("seed " + std::to_string(r.seed) + ": mean T = " +
                                   format_value(mean) + ", fraction > 0.5 = " + format_value(above));
        ++log.checks;
    }
    log.expect(good_seeds >= required, "traffic T in band for >= " + std::to_string(required) +
                                           "/" + std::to_string(runs.size()) + " seeds (got " +
                                           std::to_string(good_seeds) + ")");
    result.checks = log.checks;
    result.failures = std::move(log.failures);
    result.passed = good_seeds >= required;
    return result;
}

CriterionResult criterion_flocking(const SelfCheckOptions& options) {
    CriterionResult result{5, "flocking shot visibility and transferability band", false, 0.0, 0, {}};
    CheckLog log;
    const std::vector<TickInterval> windows = {{500, 540}};
    const int required = required_seeds(options.seeds);
    int peak_seeds = 0;
    int band_seeds = 0;
    for (int seed = 1; seed <= options.seeds; ++seed) {
        RunConfig config;
        config.scenario = "flocking";
        config.seed = static_cast<std::uint64_t>(seed);
        const RunResult r = run(config);
        const bool stability_hit = detects_windows(r.at("stability"), 500, windows);
        const bool usage_hit = detects_windows(r.at("average_usage"), 500, windows);
        if (stability_hit && usage_hit)
            ++peak_seeds;
        else
            log.failures.push_back("seed " + std::to_string(seed) + ": shot missed by" +
                                   std::string(stability_hit ? "" : " stability") +
                                   std::string(usage_hit ? "" : " average_usage"));
        const double mean = r.at("transferability").mean();
        if (mean >= 0.25 && mean <= 0.60)
            ++band_seeds;
        else
            log.failures.push_back("seed " + std::to_string(seed) + ": mean T = " + format_value(mean));
        log.checks += 2;
    }
    log.expect(peak_seeds >= required, "shot visible in stability and average usage for >= " +
                                           std::to_string(required) + "/" +
                                           std::to_string(options.seeds) + " seeds (got " +
                                           std::to_string(peak_seeds) + ")");
    log.expect(band_seeds >= required, "flocking mean T in [0.25, 0.60] for >= " +
                                           std::to_string(required) + "/" +
                                           std::to_string(options.seeds) + " seeds (got " +
                                           std::to_string(band_seeds) + ")");
    result.checks = log.checks;
    result.failures = std::move(log.failures);
    result.passed = peak_seeds >= required && band_seeds >= required;
    return result;
}

CriterionResult criterion_life(const SelfCheckOptions& options) {
    CriterionResult result{6, "Game of Life ordering and transferability band", false, 0.0, 0, {}};
    CheckLog log;
    const int required = required_seeds(options.seeds);
    int good_seeds = 0;
    for (int seed = 1; seed <= options.seeds; ++seed) {
        RunConfig config;
        config.scenario = "life";
        config.seed = static_cast<std::uint64_t>(seed);
        const RunResult r = run(config);

        std::string why;
        const MetricSeries& global = r.at("global_usage");
        bool ok = true;
        for (const MetricPoint& p : global.points())
            if (p.value != 1.0) {
                ok = false;
                why += " global_usage!=1@" + std::to_string(p.tick);
                break;
            }
        const MetricSeries& coherence = r.at("coherence");
        if (!(coherence.at(900) > coherence.at(50))) {
            ok = false;
            why += " coherence(900)<=coherence(50)";
        }
        if (!(coherence.max() < 1.0)) {
            ok = false;
            why += " coherence reached 1";
        }
        if (!(r.at("variability").at(900) < r.at("variability").at(50))) {
            ok = false;
            why += " variability(900)>=variability(50)";
        }
        if (!(r.at("average_usage").at(900) < r.at("average_usage").at(50))) {
            ok = false;
            why += " average_usage(900)>=average_usage(50)";
        }
        const double mean = r.at("transferability").mean();
        if (!(mean >= 0.25 && mean <= 0.60)) {
            ok = false;
            why += " meanT=" + format_value(mean);
        }
        if (ok)
            ++good_seeds;
        else
            log.failures.push_back("seed " + std::to_string(seed) + ":" + why);
        ++log.checks;
    }
    log.expect(good_seeds >= required, "life behaviour holds for >= " + std::to_string(required) +
                                           "/" + std::to_string(options.seeds) + " seeds (got " +
                                           std::to_string(good_seeds) + ")");
    result.checks = log.checks;
    result.failures = std::move(log.failures);
    result.passed = good_seeds >= required;
    return result;
}

CriterionResult criterion_determinism(const SelfCheckOptions& options) {
    CriterionResult result{7, "seeded determinism (byte-identical CSVs)", false, 0.0, 0, {}};
    CheckLog log;
    namespace fs = std::filesystem;
    const fs::path root = options.artifact_dir.empty() ? fs::temp_directory_path() / "sasometer_check"
                                                       : fs::path(options.artifact_dir);
    for (const std::string scenario : {"traffic", "flocking", "life"}) {
        const fs::path first_dir = root / (scenario + "_a");
        const fs::path second_dir = root / (scenario + "_b");
        fs::remove_all(first_dir);
        fs::remove_all(second_dir);
        for (const fs::path& dir : {first_dir, second_dir}) {
            RunConfig config;
            config.scenario = scenario;
            config.seed = 42;
            config.output_dir = dir.string();
            (void)run(config);
        }
        bool identical = true;
        int files = 0;
        for (const auto& entry : fs::directory_iterator(first_dir)) {
            ++files;
            const fs::path other = second_dir / entry.path().filename();
            identical = identical && fs::exists(other) &&
                        read_file(entry.path().string()) == read_file(other.string());
        }
        log.expect(identical && files > 0,
                   scenario + ": two seed-42 runs produce byte-identical output (" +
                       std::to_string(files) + " files)");
    }
    result.checks = log.checks;
    result.failures = std::move(log.failures);
    result.passed = result.failures.empty();
    return result;
}

template <typename Fn>
CriterionResult timed(Fn&& fn, double limit_seconds, std::ostream& log_stream) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult result = fn();
    result.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0.0 && result.seconds > limit_seconds) {
        result.passed = false;
        result.failures.push_back("runtime " + format_value(result.seconds) + " s exceeds " +
                                  format_value(limit_seconds) + " s");
    }
    log_stream << (result.passed ? "PASS" : "FAIL") << " criterion " << result.id << ": "
               << result.name << " (" << result.checks << " checks, "
               << format_value(result.seconds) << " s)\n";
    for (const std::string& failure : result.failures) log_stream << "    - " << failure << "\n";
    log_stream.flush();
    return result;
}

} // namespace

bool all_passed(const std::vector<CriterionResult>& results) {
    for (const CriterionResult& r : results)
        if (!r.passed) return false;
    return true;
}

std::vector<CriterionResult> run_acceptance(const SelfCheckOptions& options, std::ostream& log) {
    std::vector<CriterionResult> results;
    results.push_back(timed(criterion_unit_properties, 1.0, log));
    results.push_back(timed(criterion_oracle_equivalence, 10.0, log));

    // Criteria 3 and 4 evaluate the same ten traffic runs; the runs are timed
    // under criterion 3's two-minute budget.
    {
        const auto start = std::chrono::steady_clock::now();
        std::vector<RunResult> traffic_runs;
        for (int seed = 1; seed <= options.seeds; ++seed) {
            RunConfig config;
            config.scenario = "traffic";
            config.seed = static_cast<std::uint64_t>(seed);
            traffic_runs.push_back(run(config));
        }
        CriterionResult c3 = criterion_traffic_disturbances(traffic_runs);
        c3.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c3.seconds > 120.0) {
            c3.passed = false;
            c3.failures.push_back("runtime " + format_value(c3.seconds) + " s exceeds 120 s");
        }
        log << (c3.passed ? "PASS" : "FAIL") << " criterion 3: " << c3.name << " ("
            << c3.checks << " checks, " << format_value(c3.seconds) << " s)\n";
        for (const std::string& failure : c3.failures) log << "    - " << failure << "\n";
        results.push_back(c3);

        results.push_back(timed([&] { return criterion_traffic_transferability(traffic_runs); }, 0.0, log));
    }

    results.push_back(timed([&] { return criterion_flocking(options); }, 0.0, log));
    results.push_back(timed([&] { return criterion_life(options); }, 60.0, log));
    results.push_back(timed([&] { return criterion_determinism(options); }, 0.0, log));

    int passed = 0;
    for (const CriterionResult& r : results)
        if (r.passed) ++passed;
    log << passed << "/" << results.size() << " criteria passed\n";
    return results;
}

} // namespace saso::harness
