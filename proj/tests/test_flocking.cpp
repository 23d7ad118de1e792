#include "saso/scenarios/flocking.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace saso;
using scenarios::FlockingScenario;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("a bird with no neighbours keeps its heading") {
    FlockingScenario world({{"bird_count", 1.0}, {"shot_tick", -1.0}}, 2);
    const double before = world.heading_angle(0);
    world.step();
    CHECK(world.heading_angle(0) == doctest::Approx(before).epsilon(1e-12));
}

TEST_CASE("birds beyond the neighbour radius ignore each other") {
    FlockingScenario world({{"bird_count", 2.0}, {"shot_tick", -1.0}}, 3);
    world.set_state(0, {10.0, 10.0}, 1.0);
    world.set_state(1, {85.0, 85.0}, 2.5); // min-image distance ~84.9 on the 150-torus
    world.step();
    CHECK(world.heading_angle(0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(world.heading_angle(1) == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("co-located birds at 90 degrees rotate to the bisector under alignment") {
    FlockingScenario world({{"bird_count", 2.0}, {"shot_tick", -1.0}, {"cohere_weight", 0.0},
                            {"avoid_weight", 0.0}, {"speed", 0.0}},
                           4);
    world.set_state(0, {75.0, 75.0}, 0.0);
    world.set_state(1, {75.0, 75.0}, kPi / 2.0);
    world.step();
    // normalise(e_x + e_y): both land exactly on the 45-degree bisector.
    CHECK(world.heading_angle(0) == doctest::Approx(kPi / 4.0).epsilon(1e-9));
    CHECK(world.heading_angle(1) == doctest::Approx(kPi / 4.0).epsilon(1e-9));
}

TEST_CASE("headings stay unit length and positions stay on the torus") {
    FlockingScenario world({{"shot_tick", 40.0}}, 9);
    for (int t = 0; t < 80; ++t) {
        world.step();
        for (int i = 0; i < world.params().bird_count; ++i) {
            CHECK(std::abs(world.heading(i).norm() - 1.0) < 1e-9);
            const Eigen::Vector2d p = world.position(i);
            CHECK(p.x() >= 0.0);
            CHECK(p.x() < world.params().width);
            CHECK(p.y() >= 0.0);
            CHECK(p.y() < world.params().height);
        }
    }
}

TEST_CASE("the shot overrides headings away from the shot bird for its duration") {
    FlockingScenario world({{"bird_count", 3.0}, {"shot_tick", 3.0}, {"align_weight", 0.0},
                            {"cohere_weight", 0.0}, {"avoid_weight", 0.0}, {"speed", 0.0},
                            {"neighbor_radius", 0.0}},
                           5);
    world.set_state(0, {75.0, 75.0}, 1.0);  // shot bird
    world.set_state(1, {80.0, 75.0}, 2.0);  // 5 east of the shot: inside radius 50
    world.set_state(2, {135.0, 75.0}, 2.2); // min-image 60 west: outside
    world.step();
    world.step();
    CHECK(world.heading_angle(1) == doctest::Approx(2.0)); // nothing happened yet

    world.step(); // tick 3: shot
    CHECK(world.heading_angle(1) == doctest::Approx(0.0)); // straight away, +x
    CHECK(world.heading_angle(2) == doctest::Approx(2.2));
    CHECK(world.heading_angle(0) == doctest::Approx(1.0)); // the shot bird itself keeps flying

    world.step(); // tick 4: still overridden
    CHECK(world.heading_angle(1) == doctest::Approx(0.0));

    world.step(); // tick 5: released (no neighbours, heading persists)
    CHECK(world.heading_angle(1) == doctest::Approx(0.0));
}

TEST_CASE("environment observation is the previous tick's headings") {
    FlockingScenario world({{"shot_tick", -1.0}}, 6);
    CHECK_THROWS_AS((void)world.environment_observation(), WarmupError);
    const std::vector<double> at_zero = world.system_observation();
    world.step();
    CHECK(world.environment_observation() == at_zero);
    const std::vector<double> at_one = world.system_observation();
    world.step();
    CHECK(world.environment_observation() == at_one);
}

TEST_CASE("flocking runs are seed reproducible") {
    FlockingScenario a({}, 12);
    FlockingScenario b({}, 12);
    for (int t = 0; t < 120; ++t) {
        a.step();
        b.step();
    }
    for (int i = 0; i < a.params().bird_count; ++i) {
        CHECK(a.heading_angle(i) == b.heading_angle(i));
        CHECK(a.position(i) == b.position(i));
    }
}
