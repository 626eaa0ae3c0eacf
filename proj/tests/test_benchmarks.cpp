#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "stokesmini/benchmarks.hpp"

using namespace stokesmini;

TEST_CASE("problem registry") {
    for (int id = 1; id <= 7; ++id) {
        const auto& p = problem(id);
        CHECK(p.id == id);
        CHECK(!p.name.empty());
    }
    CHECK_THROWS_AS(problem(0), std::invalid_argument);
    CHECK_THROWS_AS(problem(8), std::invalid_argument);
    CHECK_THROWS_AS(problem(9), std::invalid_argument);
}

TEST_CASE("domains and polynomial metadata") {
    for (int id = 1; id <= 6; ++id) {
        CHECK(problem(id).domain.ax == 0.0);
        CHECK(problem(id).domain.bx == 1.0);
    }
    CHECK(problem(7).domain.ax == -1.0);
    CHECK(problem(7).domain.by == 1.0);

    for (int id : {1, 2, 5, 7}) CHECK(problem(id).polynomial);
    for (int id : {3, 4, 6}) CHECK(!problem(id).polynomial);
    CHECK(problem(1).velocity_degree == 7);
    CHECK(problem(7).velocity_degree == 5);
}

TEST_CASE("spot values") {
    // problem 3 at (1/4, 1/4): sin/cos of pi/2
    const Vec2 u3 = problem(3).velocity({0.25, 0.25});
    CHECK(u3.x == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(u3.y == doctest::Approx(-1.0).epsilon(1e-14));

    // problem 1: u_x vanishes on the mid-line y = 1/2
    for (double x : {0.1, 0.35, 0.62, 0.97}) {
        CHECK(problem(1).velocity({x, 0.5}).x == 0.0);
    }

    // problem 7 boundary data at the corner (1,1)
    const Vec2 g7 = problem(7).boundary_velocity({1.0, 1.0});
    CHECK(g7.x == doctest::Approx(16.0));
    CHECK(g7.y == doctest::Approx(16.0));

    // problem 5 top edge
    const Vec2 g5 = problem(5).boundary_velocity({0.5, 1.0});
    CHECK(g5.x == doctest::Approx(0.0625 - 0.25 + 0.25).epsilon(1e-14));
    CHECK(g5.y == 0.0);

    // problem 7 has zero forcing
    CHECK(problem(7).forcing({0.3, -0.7}).x == 0.0);
    CHECK(problem(7).forcing({0.3, -0.7}).y == 0.0);
    // problem 5 has zero x-forcing
    CHECK(problem(5).forcing({0.3, 0.7}).x == 0.0);
}

TEST_CASE("manufactured solution verification, all problems") {
    for (int id = 1; id <= 7; ++id) {
        CAPTURE(id);
        const auto rep = verify_manufactured(problem(id), 2000);
        CHECK(rep.max_divergence <= 1e-10);
        CHECK(rep.max_momentum_residual <= 1e-8);
        CHECK(std::fabs(rep.pressure_integral) <= 1e-8);
        CHECK(rep.max_boundary_mismatch <= 1e-10);
        CHECK(rep.within_tolerances());
    }
    CHECK_THROWS_AS(verify_manufactured(problem(1), 0), std::invalid_argument);
}

TEST_CASE("problem 6 pressure constant equals the mean of cos(xy)") {
    // the additive constant is the degree-20 quadrature of cos(xy) over the
    // unit square (dual-sourced check of the printed value)
    const auto& p = problem(6);
    const auto& rule = rule_for_degree(20);
    const double mean_cos =
        integrate([](Point2 q) { return std::cos(q.x * q.y); }, {0, 0}, {1, 0}, {1, 1}, rule) +
        integrate([](Point2 q) { return std::cos(q.x * q.y); }, {0, 0}, {1, 1}, {0, 1}, rule);
    CHECK(mean_cos == doctest::Approx(0.9460830703671845).epsilon(1e-13));
    CHECK(std::fabs(p.pressure({0.4, 0.8}) - (std::cos(0.32) - mean_cos)) <= 1e-13);
}

TEST_CASE("hand-coded velocity gradients match central differences") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> u01(0.05, 0.95);
    const double h = 1e-5;
    for (int id = 1; id <= 7; ++id) {
        const auto& p = problem(id);
        for (int s = 0; s < 200; ++s) {
            const double sx = p.domain.ax + u01(rng) * p.domain.width();
            const double sy = p.domain.ay + u01(rng) * p.domain.height();
            const Mat2 g = p.velocity_gradient({sx, sy});
            const Vec2 dx = (p.velocity({sx + h, sy}) - p.velocity({sx - h, sy})) * (0.5 / h);
            const Vec2 dy = (p.velocity({sx, sy + h}) - p.velocity({sx, sy - h})) * (0.5 / h);
            CHECK(std::fabs(g.m[0][0] - dx.x) <= 1e-7 * std::max(1.0, std::fabs(dx.x)));
            CHECK(std::fabs(g.m[1][0] - dx.y) <= 1e-7 * std::max(1.0, std::fabs(dx.y)));
            CHECK(std::fabs(g.m[0][1] - dy.x) <= 1e-7 * std::max(1.0, std::fabs(dy.x)));
            CHECK(std::fabs(g.m[1][1] - dy.y) <= 1e-7 * std::max(1.0, std::fabs(dy.y)));
        }
    }
}

TEST_CASE("gradient trace is divergence-free") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    for (int id = 1; id <= 7; ++id) {
        const auto& p = problem(id);
        for (int s = 0; s < 500; ++s) {
            const double sx = p.domain.ax + u01(rng) * p.domain.width();
            const double sy = p.domain.ay + u01(rng) * p.domain.height();
            const Mat2 g = p.velocity_gradient({sx, sy});
            CHECK(std::fabs(g.m[0][0] + g.m[1][1]) <= 1e-12);
        }
    }
}

TEST_CASE("boundary data agrees with the exact trace on every edge") {
    for (int id = 1; id <= 7; ++id) {
        const auto& p = problem(id);
        for (int i = 0; i <= 100; ++i) {
            const double t = i / 100.0;
            for (const Point2 q : {Point2{p.domain.ax + t * p.domain.width(), p.domain.ay},
                                   Point2{p.domain.ax + t * p.domain.width(), p.domain.by},
                                   Point2{p.domain.ax, p.domain.ay + t * p.domain.height()},
                                   Point2{p.domain.bx, p.domain.ay + t * p.domain.height()}}) {
                const Vec2 g = p.boundary_velocity(q);
                const Vec2 u = p.velocity(q);
                CHECK(std::fabs(g.x - u.x) <= 1e-12);
                CHECK(std::fabs(g.y - u.y) <= 1e-12);
            }
        }
    }
}
