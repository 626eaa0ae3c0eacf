#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "stokesmini/quadrature.hpp"

using namespace stokesmini;

namespace {

// Exact integral of x^a y^b over the reference triangle (0,0),(1,0),(0,1):
// a! b! / (a+b+2)!.
double monomial_moment(int a, int b) {
    double v = 1.0;
    for (int k = 1; k <= a; ++k) v *= k;
    for (int k = 1; k <= b; ++k) v *= k;
    for (int k = 1; k <= a + b + 2; ++k) v /= k;
    return v;
}

// Exact integral of lam1^a lam2^b lam3^c over any triangle:
// 2*area * a! b! c! / (a+b+c+2)!.  Independent oracle for arbitrary
// triangles via the barycentric monomial formula.
double bary_monomial_integral(double area, int a, int b, int c) {
    double v = 2.0 * area;
    for (int k = 1; k <= a; ++k) v *= k;
    for (int k = 1; k <= b; ++k) v *= k;
    for (int k = 1; k <= c; ++k) v *= k;
    for (int k = 1; k <= a + b + c + 2; ++k) v /= k;
    return v;
}

double rule_moment(const QuadratureRule& rule, int a, int b) {
    // reference triangle: x = lam2, y = lam3, area = 1/2
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        acc += rule.weights[i] * std::pow(rule.points[i][1], a) * std::pow(rule.points[i][2], b);
    }
    return 0.5 * acc;
}

}  // namespace

TEST_CASE("tabulated rules satisfy structural invariants") {
    for (int d = 1; d <= 20; ++d) {
        const auto& rule = rule_for_degree(d);
        REQUIRE(rule.degree >= d);
        double wsum = 0.0;
        for (std::size_t i = 0; i < rule.size(); ++i) {
            const auto& p = rule.points[i];
            CHECK(std::fabs(p[0] + p[1] + p[2] - 1.0) <= 1e-14);
            wsum += rule.weights[i];
        }
        CHECK(std::fabs(wsum - 1.0) <= 1e-14);
    }
}

TEST_CASE("monomial exactness certification, degrees 1..20") {
    for (int d = 1; d <= 20; ++d) {
        // certify up to the full stated degree of the returned rule
        const auto& rule = rule_for_degree(d);
        for (int a = 0; a <= rule.degree; ++a) {
            for (int b = 0; a + b <= rule.degree; ++b) {
                const double exact = monomial_moment(a, b);
                const double got = rule_moment(rule, a, b);
                CHECK(std::fabs(got - exact) <= 1e-12 * std::fabs(exact));
            }
        }
    }
}

TEST_CASE("degree 1 is the centroid rule") {
    const auto& rule = rule_for_degree(1);
    REQUIRE(rule.size() == 1);
    CHECK(rule.points[0][0] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(rule.points[0][1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(rule.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("degree 2 is the 3-point interior rule") {
    const auto& rule = rule_for_degree(2);
    REQUIRE(rule.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(rule.weights[i] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
        // each point is a permutation of (2/3, 1/6, 1/6)
        double hi = 0.0, lo = 1.0;
        for (double l : rule.points[i]) {
            hi = std::max(hi, l);
            lo = std::min(lo, l);
        }
        CHECK(hi == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
        CHECK(lo == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    }
}

TEST_CASE("rule_for_degree rejects out-of-range requests") {
    CHECK_THROWS_AS(rule_for_degree(0), UnsupportedDegreeError);
    CHECK_THROWS_AS(rule_for_degree(21), UnsupportedDegreeError);
    CHECK_THROWS_AS(rule_for_degree(-3), UnsupportedDegreeError);
}

TEST_CASE("integrate: constants, linears, bubble on the reference triangle") {
    const Point2 a{0, 0}, b{1, 0}, c{0, 1};
    const auto& r1 = rule_for_degree(1);
    CHECK(integrate([](Point2) { return 1.0; }, a, b, c, r1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(integrate([](Point2 p) { return p.x + p.y; }, a, b, c, r1) ==
          doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    const auto& r3 = rule_for_degree(3);
    // bubble = lam1*lam2*lam3 = (1-x-y)*x*y on this triangle
    CHECK(integrate([](Point2 p) { return (1.0 - p.x - p.y) * p.x * p.y; }, a, b, c, r3) ==
          doctest::Approx(1.0 / 120.0).epsilon(1e-13));
}

TEST_CASE("integrate rejects degenerate triangles") {
    const auto& rule = rule_for_degree(2);
    CHECK_THROWS_AS(integrate([](Point2) { return 1.0; }, Point2{0, 0}, Point2{1, 1},
                              Point2{2, 2}, rule),
                    DegenerateTriangleError);
    // clockwise (negative area) is rejected as well
    CHECK_THROWS_AS(integrate([](Point2) { return 1.0; }, Point2{0, 0}, Point2{0, 1},
                              Point2{1, 0}, rule),
                    DegenerateTriangleError);
}

TEST_CASE("select_degree policy") {
    CHECK(select_degree({false, 0}) == 20);
    CHECK(select_degree({false, 7}) == 20);
    CHECK(select_degree({true, 5}) == 5);
    CHECK(select_degree({true, 14}) == 14);
    CHECK(select_degree({true, 0}) == 1);
    CHECK_THROWS_AS(select_degree({true, 21}), UnsupportedDegreeError);
}

TEST_CASE("random barycentric polynomials on random triangles match the closed form") {
    std::mt19937 rng(20240517);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);
    std::uniform_int_distribution<int> degree_pick(1, 20);
    int tested = 0;
    while (tested < 100) {
        const Point2 a{coord(rng), coord(rng)};
        const Point2 b{coord(rng), coord(rng)};
        Point2 c{coord(rng), coord(rng)};
        double area = signed_area(a, b, c);
        if (std::fabs(area) < 0.05) continue;
        Point2 bb = b, cc = c;
        if (area < 0.0) {
            std::swap(bb, cc);
            area = -area;
        }
        const int d = degree_pick(rng);
        // random barycentric monomials with exponents summing to <= d
        std::uniform_int_distribution<int> e1(0, d);
        const int p = e1(rng);
        std::uniform_int_distribution<int> e2(0, d - p);
        const int q = e2(rng);
        std::uniform_int_distribution<int> e3(0, d - p - q);
        const int r = e3(rng);
        const double k = coef(rng);

        const double inv2a = 1.0 / (2.0 * area);
        auto bary = [&](Point2 pt) {
            const double l2 = signed_area(a, pt, cc) * 2.0 * inv2a;
            const double l3 = signed_area(a, bb, pt) * 2.0 * inv2a;
            return std::array<double, 3>{1.0 - l2 - l3, l2, l3};
        };
        auto f = [&](Point2 pt) {
            const auto l = bary(pt);
            return k * std::pow(l[0], p) * std::pow(l[1], q) * std::pow(l[2], r);
        };
        const double exact = k * bary_monomial_integral(area, p, q, r);
        const double got = integrate(f, a, bb, cc, rule_for_degree(d));
        CHECK(std::fabs(got - exact) <= 1e-12 * std::max(std::fabs(exact), 1e-6));
        ++tested;
    }
}

TEST_CASE("integrate is additive over subdivision for polynomials within degree") {
    const Point2 a{0.2, -0.1}, b{1.3, 0.4}, c{0.1, 1.2};
    const Point2 m{(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
    auto f = [](Point2 p) { return 1.0 - 2.0 * p.x + 3.0 * p.x * p.y + p.y * p.y * p.x; };
    const auto& rule = rule_for_degree(3);
    const double whole = integrate(f, a, b, c, rule);
    const double parts = integrate(f, a, b, m, rule) + integrate(f, b, c, m, rule) +
                         integrate(f, c, a, m, rule);
    CHECK(whole == doctest::Approx(parts).epsilon(1e-13));
}
