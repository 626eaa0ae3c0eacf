#pragma once

#include <array>
#include <utility>
#include <vector>

#include "stokesmini/errors.hpp"
#include "stokesmini/geometry.hpp"

namespace stokesmini {

// Symmetric Gaussian quadrature over a triangle.  Points are barycentric
// triples, weights are relative to the triangle area:
//     int_T f  =  area(T) * sum_i w_i f(x(lambda_i))
// Each tabulated rule integrates every monomial x^a y^b with a+b <= degree
// exactly on the reference triangle (0,0),(1,0),(0,1).
struct QuadratureRule {
    int degree = 0;
    std::vector<std::array<double, 3>> points;
    std::vector<double> weights;

    std::size_t size() const { return weights.size(); }
};

// Minimal tabulated rule with exactness degree >= d.  Supported requests:
// 1 <= d <= 20.  Throws UnsupportedDegreeError otherwise.
const QuadratureRule& rule_for_degree(int d);

// Integrand classification used to pick a quadrature degree: polynomial
// integrands get a rule of at least their degree, everything else gets the
// highest tabulated request (20).
struct IntegrandMeta {
    bool polynomial = false;
    int degree = 0;
};

int select_degree(const IntegrandMeta& meta);

// area(T) * sum_i w_i f(x_i) with x_i mapped from barycentric coordinates.
// f is invoked as f(Point2).  Throws DegenerateTriangleError when the
// triangle has non-positive area.
template <class F>
double integrate(F&& f, Point2 a, Point2 b, Point2 c, const QuadratureRule& rule) {
    const double area = signed_area(a, b, c);
    if (!(area > 0.0)) {
        throw DegenerateTriangleError("integrate: non-positive triangle area");
    }
    double acc = 0.0;
    for (std::size_t i = 0; i < rule.size(); ++i) {
        acc += rule.weights[i] * f(barycentric_to_cartesian(a, b, c, rule.points[i]));
    }
    return area * acc;
}

namespace detail {

struct RawQuadratureRule {
    int degree;
    int npoints;
    const double (*pts)[3];
    const double* wts;
};

extern const RawQuadratureRule kTriangleRules[];
extern const int kTriangleRuleCount;

}  // namespace detail

}  // namespace stokesmini
