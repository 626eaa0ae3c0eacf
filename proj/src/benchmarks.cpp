#include "stokesmini/benchmarks.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace stokesmini {

namespace {

// Exact fields templated on the scalar type: the library surface uses double,
// the manufactured-solution verifier re-evaluates in long double so its
// finite-difference oracle is not limited by double roundoff.

template <class T>
void exact_velocity(int id, T x, T y, T& ux, T& uy) {
    const T pi = std::numbers::pi_v<T>;
    switch (id) {
        case 1:
            ux = x * x * (1 - x) * (1 - x) * 2 * y * (1 - y) * (2 * y - 1);
            uy = y * y * (1 - y) * (1 - y) * 2 * x * (1 - x) * (1 - 2 * x);
            break;
        case 2:
            ux = (x * x - 2 * x * x * x + x * x * x * x) * (2 * y - 6 * y * y + 4 * y * y * y);
            uy = -(2 * x - 6 * x * x + 4 * x * x * x) * (y * y - 2 * y * y * y + y * y * y * y);
            break;
        case 3:
            ux = std::sin(2 * pi * y) * (1 - std::cos(2 * pi * x));
            uy = std::sin(2 * pi * x) * (std::cos(2 * pi * y) - 1);
            break;
        case 4:
            ux = 2 * std::exp(x) * (x - 1) * (x - 1) * x * x * (y * y - y) * (2 * y - 1);
            uy = -std::exp(x) * (x * x - x) * (x * x + 3 * x - 2) * (y - 1) * (y - 1) * y * y;
            break;
        case 5:
            ux = (x * x * x * x - 2 * x * x * x + x * x) * (2 * y * y * y - y);
            uy = -(2 * x * x * x - 3 * x * x + x) * (y * y * y * y - y * y);
            break;
        case 6:
            ux = -std::sin(x * y) * x;
            uy = std::sin(x * y) * y;
            break;
        case 7:
            ux = 20 * x * y * y * y * y - 4 * x * x * x * x * x;
            uy = 20 * x * x * x * x * y - 4 * y * y * y * y * y;
            break;
        default:
            ux = uy = 0;
    }
}

template <class T>
T exact_pressure(int id, T x, T y) {
    const T pi = std::numbers::pi_v<T>;
    switch (id) {
        case 1:
            return x * (1 - x) * (1 - y) - T(1) / 12;
        case 2:
            return (x + y - 1) / 24;
        case 3:
            return 2 * pi * (std::cos(2 * pi * y) - std::cos(2 * pi * x));
        case 4: {
            const T s = -456 + std::exp(x) * (x * x * x * x * (y * y - y + 12) +
                                             2 * x * x * x * (y * y - y - 36) +
                                             x * x * (-5 * y * y + 5 * y + 228) +
                                             2 * x * (y * y - y - 228) + 456);
            return -424 + 156 * std::exp(T(1)) + (y * y - y) * s;
        }
        case 5:
            return (4 * x * x * x - 6 * x * x + 2 * x) * (2 * y * y * y - y) +
                   T(2) / 5 * (6 * x * x * x * x * x - 15 * x * x * x * x + 10 * x * x * x) * y -
                   T(1) / 10;
        case 6:
            return std::cos(x * y) - T(0.9460830703671845L);
        case 7:
            return 120 * x * x * y * y - 20 * x * x * x * x - 20 * y * y * y * y - T(32) / 6;
        default:
            return 0;
    }
}

template <class T>
void exact_forcing(int id, T x, T y, T& fx, T& fy) {
    const T pi = std::numbers::pi_v<T>;
    switch (id) {
        case 1:
            fx = -(4 * y * (1 - y) * (2 * y - 1) * ((1 - 2 * x) * (1 - 2 * x) - 2 * x * (1 - x)) +
                   12 * x * x * (1 - x) * (1 - x) * (1 - 2 * y)) +
                 (1 - 2 * x) * (1 - y);
            fy = -(4 * x * (1 - x) * (1 - 2 * x) * ((1 - 2 * y) * (1 - 2 * y) - 2 * y * (1 - y)) +
                   12 * y * y * (1 - y) * (1 - y) * (2 * x - 1)) -
                 x * (1 - x);
            break;
        case 2:
            fx = -((2 - 12 * x + 12 * x * x) * (2 * y - 6 * y * y + 4 * y * y * y) +
                   (x * x - 2 * x * x * x + x * x * x * x) * (-12 + 24 * y)) +
                 T(1) / 24;
            fy = ((2 - 12 * y + 12 * y * y) * (2 * x - 6 * x * x + 4 * x * x * x) +
                  (y * y - 2 * y * y * y + y * y * y * y) * (-12 + 24 * x)) +
                 T(1) / 24;
            break;
        case 3:
            fx = -4 * pi * pi * std::sin(2 * pi * y) * (2 * std::cos(2 * pi * x) - 1) +
                 4 * pi * pi * std::sin(2 * pi * x);
            fy = 4 * pi * pi * std::sin(2 * pi * x) * (2 * std::cos(2 * pi * y) - 1) -
                 4 * pi * pi * std::sin(2 * pi * y);
            break;
        case 4: {
            const T ex = std::exp(x);
            fx = -(2 * ex *
                       ((x * x + x - 1) * (x * x + 3 * x - 2) + (x * x - x) * (2 * x + 3)) *
                       (y * y - y) * (2 * y - 1) +
                   2 * ex * (x - 1) * (x - 1) * x * x * (12 * y - 6)) +
                 (y * y - y) * ex *
                     (x * x * x * x * (y * y - y + 12) + 6 * x * x * x * (y * y - y - 4) +
                      x * x * (y * y - y + 12) + 8 * x * (y - y * y) + 2 * y * y - 2 * y);
            fy = -(-ex * (x * x * x * x + 10 * x * x * x + 19 * x * x - 6 * x - 6) * (y - 1) *
                       (y - 1) * y * y -
                   2 * ex * (x * x - x) * (x * x + 3 * x - 2) * (6 * y * y - 6 * y + 1)) +
                 (2 * y - 1) * (-456 + ex * (x * x * x * x * (y * y - y + 12) +
                                             2 * x * x * x * (y * y - y - 36) +
                                             x * x * (-5 * y * y + 5 * y + 228) +
                                             2 * x * (y * y - y - 228) + 456)) +
                 ex * (x * x * x * x + 2 * x * x * x - 5 * x * x + 2 * x) * (2 * y - 1) *
                     (y * y - y);
            break;
        }
        case 5:
            fx = 0;
            fy = (12 * x - 6) * (y * y * y * y - y * y) +
                 (8 * x * x * x - 12 * x * x + 4 * x) * (6 * y * y - 1) +
                 T(2) / 5 * (6 * x * x * x * x * x - 15 * x * x * x * x + 10 * x * x * x);
            break;
        case 6:
            fx = -(std::sin(x * y) * x * (x * x + y * y) - 2 * std::cos(x * y) * y) -
                 std::sin(x * y) * y;
            fy = (std::sin(x * y) * y * (x * x + y * y) - 2 * std::cos(x * y) * x) -
                 std::sin(x * y) * x;
            break;
        case 7:
        default:
            fx = fy = 0;
    }
}

Mat2 velocity_gradient_at(int id, double x, double y) {
    const double pi = std::numbers::pi;
    Mat2 g;
    switch (id) {
        case 1: {
            const double gx = x * x - 2 * x * x * x + x * x * x * x;
            const double dgx = 2 * x - 6 * x * x + 4 * x * x * x;
            const double sy = -4 * y * y * y + 6 * y * y - 2 * y;  // 2y(1-y)(2y-1)
            const double dsy = -12 * y * y + 12 * y - 2;
            const double hy = y * y - 2 * y * y * y + y * y * y * y;
            const double dhy = 2 * y - 6 * y * y + 4 * y * y * y;
            const double rx = 4 * x * x * x - 6 * x * x + 2 * x;  // 2x(1-x)(1-2x)
            const double drx = 12 * x * x - 12 * x + 2;
            g.m[0][0] = dgx * sy;
            g.m[0][1] = gx * dsy;
            g.m[1][0] = hy * drx;
            g.m[1][1] = dhy * rx;
            break;
        }
        case 2: {
            const double gx = x * x - 2 * x * x * x + x * x * x * x;
            const double dgx = 2 * x - 6 * x * x + 4 * x * x * x;
            const double sy = 2 * y - 6 * y * y + 4 * y * y * y;
            const double dsy = 2 - 12 * y + 12 * y * y;
            const double rx = 2 * x - 6 * x * x + 4 * x * x * x;
            const double drx = 2 - 12 * x + 12 * x * x;
            const double hy = y * y - 2 * y * y * y + y * y * y * y;
            const double dhy = 2 * y - 6 * y * y + 4 * y * y * y;
            g.m[0][0] = dgx * sy;
            g.m[0][1] = gx * dsy;
            g.m[1][0] = -drx * hy;
            g.m[1][1] = -rx * dhy;
            break;
        }
        case 3: {
            g.m[0][0] = 2 * pi * std::sin(2 * pi * x) * std::sin(2 * pi * y);
            g.m[0][1] = 2 * pi * std::cos(2 * pi * y) * (1 - std::cos(2 * pi * x));
            g.m[1][0] = 2 * pi * std::cos(2 * pi * x) * (std::cos(2 * pi * y) - 1);
            g.m[1][1] = -2 * pi * std::sin(2 * pi * x) * std::sin(2 * pi * y);
            break;
        }
        case 4: {
            const double ex = std::exp(x);
            const double gx = x * x * x * x - 2 * x * x * x + x * x;
            const double dgx = 4 * x * x * x - 6 * x * x + 2 * x;
            const double ty = 2 * y * y * y - 3 * y * y + y;  // (y^2-y)(2y-1)
            const double dty = 6 * y * y - 6 * y + 1;
            const double qx = x * x * x * x + 2 * x * x * x - 5 * x * x + 2 * x;
            const double dqx = 4 * x * x * x + 6 * x * x - 10 * x + 2;
            const double hy = y * y * y * y - 2 * y * y * y + y * y;
            const double dhy = 4 * y * y * y - 6 * y * y + 2 * y;
            g.m[0][0] = 2 * ex * (gx + dgx) * ty;
            g.m[0][1] = 2 * ex * gx * dty;
            g.m[1][0] = -ex * (qx + dqx) * hy;
            g.m[1][1] = -ex * qx * dhy;
            break;
        }
        case 5: {
            const double ax = x * x * x * x - 2 * x * x * x + x * x;
            const double dax = 4 * x * x * x - 6 * x * x + 2 * x;
            const double by = 2 * y * y * y - y;
            const double dby = 6 * y * y - 1;
            const double cx = 2 * x * x * x - 3 * x * x + x;
            const double dcx = 6 * x * x - 6 * x + 1;
            const double dy = y * y * y * y - y * y;
            const double ddy = 4 * y * y * y - 2 * y;
            g.m[0][0] = dax * by;
            g.m[0][1] = ax * dby;
            g.m[1][0] = -dcx * dy;
            g.m[1][1] = -cx * ddy;
            break;
        }
        case 6: {
            const double s = std::sin(x * y), c = std::cos(x * y);
            g.m[0][0] = -s - x * y * c;
            g.m[0][1] = -x * x * c;
            g.m[1][0] = y * y * c;
            g.m[1][1] = s + x * y * c;
            break;
        }
        case 7: {
            g.m[0][0] = 20 * y * y * y * y - 20 * x * x * x * x;
            g.m[0][1] = 80 * x * y * y * y;
            g.m[1][0] = 80 * x * x * x * y;
            g.m[1][1] = 20 * x * x * x * x - 20 * y * y * y * y;
            break;
        }
        default:
            break;
    }
    return g;
}

Vec2 boundary_velocity_at(int id, const Rect& domain, double x, double y) {
    const double tol = 1e-12 * std::max(domain.width(), domain.height());
    const bool top = std::fabs(y - domain.by) <= tol;
    const bool right = std::fabs(x - domain.bx) <= tol;
    const bool bottom = std::fabs(y - domain.ay) <= tol;
    const bool left = std::fabs(x - domain.ax) <= tol;
    switch (id) {
        case 5:
            if (top) return {x * x * x * x - 2 * x * x * x + x * x, 0.0};
            return {0.0, 0.0};
        case 6:
            if (top) return {-x * std::sin(x), std::sin(x)};
            if (right) return {-std::sin(y), y * std::sin(y)};
            return {0.0, 0.0};
        case 7: {
            const double x4 = x * x * x * x, y4 = y * y * y * y;
            if (top) return {20 * x - 4 * x4 * x, 20 * x4 - 4};
            if (right) return {20 * y4 - 4, 20 * y - 4 * y4 * y};
            if (bottom) return {20 * x - 4 * x4 * x, -20 * x4 + 4};
            if (left) return {-20 * y4 + 4, 20 * y - 4 * y4 * y};
            return {0.0, 0.0};
        }
        default:
            return {0.0, 0.0};
    }
}

BenchmarkProblem make_problem(int id) {
    BenchmarkProblem p;
    p.id = id;
    p.domain = (id == 7) ? Rect{-1.0, -1.0, 1.0, 1.0} : Rect{0.0, 0.0, 1.0, 1.0};
    switch (id) {
        case 1: p.name = "enclosed vortex (polynomial, clockwise)"; break;
        case 2: p.name = "enclosed vortex (polynomial, counter-clockwise)"; break;
        case 3: p.name = "enclosed vortex (trigonometric)"; break;
        case 4: p.name = "enclosed vortex (exponential)"; break;
        case 5: p.name = "regularized lid-driven cavity"; break;
        case 6: p.name = "corner flow"; break;
        case 7: p.name = "colliding flow"; break;
    }
    switch (id) {
        case 1: p.polynomial = true; p.velocity_degree = 7; p.pressure_degree = 3; p.forcing_degree = 5; break;
        case 2: p.polynomial = true; p.velocity_degree = 7; p.pressure_degree = 1; p.forcing_degree = 5; break;
        case 5: p.polynomial = true; p.velocity_degree = 7; p.pressure_degree = 6; p.forcing_degree = 5; break;
        case 7: p.polynomial = true; p.velocity_degree = 5; p.pressure_degree = 4; p.forcing_degree = 0; break;
        default: p.polynomial = false; break;
    }
    p.velocity = [id](Point2 q) {
        double ux, uy;
        exact_velocity(id, q.x, q.y, ux, uy);
        return Vec2{ux, uy};
    };
    p.pressure = [id](Point2 q) { return exact_pressure(id, q.x, q.y); };
    p.velocity_gradient = [id](Point2 q) { return velocity_gradient_at(id, q.x, q.y); };
    p.forcing = [id](Point2 q) {
        double fx, fy;
        exact_forcing(id, q.x, q.y, fx, fy);
        return Vec2{fx, fy};
    };
    const Rect dom = p.domain;
    p.boundary_velocity = [id, dom](Point2 q) { return boundary_velocity_at(id, dom, q.x, q.y); };
    return p;
}

// Halton sequence, deterministic quasi-random samples in (0,1).
double halton(int index, int base) {
    double f = 1.0, r = 0.0;
    for (int i = index; i > 0; i /= base) {
        f /= base;
        r += f * (i % base);
    }
    return r;
}

}  // namespace

const BenchmarkProblem& problem(int id) {
    if (id < 1 || id > 7) {
        throw std::invalid_argument("problem: id must be in 1..7, got " + std::to_string(id));
    }
    static const std::array<BenchmarkProblem, 7> problems = [] {
        std::array<BenchmarkProblem, 7> ps;
        for (int i = 0; i < 7; ++i) ps[i] = make_problem(i + 1);
        return ps;
    }();
    return problems[id - 1];
}

ManufacturedReport verify_manufactured(const BenchmarkProblem& p, int n_samples) {
    if (n_samples < 1) throw std::invalid_argument("verify_manufactured: n_samples must be >= 1");
    using LD = long double;
    const int id = p.id;
    const LD fd_h = 1e-4L * std::max(p.domain.width(), p.domain.height());

    auto ux_at = [&](LD x, LD y) { LD ux, uy; exact_velocity<LD>(id, x, y, ux, uy); return ux; };
    auto uy_at = [&](LD x, LD y) { LD ux, uy; exact_velocity<LD>(id, x, y, ux, uy); return uy; };
    auto p_at = [&](LD x, LD y) { return exact_pressure<LD>(id, x, y); };

    // Richardson-extrapolated central differences: O(h^4) truncation, with
    // roundoff held down by the long double evaluation.
    auto d1 = [&](auto&& f, LD x, LD y, bool wrt_x) {
        auto D = [&](LD h) {
            return wrt_x ? (f(x + h, y) - f(x - h, y)) / (2 * h)
                         : (f(x, y + h) - f(x, y - h)) / (2 * h);
        };
        return (4 * D(fd_h / 2) - D(fd_h)) / 3;
    };
    auto d2 = [&](auto&& f, LD x, LD y, bool wrt_x) {
        auto D = [&](LD h) {
            return wrt_x ? (f(x + h, y) - 2 * f(x, y) + f(x - h, y)) / (h * h)
                         : (f(x, y + h) - 2 * f(x, y) + f(x, y - h)) / (h * h);
        };
        return (4 * D(fd_h / 2) - D(fd_h)) / 3;
    };

    ManufacturedReport rep;
    rep.samples = n_samples;

    const LD margin = 8 * fd_h;
    for (int s = 0; s < n_samples; ++s) {
        const LD tx = halton(s + 1, 2);
        const LD ty = halton(s + 1, 3);
        const LD x = p.domain.ax + margin + (p.domain.width() - 2 * margin) * tx;
        const LD y = p.domain.ay + margin + (p.domain.height() - 2 * margin) * ty;

        const LD div = d1(ux_at, x, y, true) + d1(uy_at, x, y, false);
        rep.max_divergence = std::max(rep.max_divergence, (double)std::fabs(div));

        LD fx, fy;
        exact_forcing<LD>(id, x, y, fx, fy);
        const LD rx = -(d2(ux_at, x, y, true) + d2(ux_at, x, y, false)) + d1(p_at, x, y, true) - fx;
        const LD ry = -(d2(uy_at, x, y, true) + d2(uy_at, x, y, false)) + d1(p_at, x, y, false) - fy;
        rep.max_momentum_residual = std::max(
            rep.max_momentum_residual, std::max((double)std::fabs(rx), (double)std::fabs(ry)));
    }

    // Pressure integral over the rectangle split into two triangles.
    {
        const auto& rule = rule_for_degree(20);
        const Point2 a{p.domain.ax, p.domain.ay}, b{p.domain.bx, p.domain.ay};
        const Point2 c{p.domain.bx, p.domain.by}, d{p.domain.ax, p.domain.by};
        rep.pressure_integral =
            integrate(p.pressure, a, b, c, rule) + integrate(p.pressure, a, c, d, rule);
    }

    // Boundary data against the exact trace, sampling each side.
    {
        const int m = std::max(64, n_samples / 64);
        auto check = [&](Point2 q) {
            const Vec2 g = p.boundary_velocity(q);
            const Vec2 u = p.velocity(q);
            rep.max_boundary_mismatch =
                std::max(rep.max_boundary_mismatch,
                         std::max(std::fabs(g.x - u.x), std::fabs(g.y - u.y)));
        };
        for (int i = 0; i <= m; ++i) {
            const double t = static_cast<double>(i) / m;
            check({p.domain.ax + t * p.domain.width(), p.domain.ay});
            check({p.domain.ax + t * p.domain.width(), p.domain.by});
            check({p.domain.ax, p.domain.ay + t * p.domain.height()});
            check({p.domain.bx, p.domain.ay + t * p.domain.height()});
        }
    }
    return rep;
}

}  // namespace stokesmini
