#pragma once

#include <array>
#include <cmath>

namespace stokesmini {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    Vec2& operator+=(Vec2 o) { x += o.x; y += o.y; return *this; }
    Vec2& operator-=(Vec2 o) { x -= o.x; y -= o.y; return *this; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
};

inline Vec2 operator*(double s, Vec2 v) { return v * s; }

using Point2 = Vec2;

// 2x2 tensor, row-major: m[i][j] = d(component i)/d(coordinate j).
struct Mat2 {
    double m[2][2] = {{0.0, 0.0}, {0.0, 0.0}};
    double frobenius2() const {
        return m[0][0] * m[0][0] + m[0][1] * m[0][1] + m[1][0] * m[1][0] + m[1][1] * m[1][1];
    }
};

// Vertex indices, counterclockwise.
struct Triangle {
    std::array<int, 3> v{};
};

// Axis-aligned rectangle [ax,bx] x [ay,by].
struct Rect {
    double ax = 0.0, ay = 0.0, bx = 1.0, by = 1.0;

    double width() const { return bx - ax; }
    double height() const { return by - ay; }
    double area() const { return width() * height(); }

    // Signed distance, negative inside.  Exact for axis-aligned queries,
    // which is all the point projection needs.
    double signed_distance(Point2 p) const {
        return -std::min(std::min(p.x - ax, bx - p.x), std::min(p.y - ay, by - p.y));
    }
};

inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

inline double signed_area(Point2 a, Point2 b, Point2 c) {
    return 0.5 * cross(b - a, c - a);
}

inline Point2 barycentric_to_cartesian(Point2 a, Point2 b, Point2 c,
                                       const std::array<double, 3>& lambda) {
    return {lambda[0] * a.x + lambda[1] * b.x + lambda[2] * c.x,
            lambda[0] * a.y + lambda[1] * b.y + lambda[2] * c.y};
}

}  // namespace stokesmini
