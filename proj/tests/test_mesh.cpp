#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "stokesmini/delaunay.hpp"
#include "stokesmini/mesh.hpp"
#include "stokesmini/mesh_io.hpp"

using namespace stokesmini;

namespace {

const Rect kUnitSquare{0.0, 0.0, 1.0, 1.0};

double total_area(const Mesh& mesh) {
    double s = 0.0;
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto c = mesh.corners(t);
        s += signed_area(c[0], c[1], c[2]);
    }
    return s;
}

// Two-triangle unit square split by the (0,0)-(1,1) diagonal.
Mesh two_triangle_square() {
    Mesh m;
    m.domain = kUnitSquare;
    m.vertices = {{0, 0}, {1, 0}, {1, 1}, {0, 1}};
    m.triangles = {Triangle{{0, 1, 2}}, Triangle{{0, 2, 3}}};
    m.boundary_vertex = {1, 1, 1, 1};
    return m;
}

}  // namespace

TEST_CASE("quality measures: equilateral, right isoceles, sliver") {
    const double s3 = std::sqrt(3.0);
    auto [q1e, q2e] = quality_measures({0, 0}, {1, 0}, {0.5, s3 / 2.0});
    CHECK(q1e == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(q2e == doctest::Approx(1.0).epsilon(1e-13));

    auto [q1r, q2r] = quality_measures({0, 0}, {1, 0}, {0, 1});
    CHECK(q1r == doctest::Approx(2.0 * std::sqrt(2.0) - 2.0).epsilon(1e-13));  // (2-sqrt2)*sqrt2
    CHECK(q2r == doctest::Approx(s3 / 2.0).epsilon(1e-13));

    auto [q1s, q2s] = quality_measures({0, 0}, {1, 0}, {0.5, 1e-6});
    CHECK(q1s < 1e-5);
    CHECK(q2s < 1e-5);

    CHECK_THROWS_AS(quality_measures({0, 0}, {1, 0}, {2, 0}), DegenerateTriangleError);
    CHECK_THROWS_AS(quality_measures({0, 0}, {0, 1}, {1, 0}), DegenerateTriangleError);
}

TEST_CASE("quality measures are invariant under rigid motion and scaling") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    std::uniform_real_distribution<double> scale(0.1, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        Point2 a{u(rng), u(rng)}, b{u(rng), u(rng)}, c{u(rng), u(rng)};
        if (signed_area(a, b, c) < 1e-3) continue;
        const double th = u(rng);
        const double s = scale(rng);
        const Vec2 shift{u(rng), u(rng)};
        auto xf = [&](Point2 p) {
            return Point2{s * (std::cos(th) * p.x - std::sin(th) * p.y) + shift.x,
                          s * (std::sin(th) * p.x + std::cos(th) * p.y) + shift.y};
        };
        auto [q1, q2] = quality_measures(a, b, c);
        auto [r1, r2] = quality_measures(xf(a), xf(b), xf(c));
        CHECK(r1 == doctest::Approx(q1).epsilon(1e-10));
        CHECK(r2 == doctest::Approx(q2).epsilon(1e-10));
        CHECK(q1 >= 0.0);
        CHECK(q1 <= 1.0 + 1e-12);
        CHECK(q2 >= 0.0);
        CHECK(q2 <= 1.0 + 1e-12);
    }
}

TEST_CASE("mesh_parameter_h") {
    Mesh single;
    single.domain = kUnitSquare;
    single.vertices = {{0, 0}, {1, 0}, {0, 1}};
    single.triangles = {Triangle{{0, 1, 2}}};
    single.boundary_vertex = {1, 1, 1};
    CHECK(mesh_parameter_h(single) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    CHECK(mesh_parameter_h(two_triangle_square()) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

    Mesh empty;
    CHECK_THROWS_AS(mesh_parameter_h(empty), std::invalid_argument);
}

TEST_CASE("delaunay of a small grid is conformal and covers the hull") {
    std::vector<Point2> pts;
    for (int j = 0; j <= 3; ++j)
        for (int i = 0; i <= 3; ++i) pts.push_back({i / 3.0, j / 3.0});
    const auto tris = delaunay_triangulate(pts);
    double area = 0.0;
    for (const auto& t : tris) {
        const double a = signed_area(pts[t.v[0]], pts[t.v[1]], pts[t.v[2]]);
        CHECK(a > 0.0);
        area += a;
    }
    CHECK(area == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(tris.size() == 18);  // 2 per grid cell
}

TEST_CASE("generated mesh: invariants at h0=0.1") {
    const Mesh mesh = generate_mesh(kUnitSquare, 0.1);
    const auto report = validate_conformity(mesh);
    for (const auto& v : report.violations) MESSAGE(v);
    CHECK(report.valid());

    CHECK(std::fabs(total_area(mesh) - 1.0) <= 1e-12);

    const auto quality = mesh_quality(mesh);
    CHECK(quality.min_q1 > 0.7);
    CHECK(quality.min_q2 > 0.7);

    const double h = mesh_parameter_h(mesh);
    CHECK(h >= 0.1);
    CHECK(h <= 0.2);

    // the four corners are mesh vertices
    for (const Point2 corner : {Point2{0, 0}, Point2{1, 0}, Point2{0, 1}, Point2{1, 1}}) {
        bool found = false;
        for (const auto& p : mesh.vertices) {
            if (p.x == corner.x && p.y == corner.y) found = true;
        }
        CHECK(found);
    }
}

TEST_CASE("generated mesh matches the reference vertex/triangle budget") {
    // Uniform spacing that yields roughly 554 vertices / 1014 triangles.
    const Mesh mesh = generate_mesh(kUnitSquare, 0.046);
    CHECK(mesh.n_vertices() >= 471);   // 554 - 15%
    CHECK(mesh.n_vertices() <= 637);   // 554 + 15%
    CHECK(mesh.n_triangles() >= 862);  // 1014 - 15%
    CHECK(mesh.n_triangles() <= 1166); // 1014 + 15%
}

TEST_CASE("generate_mesh is deterministic for fixed inputs") {
    const Mesh a = generate_mesh(kUnitSquare, 0.2, 3);
    const Mesh b = generate_mesh(kUnitSquare, 0.2, 3);
    REQUIRE(a.n_vertices() == b.n_vertices());
    REQUIRE(a.n_triangles() == b.n_triangles());
    for (int i = 0; i < a.n_vertices(); ++i) {
        CHECK(a.vertices[i].x == b.vertices[i].x);
        CHECK(a.vertices[i].y == b.vertices[i].y);
    }
    for (int t = 0; t < a.n_triangles(); ++t) {
        CHECK(a.triangles[t].v == b.triangles[t].v);
    }
}

TEST_CASE("generate_mesh rejects invalid spacing") {
    CHECK_THROWS_AS(generate_mesh(kUnitSquare, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(generate_mesh(kUnitSquare, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(generate_mesh(kUnitSquare, 1.5), std::invalid_argument);
}

TEST_CASE("corner triangle repair removes a constructed corner triangle") {
    // 4x4 grid triangulated so the top-right cell has a corner triangle.
    Mesh m;
    m.domain = kUnitSquare;
    const int n = 4;
    for (int j = 0; j <= n; ++j)
        for (int i = 0; i <= n; ++i) m.vertices.push_back({i / double(n), j / double(n)});
    auto id = [&](int i, int j) { return j * (n + 1) + i; };
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) {
            const int a = id(i, j), b = id(i + 1, j), c = id(i + 1, j + 1), d = id(i, j + 1);
            if (i == n - 1 && j == n - 1) {
                // split along the other diagonal: (b,c,d) has two boundary edges
                m.triangles.push_back(Triangle{{a, b, d}});
                m.triangles.push_back(Triangle{{b, c, d}});
            } else {
                m.triangles.push_back(Triangle{{a, b, c}});
                m.triangles.push_back(Triangle{{a, c, d}});
            }
        }
    }
    m.boundary_vertex.assign(m.vertices.size(), 0);
    for (std::size_t i = 0; i < m.vertices.size(); ++i) {
        const auto& p = m.vertices[i];
        if (p.x == 0.0 || p.x == 1.0 || p.y == 0.0 || p.y == 1.0) m.boundary_vertex[i] = 1;
    }
    {
        const auto pre = validate_conformity(m);
        bool corner_listed = false;
        for (const auto& v : pre.violations) {
            if (v.find("corner triangle") != std::string::npos) corner_listed = true;
        }
        CHECK(corner_listed);
    }

    const Mesh fixed = fix_corner_triangles(m);
    const auto post = validate_conformity(fixed);
    for (const auto& v : post.violations) MESSAGE(v);
    CHECK(post.valid());
    CHECK(fixed.n_triangles() == m.n_triangles());
    CHECK(std::fabs(total_area(fixed) - 1.0) <= 1e-12);
}

TEST_CASE("corner triangle repair is the identity on a clean mesh") {
    const Mesh mesh = generate_mesh(kUnitSquare, 0.2);
    const Mesh fixed = fix_corner_triangles(mesh);
    REQUIRE(fixed.n_triangles() == mesh.n_triangles());
    for (int t = 0; t < mesh.n_triangles(); ++t) CHECK(fixed.triangles[t].v == mesh.triangles[t].v);
}

TEST_CASE("corner triangle repair fails honestly on the two-triangle square") {
    // Both triangles are corner triangles; the only flip recreates the same
    // configuration on the other diagonal.
    CHECK_THROWS_AS(fix_corner_triangles(two_triangle_square()), MeshRepairError);
}

TEST_CASE("validate_conformity flags constructed defects") {
    // valid mesh -> empty report
    CHECK(validate_conformity(generate_mesh(kUnitSquare, 0.2)).valid());

    // hanging node: split one triangle's edge on one side only
    Mesh m = generate_mesh(kUnitSquare, 0.2);
    int interior_tri = -1;
    // find a triangle with no boundary vertex so the surgery stays interior
    for (int t = 0; t < m.n_triangles() && interior_tri < 0; ++t) {
        const auto& v = m.triangles[t].v;
        if (!m.boundary_vertex[v[0]] && !m.boundary_vertex[v[1]] && !m.boundary_vertex[v[2]])
            interior_tri = t;
    }
    REQUIRE(interior_tri >= 0);
    {
        Mesh h = m;
        const auto tri = h.triangles[interior_tri];
        const Point2 mid{(h.vertices[tri.v[0]].x + h.vertices[tri.v[1]].x) / 2.0,
                         (h.vertices[tri.v[0]].y + h.vertices[tri.v[1]].y) / 2.0};
        const int mv = h.n_vertices();
        h.vertices.push_back(mid);
        h.boundary_vertex.push_back(0);
        h.triangles[interior_tri] = Triangle{{tri.v[0], mv, tri.v[2]}};
        h.triangles.push_back(Triangle{{mv, tri.v[1], tri.v[2]}});
        const auto rep = validate_conformity(h);
        CHECK(!rep.valid());
        bool conformity_flagged = false;
        for (const auto& v : rep.violations) {
            if (v.find("hanging node") != std::string::npos) conformity_flagged = true;
        }
        CHECK(conformity_flagged);
    }

    // clockwise triangle -> orientation violation
    {
        Mesh o = m;
        std::swap(o.triangles[interior_tri].v[0], o.triangles[interior_tri].v[1]);
        const auto rep = validate_conformity(o);
        CHECK(!rep.valid());
        bool orientation_flagged = false;
        for (const auto& v : rep.violations) {
            if (v.find("orientation") != std::string::npos) orientation_flagged = true;
        }
        CHECK(orientation_flagged);
    }
}

TEST_CASE("mesh text format round trip") {
    const Mesh mesh = generate_mesh(kUnitSquare, 0.15);
    std::stringstream ss;
    write_mesh(mesh, ss);
    const Mesh back = read_mesh(ss);
    REQUIRE(back.n_vertices() == mesh.n_vertices());
    REQUIRE(back.n_triangles() == mesh.n_triangles());
    for (int i = 0; i < mesh.n_vertices(); ++i) {
        CHECK(back.vertices[i].x == mesh.vertices[i].x);  // 17 digits round-trips doubles
        CHECK(back.vertices[i].y == mesh.vertices[i].y);
        CHECK(back.boundary_vertex[i] == mesh.boundary_vertex[i]);
    }
    for (int t = 0; t < mesh.n_triangles(); ++t) CHECK(back.triangles[t].v == mesh.triangles[t].v);
    CHECK(back.domain.ax == mesh.domain.ax);
    CHECK(back.domain.by == mesh.domain.by);
}

TEST_CASE("read_mesh rejects malformed input") {
    std::stringstream bad1("mesh3d 1\n");
    CHECK_THROWS_AS(read_mesh(bad1), Error);
    std::stringstream bad2("mesh2d 1\nvertices 1\n0 0.0 0.0 2\ntriangles 0\n");
    CHECK_THROWS_AS(read_mesh(bad2), Error);
    std::stringstream bad3("mesh2d 1\nvertices 1\n0 0.0 0.0 1\ntriangles 1\n0 0 1 2\n");
    CHECK_THROWS_AS(read_mesh(bad3), Error);
}

TEST_CASE("study-level meshes keep quality above 0.7 with no corner triangles") {
    for (const double h0 : {0.2, 0.1, 0.05}) {
        const Mesh mesh = generate_mesh(kUnitSquare, h0);
        const auto q = mesh_quality(mesh);
        CHECK(q.min_q1 >= 0.7);
        CHECK(q.min_q2 >= 0.7);
        CHECK(validate_conformity(mesh).valid());
    }
}
