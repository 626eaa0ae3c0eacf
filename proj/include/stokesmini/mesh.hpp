#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stokesmini/errors.hpp"
#include "stokesmini/geometry.hpp"

namespace stokesmini {

// Conformal triangulation of an axis-aligned rectangle.  Triangles are
// counterclockwise; boundary_vertex[i] is 1 iff vertex i lies on the domain
// boundary.  Immutable after construction.
struct Mesh {
    std::vector<Point2> vertices;
    std::vector<Triangle> triangles;
    std::vector<std::uint8_t> boundary_vertex;
    Rect domain;

    int n_vertices() const { return static_cast<int>(vertices.size()); }
    int n_triangles() const { return static_cast<int>(triangles.size()); }
    Point2 vertex(int i) const { return vertices[i]; }
    std::array<Point2, 3> corners(int t) const {
        const auto& tri = triangles[t];
        return {vertices[tri.v[0]], vertices[tri.v[1]], vertices[tri.v[2]]};
    }
};

struct MeshQualityReport {
    std::vector<double> q1;  // per triangle, in [0,1], 1 iff equilateral
    std::vector<double> q2;
    double min_q1 = 0.0, min_q2 = 0.0;
    double mean_q1 = 0.0, mean_q2 = 0.0;
    std::array<int, 10> histogram_q1{};  // bins [0,0.1), ..., [0.9,1.0]
    std::array<int, 10> histogram_q2{};
};

struct ConformityReport {
    std::vector<std::string> violations;
    bool valid() const { return violations.empty(); }
};

// Relaxation parameters for generate_mesh.  Defaults follow the reference
// force-equilibrium generator: bars repel with F = max(L0 - L, 0) where
// L0 = fscale * RMS(bar lengths), explicit step deltat, Delaunay
// retriangulation once cumulative movement exceeds ttol*h0, convergence when
// every interior point moves less than dptol*h0 in one step.
struct GenerateOptions {
    double dptol = 1e-3;
    double ttol = 0.1;
    double fscale = 1.2;
    double deltat = 0.2;
    int max_iterations = 20000;
    int smoothing_passes = 20;  // neighbour-averaging polish after equilibrium
};

// Uniform unstructured triangulation of `domain` with target spacing h0.
// The four rectangle corners are mesh vertices; corner triangles are already
// repaired.  Deterministic for fixed (domain, h0, seed); seed != 0 jitters
// the initial lattice by at most 0.01*h0.
// Throws MeshGenerationError when relaxation does not converge.
Mesh generate_mesh(const Rect& domain, double h0, unsigned seed = 0,
                   const GenerateOptions& options = {});

// Removes triangles with two boundary edges by flipping the edge shared with
// their unique interior neighbour.  Throws MeshRepairError when a flip would
// invert a triangle or the repair cannot terminate.
Mesh fix_corner_triangles(Mesh mesh);

// (q1, q2) of Field's quality measures:
//   q1 = (b+c-a)(c+a-b)(a+b-c)/(abc),  q2 = 4*sqrt(3)*A/(a^2+b^2+c^2).
// Throws DegenerateTriangleError on non-positive area.
std::pair<double, double> quality_measures(Point2 a, Point2 b, Point2 c);

MeshQualityReport mesh_quality(const Mesh& mesh);

// Longest edge over all triangles.
double mesh_parameter_h(const Mesh& mesh);

// Checks every Mesh invariant; the report is empty iff the mesh is valid.
ConformityReport validate_conformity(const Mesh& mesh);

}  // namespace stokesmini
