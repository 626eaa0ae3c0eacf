#include "stokesmini/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <set>
#include <unordered_map>

#include "stokesmini/delaunay.hpp"

namespace stokesmini {

namespace {

std::int64_t edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::int64_t>(a) << 32) | static_cast<std::int64_t>(b);
}

// edge key -> indices of incident triangles (at most 2 in a conformal mesh,
// but the map tolerates more so validation can report the violation).
std::unordered_map<std::int64_t, std::vector<int>> build_edge_map(const Mesh& mesh) {
    std::unordered_map<std::int64_t, std::vector<int>> edges;
    edges.reserve(mesh.triangles.size() * 2);
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto& v = mesh.triangles[t].v;
        for (int k = 0; k < 3; ++k) {
            edges[edge_key(v[k], v[(k + 1) % 3])].push_back(t);
        }
    }
    return edges;
}

double boundary_tol(const Rect& r) {
    return 1e-12 * std::max(r.width(), r.height());
}

bool on_domain_boundary(Point2 p, const Rect& r, double tol) {
    return std::fabs(p.x - r.ax) <= tol || std::fabs(p.x - r.bx) <= tol ||
           std::fabs(p.y - r.ay) <= tol || std::fabs(p.y - r.by) <= tol;
}

void flag_boundary_vertices(Mesh& mesh) {
    const double tol = boundary_tol(mesh.domain);
    mesh.boundary_vertex.assign(mesh.vertices.size(), 0);
    for (std::size_t i = 0; i < mesh.vertices.size(); ++i) {
        if (on_domain_boundary(mesh.vertices[i], mesh.domain, tol)) mesh.boundary_vertex[i] = 1;
    }
}

// Snap near-boundary coordinates exactly onto the rectangle sides.
void snap_to_boundary(Mesh& mesh) {
    const Rect& r = mesh.domain;
    const double tol = boundary_tol(r);
    for (auto& p : mesh.vertices) {
        if (std::fabs(p.x - r.ax) <= tol) p.x = r.ax;
        if (std::fabs(p.x - r.bx) <= tol) p.x = r.bx;
        if (std::fabs(p.y - r.ay) <= tol) p.y = r.ay;
        if (std::fabs(p.y - r.by) <= tol) p.y = r.by;
    }
}

// Triangulate the point set and keep triangles whose centroid is inside the
// domain by more than geps; drops outside slivers along the hull.
std::vector<Triangle> triangulate_interior(const std::vector<Point2>& pts, const Rect& domain,
                                           double geps) {
    std::vector<Triangle> tris = delaunay_triangulate(pts);
    std::vector<Triangle> kept;
    kept.reserve(tris.size());
    for (const auto& t : tris) {
        const Point2 c{(pts[t.v[0]].x + pts[t.v[1]].x + pts[t.v[2]].x) / 3.0,
                       (pts[t.v[0]].y + pts[t.v[1]].y + pts[t.v[2]].y) / 3.0};
        if (domain.signed_distance(c) < -geps) kept.push_back(t);
    }
    return kept;
}

std::vector<std::pair<int, int>> unique_edges(const std::vector<Triangle>& tris) {
    std::set<std::pair<int, int>> bars;
    for (const auto& t : tris) {
        for (int k = 0; k < 3; ++k) {
            int a = t.v[k], b = t.v[(k + 1) % 3];
            if (a > b) std::swap(a, b);
            bars.insert({a, b});
        }
    }
    return {bars.begin(), bars.end()};
}

// Jacobi smoothing on fixed connectivity, run after corner repair so the
// flipped corner quadrilaterals relax too.  Interior vertices move to the
// average of their neighbours; boundary vertices (other than the rectangle
// corners) slide along their side towards the midpoint of their two
// boundary-edge neighbours.  The covered region is unchanged; a pass that
// would invert any triangle is rolled back.
void smooth_interior(Mesh& mesh, int passes) {
    const int nv = mesh.n_vertices();
    const double tol = boundary_tol(mesh.domain);
    const Rect& dom = mesh.domain;

    std::vector<std::pair<int, int>> bars;
    std::vector<std::vector<int>> boundary_nbrs(nv);
    {
        std::unordered_map<std::int64_t, int> edge_count;
        for (const auto& t : mesh.triangles) {
            for (int k = 0; k < 3; ++k) {
                ++edge_count[edge_key(t.v[k], t.v[(k + 1) % 3])];
            }
        }
        std::set<std::pair<int, int>> bs;
        for (const auto& t : mesh.triangles) {
            for (int k = 0; k < 3; ++k) {
                int a = t.v[k], b = t.v[(k + 1) % 3];
                if (a > b) std::swap(a, b);
                if (bs.insert({a, b}).second &&
                    edge_count.at(edge_key(a, b)) == 1) {
                    boundary_nbrs[a].push_back(b);
                    boundary_nbrs[b].push_back(a);
                }
            }
        }
        bars.assign(bs.begin(), bs.end());
    }

    auto is_corner = [&](Point2 p) {
        const bool on_x = std::fabs(p.x - dom.ax) <= tol || std::fabs(p.x - dom.bx) <= tol;
        const bool on_y = std::fabs(p.y - dom.ay) <= tol || std::fabs(p.y - dom.by) <= tol;
        return on_x && on_y;
    };

    for (int pass = 0; pass < passes; ++pass) {
        std::vector<Vec2> sum(nv, Vec2{});
        std::vector<int> cnt(nv, 0);
        for (const auto& [i, j] : bars) {
            sum[i] += mesh.vertices[j];
            sum[j] += mesh.vertices[i];
            ++cnt[i];
            ++cnt[j];
        }
        const std::vector<Point2> backup = mesh.vertices;
        for (int i = 0; i < nv; ++i) {
            const Point2 p = backup[i];
            if (!mesh.boundary_vertex[i]) {
                if (cnt[i] > 0) mesh.vertices[i] = {sum[i].x / cnt[i], sum[i].y / cnt[i]};
            } else if (!is_corner(p) && boundary_nbrs[i].size() == 2) {
                const Point2 u = backup[boundary_nbrs[i][0]];
                const Point2 w = backup[boundary_nbrs[i][1]];
                if (std::fabs(p.y - dom.ay) <= tol || std::fabs(p.y - dom.by) <= tol) {
                    mesh.vertices[i].x = 0.5 * (u.x + w.x);
                } else {
                    mesh.vertices[i].y = 0.5 * (u.y + w.y);
                }
            }
        }
        bool inverted = false;
        for (int t = 0; t < mesh.n_triangles() && !inverted; ++t) {
            const auto c = mesh.corners(t);
            inverted = !(signed_area(c[0], c[1], c[2]) > 0.0);
        }
        if (inverted) {
            mesh.vertices = backup;
            return;
        }
    }
}

// Discard vertices not referenced by any triangle and remap indices.
void compact_vertices(Mesh& mesh) {
    std::vector<int> remap(mesh.vertices.size(), -1);
    std::vector<Point2> kept;
    kept.reserve(mesh.vertices.size());
    for (auto& t : mesh.triangles) {
        for (int& vi : t.v) {
            if (remap[vi] < 0) {
                remap[vi] = static_cast<int>(kept.size());
                kept.push_back(mesh.vertices[vi]);
            }
            vi = remap[vi];
        }
    }
    mesh.vertices = std::move(kept);
}

}  // namespace

std::pair<double, double> quality_measures(Point2 pa, Point2 pb, Point2 pc) {
    const double area = signed_area(pa, pb, pc);
    if (!(area > 0.0)) {
        throw DegenerateTriangleError("quality_measures: non-positive triangle area");
    }
    const double a = (pb - pc).norm();
    const double b = (pc - pa).norm();
    const double c = (pa - pb).norm();
    const double q1 = (b + c - a) * (c + a - b) * (a + b - c) / (a * b * c);
    const double q2 = 4.0 * std::sqrt(3.0) * area / (a * a + b * b + c * c);
    return {q1, q2};
}

MeshQualityReport mesh_quality(const Mesh& mesh) {
    MeshQualityReport rep;
    rep.q1.reserve(mesh.triangles.size());
    rep.q2.reserve(mesh.triangles.size());
    double s1 = 0.0, s2 = 0.0;
    rep.min_q1 = rep.min_q2 = std::numeric_limits<double>::infinity();
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto c = mesh.corners(t);
        const auto [q1, q2] = quality_measures(c[0], c[1], c[2]);
        rep.q1.push_back(q1);
        rep.q2.push_back(q2);
        s1 += q1;
        s2 += q2;
        rep.min_q1 = std::min(rep.min_q1, q1);
        rep.min_q2 = std::min(rep.min_q2, q2);
        const int b1 = std::min(9, std::max(0, static_cast<int>(q1 * 10.0)));
        const int b2 = std::min(9, std::max(0, static_cast<int>(q2 * 10.0)));
        ++rep.histogram_q1[b1];
        ++rep.histogram_q2[b2];
    }
    if (!rep.q1.empty()) {
        rep.mean_q1 = s1 / static_cast<double>(rep.q1.size());
        rep.mean_q2 = s2 / static_cast<double>(rep.q2.size());
    }
    return rep;
}

double mesh_parameter_h(const Mesh& mesh) {
    if (mesh.triangles.empty()) {
        throw std::invalid_argument("mesh_parameter_h: empty mesh");
    }
    double h = 0.0;
    for (const auto& t : mesh.triangles) {
        for (int k = 0; k < 3; ++k) {
            h = std::max(h, (mesh.vertices[t.v[k]] - mesh.vertices[t.v[(k + 1) % 3]]).norm());
        }
    }
    return h;
}

Mesh fix_corner_triangles(Mesh mesh) {
    // Edges created by earlier flips; re-flipping one means the repair cycles.
    std::set<std::int64_t> created;
    const int max_flips = 2 * mesh.n_triangles() + 8;
    for (int flips = 0; flips <= max_flips; ++flips) {
        const auto edges = build_edge_map(mesh);
        auto boundary_edge_count = [&](int t) {
            const auto& v = mesh.triangles[t].v;
            int n = 0;
            for (int k = 0; k < 3; ++k) {
                if (edges.at(edge_key(v[k], v[(k + 1) % 3])).size() == 1) ++n;
            }
            return n;
        };
        int corner = -1;
        for (int t = 0; t < mesh.n_triangles() && corner < 0; ++t) {
            if (boundary_edge_count(t) >= 2) corner = t;
        }
        if (corner < 0) return mesh;

        const auto& v = mesh.triangles[corner].v;
        int interior_k = -1;
        for (int k = 0; k < 3; ++k) {
            if (edges.at(edge_key(v[k], v[(k + 1) % 3])).size() == 2) interior_k = k;
        }
        if (interior_k < 0) {
            throw MeshRepairError("fix_corner_triangles: triangle has no interior neighbour",
                                  corner);
        }
        const int a = v[interior_k];
        const int b = v[(interior_k + 1) % 3];
        const int c = v[(interior_k + 2) % 3];  // apex with two boundary edges
        if (created.count(edge_key(a, b))) {
            throw MeshRepairError("fix_corner_triangles: repair cycles on triangle", corner);
        }
        const auto& incident = edges.at(edge_key(a, b));
        const int other = incident[0] == corner ? incident[1] : incident[0];
        int d = -1;
        for (int vid : mesh.triangles[other].v) {
            if (vid != a && vid != b) d = vid;
        }
        if (edges.count(edge_key(c, d))) {
            throw MeshRepairError("fix_corner_triangles: flip edge already exists at triangle",
                                  corner);
        }
        // Flip (a,b) -> (c,d).  Triangle `corner` is (a,b,c) CCW, so (a,d,c)
        // and (d,b,c) keep the orientation when the quadrilateral is convex.
        const Triangle t1{{a, d, c}};
        const Triangle t2{{d, b, c}};
        const auto area = [&](const Triangle& t) {
            return signed_area(mesh.vertices[t.v[0]], mesh.vertices[t.v[1]],
                               mesh.vertices[t.v[2]]);
        };
        if (!(area(t1) > 0.0) || !(area(t2) > 0.0)) {
            throw MeshRepairError("fix_corner_triangles: flip would invert triangle", corner);
        }
        mesh.triangles[corner] = t1;
        mesh.triangles[other] = t2;
        created.insert(edge_key(c, d));
    }
    throw MeshRepairError("fix_corner_triangles: repair did not terminate", -1);
}

ConformityReport validate_conformity(const Mesh& mesh) {
    ConformityReport rep;
    auto add = [&](const std::string& s) { rep.violations.push_back(s); };

    const int nv = mesh.n_vertices();
    if (mesh.triangles.empty()) {
        add("mesh has no triangles");
        return rep;
    }
    if (mesh.boundary_vertex.size() != mesh.vertices.size()) {
        add("boundary flag array size mismatch");
        return rep;
    }

    double area_sum = 0.0;
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto& v = mesh.triangles[t].v;
        if (v[0] < 0 || v[1] < 0 || v[2] < 0 || v[0] >= nv || v[1] >= nv || v[2] >= nv) {
            add("triangle " + std::to_string(t) + ": vertex index out of range");
            return rep;
        }
        if (v[0] == v[1] || v[1] == v[2] || v[0] == v[2]) {
            add("triangle " + std::to_string(t) + ": repeated vertex");
            continue;
        }
        const auto c = mesh.corners(t);
        const double a = signed_area(c[0], c[1], c[2]);
        if (!(a > 0.0)) {
            add("triangle " + std::to_string(t) + ": non-positive orientation");
        }
        area_sum += a;
    }

    const auto edges = build_edge_map(mesh);
    const double tol = boundary_tol(mesh.domain);
    std::vector<std::uint8_t> on_boundary_edge(nv, 0);
    std::vector<int> boundary_edges_per_tri(mesh.triangles.size(), 0);
    for (const auto& [key, tris] : edges) {
        if (tris.size() > 2) {
            add("edge shared by " + std::to_string(tris.size()) + " triangles (non-conformal)");
            continue;
        }
        if (tris.size() == 1) {
            const int a = static_cast<int>(key >> 32);
            const int b = static_cast<int>(key & 0xffffffff);
            on_boundary_edge[a] = on_boundary_edge[b] = 1;
            ++boundary_edges_per_tri[tris[0]];
            const Point2 pa = mesh.vertices[a], pb = mesh.vertices[b];
            const bool on_side =
                (std::fabs(pa.x - mesh.domain.ax) <= tol && std::fabs(pb.x - mesh.domain.ax) <= tol) ||
                (std::fabs(pa.x - mesh.domain.bx) <= tol && std::fabs(pb.x - mesh.domain.bx) <= tol) ||
                (std::fabs(pa.y - mesh.domain.ay) <= tol && std::fabs(pb.y - mesh.domain.ay) <= tol) ||
                (std::fabs(pa.y - mesh.domain.by) <= tol && std::fabs(pb.y - mesh.domain.by) <= tol);
            if (!on_side) {
                add("boundary edge (" + std::to_string(a) + "," + std::to_string(b) +
                    ") does not lie on the domain boundary (hanging node or hole)");
            }
        }
    }
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        if (boundary_edges_per_tri[t] >= 2) {
            add("triangle " + std::to_string(t) + " has two boundary edges (corner triangle)");
        }
    }

    for (int i = 0; i < nv; ++i) {
        const bool geo = on_domain_boundary(mesh.vertices[i], mesh.domain, tol);
        if (on_boundary_edge[i] && !mesh.boundary_vertex[i]) {
            add("vertex " + std::to_string(i) + " on a boundary edge is not flagged boundary");
        }
        if (mesh.boundary_vertex[i] && !geo) {
            add("vertex " + std::to_string(i) + " flagged boundary but off the domain boundary");
        }
    }

    const double dom_area = mesh.domain.area();
    if (std::fabs(area_sum - dom_area) > 1e-12 * dom_area) {
        add("triangle areas sum to " + std::to_string(area_sum) + ", expected " +
            std::to_string(dom_area));
    }
    return rep;
}

Mesh generate_mesh(const Rect& domain, double h0, unsigned seed, const GenerateOptions& opt) {
    if (!(h0 > 0.0) || h0 >= std::min(domain.width(), domain.height())) {
        throw std::invalid_argument("generate_mesh: h0 must be positive and smaller than the "
                                    "shortest rectangle side");
    }

    const double geps = 1e-3 * h0;
    const double deps = std::sqrt(std::numeric_limits<double>::epsilon()) * h0;

    // Fixed points first: the rectangle corners.
    std::vector<Point2> pts = {{domain.ax, domain.ay},
                               {domain.bx, domain.ay},
                               {domain.ax, domain.by},
                               {domain.bx, domain.by}};
    const int n_fixed = static_cast<int>(pts.size());

    // Shifted equilateral lattice covering the rectangle.
    const double row_h = h0 * std::sqrt(3.0) / 2.0;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> jitter(-0.01 * h0, 0.01 * h0);
    int row = 0;
    for (double y = domain.ay; y <= domain.by + geps; y += row_h, ++row) {
        const double shift = (row % 2 == 1) ? h0 / 2.0 : 0.0;
        for (double x = domain.ax + shift; x <= domain.bx + geps; x += h0) {
            Point2 p{x, y};
            if (domain.signed_distance(p) >= geps) continue;
            bool dup = false;
            for (int f = 0; f < n_fixed && !dup; ++f) {
                dup = (p - pts[f]).norm() < 1e-6 * h0;
            }
            if (dup) continue;
            if (seed != 0) {
                p.x += jitter(rng);
                p.y += jitter(rng);
            }
            pts.push_back(p);
        }
    }

    auto project_to_boundary = [&](Point2& p) {
        const double d = domain.signed_distance(p);
        const double gx = (domain.signed_distance({p.x + deps, p.y}) - d) / deps;
        const double gy = (domain.signed_distance({p.x, p.y + deps}) - d) / deps;
        const double g2 = gx * gx + gy * gy;
        p.x -= d * gx / g2;
        p.y -= d * gy / g2;
    };

    std::vector<Triangle> tris;
    std::vector<std::pair<int, int>> bars;
    std::vector<Point2> last_tri_pos;
    std::vector<Vec2> force;

    bool converged = false;
    double max_disp = std::numeric_limits<double>::infinity();
    int it = 0;
    for (; it < opt.max_iterations; ++it) {
        const int n = static_cast<int>(pts.size());
        // Retriangulate when any point drifted ttol*h0 since the last pass.
        bool retriangulate = last_tri_pos.size() != pts.size();
        if (!retriangulate) {
            for (int i = 0; i < n; ++i) {
                if ((pts[i] - last_tri_pos[i]).norm() > opt.ttol * h0) {
                    retriangulate = true;
                    break;
                }
            }
        }
        if (retriangulate) {
            tris = triangulate_interior(pts, domain, geps);
            bars = unique_edges(tris);
            last_tri_pos = pts;
        }

        // Uniform sizing: the target bar length scales with the RMS of the
        // current bar lengths, so the net force stays repulsive without
        // over-compressing when the point count is not an exact fit.
        double len2_sum = 0.0;
        for (const auto& [i, j] : bars) len2_sum += (pts[i] - pts[j]).norm2();
        const double target_len =
            opt.fscale * std::sqrt(len2_sum / static_cast<double>(bars.size()));

        // Density control: drop one endpoint of bars compressed below half
        // the target length, then retriangulate.
        if (it > 0 && it % 30 == 0) {
            std::vector<std::uint8_t> remove(n, 0);
            for (const auto& [i, j] : bars) {
                if ((pts[i] - pts[j]).norm() < 0.5 * target_len) {
                    const int victim = i >= n_fixed ? i : j;
                    if (victim >= n_fixed) remove[victim] = 1;
                }
            }
            if (std::count(remove.begin(), remove.end(), std::uint8_t{1}) > 0) {
                std::vector<Point2> kept;
                kept.reserve(pts.size());
                for (int i = 0; i < n; ++i) {
                    if (!remove[i]) kept.push_back(pts[i]);
                }
                pts = std::move(kept);
                last_tri_pos.clear();
                continue;
            }
        }

        force.assign(n, Vec2{});
        for (const auto& [i, j] : bars) {
            const Vec2 d = pts[i] - pts[j];
            const double len = d.norm();
            const double f = std::max(target_len - len, 0.0);
            if (f > 0.0 && len > 0.0) {
                const Vec2 fv = d * (f / len);
                force[i] += fv;
                force[j] -= fv;
            }
        }
        for (int i = 0; i < n_fixed; ++i) force[i] = Vec2{};

        for (int i = 0; i < n; ++i) pts[i] += force[i] * opt.deltat;

        // Project exterior points back via the numerical SDF gradient.
        max_disp = 0.0;
        for (int i = 0; i < n; ++i) {
            const double d = domain.signed_distance(pts[i]);
            if (d > 0.0) {
                project_to_boundary(pts[i]);
            } else if (d < -geps) {
                max_disp = std::max(max_disp, (force[i] * opt.deltat).norm());
            }
        }
        if (max_disp < opt.dptol * h0) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw MeshGenerationError(
            "generate_mesh: relaxation did not converge after " + std::to_string(it) +
                " iterations (last interior displacement " + std::to_string(max_disp) + ")",
            it, max_disp);
    }

    // Points resting inside the geps band are boundary points that crowding
    // kept marginally off the wall; settle them onto it so the triangulation
    // has no boundary slivers.
    for (std::size_t i = n_fixed; i < pts.size(); ++i) {
        if (domain.signed_distance(pts[i]) > -geps) project_to_boundary(pts[i]);
    }

    Mesh mesh;
    mesh.domain = domain;
    mesh.vertices = pts;
    mesh.triangles = triangulate_interior(pts, domain, geps);
    compact_vertices(mesh);
    snap_to_boundary(mesh);
    flag_boundary_vertices(mesh);
    mesh = fix_corner_triangles(std::move(mesh));
    flag_boundary_vertices(mesh);
    smooth_interior(mesh, opt.smoothing_passes);

    const auto report = validate_conformity(mesh);
    if (!report.valid()) {
        throw MeshGenerationError("generate_mesh: produced an invalid mesh: " +
                                      report.violations.front(),
                                  it, max_disp);
    }
    return mesh;
}

}  // namespace stokesmini
