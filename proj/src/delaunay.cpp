#include "stokesmini/delaunay.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <unordered_map>

namespace stokesmini {

namespace {

struct Tri {
    int v[3];    // counterclockwise
    int nbr[3];  // nbr[k] shares edge (v[k], v[(k+1)%3]); -1 = hull
    bool alive = true;
};

// Orientation of c relative to directed a->b, computed in extended precision.
// Returns +1 left, -1 right, 0 within roundoff of collinear.
int orient(Point2 a, Point2 b, Point2 c) {
    const long double acx = (long double)a.x - c.x;
    const long double acy = (long double)a.y - c.y;
    const long double bcx = (long double)b.x - c.x;
    const long double bcy = (long double)b.y - c.y;
    const long double det = acx * bcy - acy * bcx;
    const long double mag = std::fabs(acx * bcy) + std::fabs(acy * bcx);
    const long double eps = 8 * std::numeric_limits<long double>::epsilon() * mag;
    if (det > eps) return 1;
    if (det < -eps) return -1;
    return 0;
}

// Strictly-inside-circumcircle test for CCW triangle (a,b,c).  Ties count as
// outside, which keeps Bowyer-Watson cavities star-shaped on degenerate input.
bool in_circle(Point2 a, Point2 b, Point2 c, Point2 p) {
    const long double adx = (long double)a.x - p.x, ady = (long double)a.y - p.y;
    const long double bdx = (long double)b.x - p.x, bdy = (long double)b.y - p.y;
    const long double cdx = (long double)c.x - p.x, cdy = (long double)c.y - p.y;
    const long double ad = adx * adx + ady * ady;
    const long double bd = bdx * bdx + bdy * bdy;
    const long double cd = cdx * cdx + cdy * cdy;
    const long double det = adx * (bdy * cd - bd * cdy) - ady * (bdx * cd - bd * cdx) +
                            ad * (bdx * cdy - bdy * cdx);
    const long double mag = std::fabs(adx * bdy * cd) + std::fabs(adx * bd * cdy) +
                            std::fabs(ady * bdx * cd) + std::fabs(ady * bd * cdx) +
                            std::fabs(ad * bdx * cdy) + std::fabs(ad * bdy * cdx);
    const long double eps = 16 * std::numeric_limits<long double>::epsilon() * mag;
    return det > eps;
}

class BowyerWatson {
public:
    explicit BowyerWatson(const std::vector<Point2>& points) : pts_(points) {
        const int n = static_cast<int>(points.size());
        double lox = points[0].x, hix = points[0].x;
        double loy = points[0].y, hiy = points[0].y;
        for (const auto& p : points) {
            lox = std::min(lox, p.x); hix = std::max(hix, p.x);
            loy = std::min(loy, p.y); hiy = std::max(hiy, p.y);
        }
        const double cx = 0.5 * (lox + hix), cy = 0.5 * (loy + hiy);
        const double r = 100.0 * std::max({hix - lox, hiy - loy, 1e-12});
        // super-triangle vertices appended after the real points
        pts_.push_back({cx, cy + 2.0 * r});
        pts_.push_back({cx - 1.8 * r, cy - r});
        pts_.push_back({cx + 1.8 * r, cy - r});
        tris_.push_back(Tri{{n, n + 1, n + 2}, {-1, -1, -1}, true});
        for (int i = 0; i < n; ++i) insert(i);
    }

    std::vector<Triangle> result() const {
        const int n = static_cast<int>(pts_.size()) - 3;
        std::vector<Triangle> out;
        for (const auto& t : tris_) {
            if (!t.alive) continue;
            if (t.v[0] >= n || t.v[1] >= n || t.v[2] >= n) continue;
            out.push_back(Triangle{{t.v[0], t.v[1], t.v[2]}});
        }
        return out;
    }

private:
    std::vector<Point2> pts_;
    std::vector<Tri> tris_;
    int hint_ = 0;

    // Walk from the hint towards p; returns a triangle whose closed interior
    // contains p, plus the local edge index p lies on (-1 if strictly inside).
    std::pair<int, int> locate(Point2 p) {
        int t = hint_;
        if (t < 0 || t >= (int)tris_.size() || !tris_[t].alive) t = first_alive();
        const int max_steps = 4 * (int)tris_.size() + 16;
        for (int step = 0; step < max_steps; ++step) {
            const Tri& tri = tris_[t];
            int on_edge = -1;
            bool stepped = false;
            for (int k = 0; k < 3 && !stepped; ++k) {
                const int o = orient(pts_[tri.v[k]], pts_[tri.v[(k + 1) % 3]], p);
                if (o < 0) {
                    if (tri.nbr[k] >= 0) {
                        t = tri.nbr[k];
                        stepped = true;
                    } else {
                        return {t, -1};  // outside hull: cannot happen inside super-tri
                    }
                } else if (o == 0) {
                    on_edge = k;
                }
            }
            if (!stepped) return {t, on_edge};
        }
        // Fallback: exhaustive scan (walk failed on degenerate geometry).
        for (int i = 0; i < (int)tris_.size(); ++i) {
            if (!tris_[i].alive) continue;
            const Tri& tri = tris_[i];
            bool inside = true;
            int on_edge = -1;
            for (int k = 0; k < 3; ++k) {
                const int o = orient(pts_[tri.v[k]], pts_[tri.v[(k + 1) % 3]], p);
                if (o < 0) inside = false;
                else if (o == 0) on_edge = k;
            }
            if (inside) return {i, on_edge};
        }
        throw std::runtime_error("delaunay: point location failed");
    }

    int first_alive() const {
        for (int i = (int)tris_.size() - 1; i >= 0; --i)
            if (tris_[i].alive) return i;
        throw std::runtime_error("delaunay: no alive triangle");
    }

    bool cavity_test(int t, Point2 p) const {
        const Tri& tri = tris_[t];
        return in_circle(pts_[tri.v[0]], pts_[tri.v[1]], pts_[tri.v[2]], p);
    }

    void insert(int ip) {
        const Point2 p = pts_[ip];
        auto [t0, on_edge] = locate(p);

        // Grow the cavity: triangles whose circumcircle strictly contains p.
        // The containing triangle is always carved; a point sitting exactly on
        // one of its edges also carves the neighbour across that edge.
        std::vector<int> cavity;
        std::vector<char> in_cavity(tris_.size(), 0);
        auto push = [&](int t) {
            if (t >= 0 && !in_cavity[t] && tris_[t].alive) {
                in_cavity[t] = 1;
                cavity.push_back(t);
            }
        };
        push(t0);
        if (on_edge >= 0) push(tris_[t0].nbr[on_edge]);
        for (std::size_t q = 0; q < cavity.size(); ++q) {
            const Tri tri = tris_[cavity[q]];
            for (int k = 0; k < 3; ++k) {
                const int nb = tri.nbr[k];
                if (nb >= 0 && !in_cavity[nb] && cavity_test(nb, p)) push(nb);
            }
        }

        // Cavity boundary: directed edges with the cavity on their left.
        struct BoundaryEdge { int a, b, outer; };
        std::vector<BoundaryEdge> boundary;
        for (int t : cavity) {
            const Tri& tri = tris_[t];
            for (int k = 0; k < 3; ++k) {
                const int nb = tri.nbr[k];
                if (nb < 0 || !in_cavity[nb]) {
                    boundary.push_back({tri.v[k], tri.v[(k + 1) % 3], nb});
                }
            }
        }
        for (int t : cavity) tris_[t].alive = false;

        // Star-fill: one new triangle per boundary edge, linked radially.
        std::unordered_map<std::int64_t, std::pair<int, int>> spoke;  // (lo,hi) -> (tri, edge k)
        auto key = [](int a, int b) {
            if (a > b) std::swap(a, b);
            return (static_cast<std::int64_t>(a) << 32) | static_cast<std::int64_t>(b);
        };
        int first_new = -1;
        for (const auto& e : boundary) {
            const int nt = (int)tris_.size();
            if (first_new < 0) first_new = nt;
            tris_.push_back(Tri{{e.a, e.b, ip}, {e.outer, -1, -1}, true});
            if (e.outer >= 0) {
                Tri& out = tris_[e.outer];
                for (int k = 0; k < 3; ++k) {
                    if ((out.v[k] == e.b && out.v[(k + 1) % 3] == e.a)) out.nbr[k] = nt;
                }
            }
            for (int k = 1; k < 3; ++k) {
                const int a = tris_[nt].v[k], b = tris_[nt].v[(k + 1) % 3];
                const auto it = spoke.find(key(a, b));
                if (it == spoke.end()) {
                    spoke.emplace(key(a, b), std::make_pair(nt, k));
                } else {
                    tris_[nt].nbr[k] = it->second.first;
                    tris_[it->second.first].nbr[it->second.second] = nt;
                }
            }
        }
        hint_ = first_new;
    }
};

}  // namespace

std::vector<Triangle> delaunay_triangulate(const std::vector<Point2>& points) {
    if (points.size() < 3) return {};
    BowyerWatson bw(points);
    return bw.result();
}

}  // namespace stokesmini
