#include "stokesmini/mesh_io.hpp"

#include <cstdio>
#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>

#include "stokesmini/errors.hpp"

namespace stokesmini {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

[[noreturn]] void malformed(const std::string& what) {
    throw Error("read_mesh: malformed input: " + what);
}

}  // namespace

void write_mesh(const Mesh& mesh, std::ostream& out) {
    out << "mesh2d 1\n";
    out << "vertices " << mesh.n_vertices() << "\n";
    for (int i = 0; i < mesh.n_vertices(); ++i) {
        out << i << " " << fmt17(mesh.vertices[i].x) << " " << fmt17(mesh.vertices[i].y) << " "
            << (mesh.boundary_vertex[i] ? 1 : 0) << "\n";
    }
    out << "triangles " << mesh.n_triangles() << "\n";
    for (int t = 0; t < mesh.n_triangles(); ++t) {
        const auto& v = mesh.triangles[t].v;
        out << t << " " << v[0] << " " << v[1] << " " << v[2] << "\n";
    }
}

void write_mesh_file(const Mesh& mesh, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("write_mesh_file: cannot open " + path);
    write_mesh(mesh, out);
    if (!out) throw Error("write_mesh_file: write failed for " + path);
}

Mesh read_mesh(std::istream& in) {
    std::string tag;
    int version = 0;
    if (!(in >> tag >> version) || tag != "mesh2d" || version != 1) {
        malformed("expected header 'mesh2d 1'");
    }
    int nv = 0;
    if (!(in >> tag >> nv) || tag != "vertices" || nv < 0) malformed("vertex count");
    Mesh mesh;
    mesh.vertices.resize(nv);
    mesh.boundary_vertex.resize(nv);
    for (int i = 0; i < nv; ++i) {
        int id = 0, flag = 0;
        double x = 0.0, y = 0.0;
        if (!(in >> id >> x >> y >> flag) || id != i || (flag != 0 && flag != 1)) {
            malformed("vertex line " + std::to_string(i));
        }
        mesh.vertices[i] = {x, y};
        mesh.boundary_vertex[i] = static_cast<std::uint8_t>(flag);
    }
    int nt = 0;
    if (!(in >> tag >> nt) || tag != "triangles" || nt < 0) malformed("triangle count");
    mesh.triangles.resize(nt);
    for (int t = 0; t < nt; ++t) {
        int id = 0, a = 0, b = 0, c = 0;
        if (!(in >> id >> a >> b >> c) || id != t) malformed("triangle line " + std::to_string(t));
        if (a < 0 || b < 0 || c < 0 || a >= nv || b >= nv || c >= nv) {
            malformed("triangle " + std::to_string(t) + " vertex index out of range");
        }
        mesh.triangles[t] = Triangle{{a, b, c}};
    }

    if (nv > 0) {
        Rect box{mesh.vertices[0].x, mesh.vertices[0].y, mesh.vertices[0].x, mesh.vertices[0].y};
        for (const auto& p : mesh.vertices) {
            box.ax = std::min(box.ax, p.x);
            box.bx = std::max(box.bx, p.x);
            box.ay = std::min(box.ay, p.y);
            box.by = std::max(box.by, p.y);
        }
        mesh.domain = box;
    }
    return mesh;
}

Mesh read_mesh_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("read_mesh_file: cannot open " + path);
    return read_mesh(in);
}

}  // namespace stokesmini
