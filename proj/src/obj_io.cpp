#include "epsteinlab/obj_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace epsteinlab {

ObjMesh surface_mesh(const EmbeddedSurface& s) {
    const auto& c = s.x.chart();
    ObjMesh m;
    std::vector<int> id(c.size(), -1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (!c.active(k)) continue;
        id[k] = static_cast<int>(m.vertices.size());
        m.vertices.push_back(to_poincare_ball(HyperboloidPoint{s.x[k]}));
    }
    for (int j = 0; j + 1 < c.ny(); ++j)
        for (int i = 0; i + 1 < c.nx(); ++i) {
            const int a = id[c.index(i, j)], b = id[c.index(i + 1, j)];
            const int d = id[c.index(i, j + 1)], e = id[c.index(i + 1, j + 1)];
            if (a < 0 || b < 0 || d < 0 || e < 0) continue;
            m.faces.push_back({a, b, e});
            m.faces.push_back({a, e, d});
        }
    return m;
}

void export_obj(const ObjMesh& m, const std::string& path) {
    std::ofstream os(path);
    if (!os) throw IoError("cannot open " + path + " for writing");
    char buf[96];
    for (const auto& v : m.vertices) {
        std::snprintf(buf, sizeof buf, "v %.17g %.17g %.17g\n", v[0], v[1], v[2]);
        os << buf;
    }
    for (const auto& f : m.faces) os << "f " << f[0] + 1 << ' ' << f[1] + 1 << ' ' << f[2] + 1 << '\n';
    if (!os) throw IoError("write to " + path + " failed");
}

void export_obj(const EmbeddedSurface& s, const std::string& path) { export_obj(surface_mesh(s), path); }

ObjMesh import_obj(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw IoError("cannot open " + path);
    ObjMesh m;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        if (tag == "v") {
            std::array<double, 3> v{};
            if (!(ls >> v[0] >> v[1] >> v[2])) throw IoError(path + ":" + std::to_string(lineno) + ": bad vertex");
            m.vertices.push_back(v);
        } else if (tag == "f") {
            std::array<int, 3> f{};
            for (int& x : f) {
                std::string tok;
                if (!(ls >> tok)) throw IoError(path + ":" + std::to_string(lineno) + ": face needs 3 vertices");
                x = std::atoi(tok.c_str()) - 1;  // "i/t/n" forms keep the leading index
                if (x < 0) throw IoError(path + ":" + std::to_string(lineno) + ": bad face index");
            }
            m.faces.push_back(f);
        }
    }
    for (const auto& f : m.faces)
        for (int x : f)
            if (x >= static_cast<int>(m.vertices.size())) throw IoError(path + ": face index out of range");
    return m;
}

double hyperboloid_roundtrip_residual(const ObjMesh& m) {
    double worst = 0.0;
    for (const auto& v : m.vertices) {
        const MinkVec x = from_poincare_ball(v).x;
        worst = std::max(worst, std::abs(mink_inner(x, x) + 1.0));
    }
    return worst;
}

}  // namespace epsteinlab
