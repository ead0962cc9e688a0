#include "epsteinlab/schouten.hpp"

#include <cmath>
#include <limits>

namespace epsteinlab {

std::array<double, 3> Grid3::point(std::size_t idx) const {
    const std::size_t nn = static_cast<std::size_t>(n);
    return {static_cast<double>(idx % nn) * h(), static_cast<double>((idx / nn) % nn) * h(),
            static_cast<double>(idx / (nn * nn)) * h()};
}

Scalar3 Scalar3::sample(const Grid3& g, const std::function<double(double, double, double)>& fn) {
    Scalar3 s{g, std::vector<double>(g.size())};
    for (std::size_t k = 0; k < g.size(); ++k) {
        const auto p = g.point(k);
        s.v[k] = fn(p[0], p[1], p[2]);
    }
    return s;
}

namespace {

std::array<int, 3> coords(const Grid3& g, std::size_t idx) {
    const std::size_t nn = static_cast<std::size_t>(g.n);
    return {static_cast<int>(idx % nn), static_cast<int>((idx / nn) % nn), static_cast<int>(idx / (nn * nn))};
}

std::size_t shifted(const Grid3& g, std::array<int, 3> c, int axis, int off) {
    c[axis] += off;
    return g.index(c[0], c[1], c[2]);
}

void check_dimension(int d) {
    if (d != 3) throw UnsupportedDimension(d);
}

}  // namespace

std::vector<std::array<double, 3>> gradient3(const Scalar3& f) {
    const Grid3& g = f.grid;
    const double ih = 0.5 / g.h();
    std::vector<std::array<double, 3>> out(g.size());
    for (std::size_t k = 0; k < g.size(); ++k) {
        const auto c = coords(g, k);
        for (int a = 0; a < 3; ++a) out[k][a] = ih * (f.v[shifted(g, c, a, 1)] - f.v[shifted(g, c, a, -1)]);
    }
    return out;
}

Sym3Field hessian3(const Scalar3& f) {
    const Grid3& g = f.grid;
    const double h = g.h();
    Sym3Field out{g, std::vector<Sym3>(g.size())};
    for (std::size_t k = 0; k < g.size(); ++k) {
        const auto c = coords(g, k);
        for (int a = 0; a < 3; ++a) {
            out.v[k][sym3_slot(a, a)] =
                (f.v[shifted(g, c, a, 1)] + f.v[shifted(g, c, a, -1)] - 2.0 * f.v[k]) / (h * h);
            for (int b = a + 1; b < 3; ++b) {
                auto at = [&](int sa, int sb) {
                    auto cc = c;
                    cc[a] += sa;
                    cc[b] += sb;
                    return f.v[g.index(cc[0], cc[1], cc[2])];
                };
                out.v[k][sym3_slot(a, b)] = (at(1, 1) - at(1, -1) - at(-1, 1) + at(-1, -1)) / (4.0 * h * h);
            }
        }
    }
    return out;
}

Sym3Field schouten_conformal(int d, const Scalar3& u) {
    check_dimension(d);
    const auto du = gradient3(u);
    Sym3Field out = hessian3(u);
    for (std::size_t k = 0; k < out.v.size(); ++k) {
        const auto& p = du[k];
        const double n2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
        for (int a = 0; a < 3; ++a)
            for (int b = a; b < 3; ++b) {
                double& s = out.v[k][sym3_slot(a, b)];
                s = -s + p[a] * p[b] - (a == b ? 0.5 * n2 : 0.0);
            }
    }
    return out;
}

Sym3Field h2_conformal(int d, const Scalar3& u) {
    Sym3Field out = schouten_conformal(d, u);
    for (auto& t : out.v)
        for (double& x : t) x = -x;
    return out;
}

double schouten_identity_residual(int d, const Scalar3& u) {
    check_dimension(d);
    const Sym3Field lhs = h2_conformal(d, u);  // h2 of the flat metric vanishes
    Scalar3 e{u.grid, u.v};
    for (double& x : e.v) x = std::exp(-x);
    const Sym3Field he = hessian3(e);
    const auto du = gradient3(u);
    Sym3Field rhs{u.grid, std::vector<Sym3>(u.v.size())};
    for (std::size_t k = 0; k < rhs.v.size(); ++k) {
        const auto& p = du[k];
        const double n2 = p[0] * p[0] + p[1] * p[1] + p[2] * p[2];
        for (int a = 0; a < 3; ++a)
            for (int b = a; b < 3; ++b)
                rhs.v[k][sym3_slot(a, b)] =
                    -std::exp(u.v[k]) * he.v[k][sym3_slot(a, b)] + (a == b ? 0.5 * n2 : 0.0);
    }
    return sup_norm(difference(lhs, rhs));
}

double sup_norm(const Sym3Field& f) {
    double best = 0.0;
    for (const auto& t : f.v) {
        double s = 0.0;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) s += t[sym3_slot(a, b)] * t[sym3_slot(a, b)];
        if (std::isnan(s)) return std::numeric_limits<double>::infinity();
        best = std::max(best, std::sqrt(s));
    }
    return best;
}

Sym3Field difference(const Sym3Field& a, const Sym3Field& b) {
    Sym3Field out{a.grid, a.v};
    for (std::size_t k = 0; k < out.v.size(); ++k)
        for (int s = 0; s < 6; ++s) out.v[k][s] -= b.v[k][s];
    return out;
}

}  // namespace epsteinlab
