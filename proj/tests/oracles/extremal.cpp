#include <cmath>
#include <random>
#include <vector>

#include "oracles.hpp"

namespace oracle {

double extremal_length_by_energy(int p, int q, cplx tau, int n, unsigned seed) {
    // Gradient in lattice coordinates (a, b) maps to the plane through
    // J = (1 Re tau; 0 Im tau); the energy density is grad^T M grad with
    // M = (J^T J)^{-1}, times the area factor Im tau.
    const double tr = tau.real(), ti = tau.imag();
    const double j11 = 1.0, j12 = tr, j22 = ti;
    const double g11 = j11 * j11, g12 = j11 * j12, g22 = j12 * j12 + j22 * j22;
    const double det = g11 * g22 - g12 * g12;
    const double m11 = g22 / det, m12 = -g12 / det, m22 = g11 / det;
    const double h = 1.0 / n;
    const std::size_t N = static_cast<std::size_t>(n) * n;
    auto id = [n](int i, int j) { return static_cast<std::size_t>(((j % n) + n) % n) * n + ((i % n) + n) % n; };

    // Each grid cell splits into two right triangles; both carry a constant
    // gradient (ga, gb) of F = -q a + p b + G.
    auto energy_and_grad = [&](const std::vector<double>& G, std::vector<double>* grad) {
        if (grad) grad->assign(N, 0.0);
        double e = 0.0;
        const double w = 0.5 * h * h * ti;  // triangle area in the plane
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i) {
                const std::size_t v00 = id(i, j), v10 = id(i + 1, j), v01 = id(i, j + 1), v11 = id(i + 1, j + 1);
                // lower triangle (00, 10, 01) and upper triangle (11, 01, 10)
                const double la = (G[v10] - G[v00]) / h - q, lb = (G[v01] - G[v00]) / h + p;
                const double ua = (G[v11] - G[v01]) / h - q, ub = (G[v11] - G[v10]) / h + p;
                e += w * (m11 * la * la + 2.0 * m12 * la * lb + m22 * lb * lb);
                e += w * (m11 * ua * ua + 2.0 * m12 * ua * ub + m22 * ub * ub);
                if (!grad) continue;
                const double fla = 2.0 * w * (m11 * la + m12 * lb) / h, flb = 2.0 * w * (m12 * la + m22 * lb) / h;
                const double fua = 2.0 * w * (m11 * ua + m12 * ub) / h, fub = 2.0 * w * (m12 * ua + m22 * ub) / h;
                auto& g = *grad;
                g[v10] += fla;
                g[v00] -= fla;
                g[v01] += flb;
                g[v00] -= flb;
                g[v11] += fua;
                g[v01] -= fua;
                g[v11] += fub;
                g[v10] -= fub;
            }
        return e;
    };

    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-0.5, 0.5);
    std::vector<double> G(N);
    for (double& v : G) v = dist(rng);

    // Conjugate gradients with exact line search on the quadratic energy.
    std::vector<double> gr, dir, gd;
    energy_and_grad(G, &gr);
    dir.resize(N);
    for (std::size_t k = 0; k < N; ++k) dir[k] = -gr[k];
    double rr = 0.0;
    for (double v : gr) rr += v * v;
    const std::vector<double> zero(N, 0.0);
    for (int it = 0; it < 20 * n && rr > 1e-28; ++it) {
        // Curvature along dir: E(G + t d) = E(G) + t <grad, d> + t^2 c.
        std::vector<double> Gt(N);
        for (std::size_t k = 0; k < N; ++k) Gt[k] = G[k] + dir[k];
        const double e0 = energy_and_grad(G, nullptr), e1 = energy_and_grad(Gt, nullptr);
        double slope = 0.0;
        for (std::size_t k = 0; k < N; ++k) slope += gr[k] * dir[k];
        const double c = e1 - e0 - slope;
        if (!(c > 0.0)) break;
        const double t = -slope / (2.0 * c);
        for (std::size_t k = 0; k < N; ++k) G[k] += t * dir[k];
        energy_and_grad(G, &gd);
        double rr_new = 0.0;
        for (double v : gd) rr_new += v * v;
        const double beta = rr_new / rr;
        for (std::size_t k = 0; k < N; ++k) dir[k] = -gd[k] + beta * dir[k];
        gr.swap(gd);
        rr = rr_new;
    }
    return energy_and_grad(G, nullptr);
}

}  // namespace oracle
