#pragma once

#include <array>
#include <functional>
#include <vector>

#include "epsteinlab/errors.hpp"

namespace epsteinlab {

/// Periodic cube [0, L)^d with n nodes per axis; only d = 3 is supported.
struct Grid3 {
    int n = 0;
    double length = 1.0;

    double h() const { return length / n; }
    std::size_t size() const { return static_cast<std::size_t>(n) * n * n; }
    std::size_t index(int i, int j, int k) const {
        auto w = [this](int a) { return static_cast<std::size_t>(((a % n) + n) % n); };
        return (w(k) * n + w(j)) * n + w(i);
    }
    std::array<double, 3> point(std::size_t idx) const;
};

/// Symmetric 3x3 tensor stored as (11, 12, 13, 22, 23, 33).
using Sym3 = std::array<double, 6>;
inline constexpr int sym3_slot(int a, int b) {
    constexpr int t[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
    return t[a][b];
}

struct Scalar3 {
    Grid3 grid;
    std::vector<double> v;

    static Scalar3 sample(const Grid3& g, const std::function<double(double, double, double)>& fn);
};

struct Sym3Field {
    Grid3 grid;
    std::vector<Sym3> v;
};

/// Centred first and second derivatives on the periodic cube.
std::vector<std::array<double, 3>> gradient3(const Scalar3& f);
Sym3Field hessian3(const Scalar3& f);

/// Schouten tensor of e^{2u} times the flat metric in dimension d:
/// -Hess u + du (x) du - |du|^2/2 delta.
Sym3Field schouten_conformal(int d, const Scalar3& u);
/// Second coefficient h2 = -Schouten of the boundary metric.
Sym3Field h2_conformal(int d, const Scalar3& u);

/// sup of |h2(e^{2u} delta) - h2(delta) - (Hess u - du(x)du + |du|^2/2 delta)|
/// with the right-hand side discretized through -e^{u} Hess(e^{-u}).
double schouten_identity_residual(int d, const Scalar3& u);

double sup_norm(const Sym3Field& f);
Sym3Field difference(const Sym3Field& a, const Sym3Field& b);

}  // namespace epsteinlab
