#pragma once

#include "epsteinlab/grid.hpp"

namespace epsteinlab {

enum class Axis { X = 0, Y = 1 };

namespace detail {

// Offset neighbour along an axis, or npos when it falls off a non-periodic
// edge or lands on an excluded node.
inline std::size_t neighbour(const GridChart& c, int i, int j, Axis a, int off) {
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    if (a == Axis::X) {
        i += off;
        if (c.periodic_x()) i = ((i % c.nx()) + c.nx()) % c.nx();
        else if (i < 0 || i >= c.nx()) return npos;
    } else {
        j += off;
        if (c.periodic_y()) j = ((j % c.ny()) + c.ny()) % c.ny();
        else if (j < 0 || j >= c.ny()) return npos;
    }
    const std::size_t k = c.index(i, j);
    return c.active(k) ? k : npos;
}

template <class T>
T first_at(const Field<T>& f, std::size_t k, Axis a) {
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    const auto& c = f.chart();
    const int i = c.col(k), j = c.row(k);
    const double h = a == Axis::X ? c.dx() : c.dy();
    const std::size_t p1 = neighbour(c, i, j, a, 1), m1 = neighbour(c, i, j, a, -1);
    if (p1 != npos && m1 != npos) return (0.5 / h) * (f[p1] - f[m1]);
    const std::size_t p2 = neighbour(c, i, j, a, 2), m2 = neighbour(c, i, j, a, -2);
    if (p1 != npos && p2 != npos) return (0.5 / h) * (4.0 * f[p1] - 3.0 * f[k] - f[p2]);
    if (m1 != npos && m2 != npos) return (0.5 / h) * (3.0 * f[k] - 4.0 * f[m1] + f[m2]);
    throw MaskTooSparse(i, j);
}

template <class T>
T second_at(const Field<T>& f, std::size_t k, Axis a) {
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    const auto& c = f.chart();
    const int i = c.col(k), j = c.row(k);
    const double h = a == Axis::X ? c.dx() : c.dy();
    const double ih2 = 1.0 / (h * h);
    const std::size_t p1 = neighbour(c, i, j, a, 1), m1 = neighbour(c, i, j, a, -1);
    if (p1 != npos && m1 != npos) return ih2 * (f[p1] + f[m1] - 2.0 * f[k]);
    const std::size_t p2 = neighbour(c, i, j, a, 2), p3 = neighbour(c, i, j, a, 3);
    if (p1 != npos && p2 != npos && p3 != npos) return ih2 * (2.0 * f[k] - 5.0 * f[p1] + 4.0 * f[p2] - f[p3]);
    const std::size_t m2 = neighbour(c, i, j, a, -2), m3 = neighbour(c, i, j, a, -3);
    if (m1 != npos && m2 != npos && m3 != npos) return ih2 * (2.0 * f[k] - 5.0 * f[m1] + 4.0 * f[m2] - f[m3]);
    throw MaskTooSparse(i, j);
}

}  // namespace detail

/// First partial derivative along one axis: centred second order, one-sided
/// second order at Dirichlet edges and holes, wrapped across periodic edges.
template <class T>
Field<T> fd_partial(const Field<T>& f, Axis a) {
    return Field<T>::generate(f.chart_ptr(), [&](std::size_t k) { return detail::first_at(f, k, a); });
}

template <class T>
Field<T> fd_second_partial(const Field<T>& f, Axis a) {
    return Field<T>::generate(f.chart_ptr(), [&](std::size_t k) { return detail::second_at(f, k, a); });
}

/// Mixed derivative as the composition of the two first-derivative stencils.
template <class T>
Field<T> fd_mixed_partial(const Field<T>& f) {
    return fd_partial(fd_partial(f, Axis::Y), Axis::X);
}

CovectorField fd_gradient(const ScalarField& f);
SymTensor2Field fd_hessian_flat(const ScalarField& f);
ScalarField laplacian(const ScalarField& f);

/// Wirtinger derivative d/dzbar = (d/dx + i d/dy) / 2 of a complex field.
ComplexField dbar(const ComplexField& g);

}  // namespace epsteinlab
