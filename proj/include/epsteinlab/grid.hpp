#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "epsteinlab/errors.hpp"
#include "epsteinlab/tensor2.hpp"

namespace epsteinlab {

using cplx = std::complex<double>;

enum class NodeKind : std::uint8_t { Interior, Boundary, Excluded };

/// Rectangular grid over a planar domain, z = (x0 + i dx) + I (y0 + j dy).
/// Each axis is either periodic (flat torus identification) or carries a
/// Dirichlet margin where one-sided stencils are used.
class GridChart {
public:
    GridChart(int nx, int ny, double x0, double y0, double dx, double dy,
              bool periodic_x = false, bool periodic_y = false);

    /// Square chart [lo, hi]^2 with n nodes per side (endpoints included).
    static std::shared_ptr<const GridChart> square(double lo, double hi, int n);
    /// Periodic chart on [x0, x0 + lx) x [y0, y0 + ly).
    static std::shared_ptr<const GridChart> torus(double x0, double y0, double lx, double ly, int nx, int ny);

    int nx() const { return nx_; }
    int ny() const { return ny_; }
    double x0() const { return x0_; }
    double y0() const { return y0_; }
    double dx() const { return dx_; }
    double dy() const { return dy_; }
    bool periodic_x() const { return px_; }
    bool periodic_y() const { return py_; }
    std::size_t size() const { return static_cast<std::size_t>(nx_) * ny_; }
    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx_ + i; }
    int col(std::size_t k) const { return static_cast<int>(k % nx_); }
    int row(std::size_t k) const { return static_cast<int>(k / nx_); }

    cplx z(int i, int j) const { return {x0_ + i * dx_, y0_ + j * dy_}; }
    cplx z(std::size_t k) const { return z(col(k), row(k)); }

    NodeKind kind(std::size_t k) const { return mask_[k]; }
    bool active(std::size_t k) const { return mask_[k] != NodeKind::Excluded; }
    std::size_t active_count() const;

    /// Copy with nodes matching pred excluded; their former neighbours become
    /// Boundary nodes.
    GridChart excluding(const std::function<bool(cplx)>& pred) const;
    /// Same nodes and mask without periodic identifications.
    GridChart unwrapped() const;

    /// Distance (in nodes) to the nearest non-periodic chart edge.
    int edge_distance(int i, int j) const;

    bool same_as(const GridChart& o) const;

private:
    void reclassify();

    int nx_, ny_;
    double x0_, y0_, dx_, dy_;
    bool px_, py_;
    std::vector<NodeKind> mask_;
};

using ChartPtr = std::shared_ptr<const GridChart>;

template <class T>
inline T nan_value();
template <>
inline double nan_value<double>() { return std::numeric_limits<double>::quiet_NaN(); }
template <>
inline cplx nan_value<cplx>() { return {nan_value<double>(), nan_value<double>()}; }
template <>
inline Vec2 nan_value<Vec2>() { return Vec2::nan(); }
template <>
inline Sym2 nan_value<Sym2>() { return Sym2::nan(); }
template <>
inline Mat2 nan_value<Mat2>() { return Mat2::nan(); }

/// Per-node values tied to a chart. Excluded nodes hold NaN.
template <class T>
class Field {
public:
    Field() = default;
    explicit Field(ChartPtr chart) : chart_(std::move(chart)), v_(chart_->size(), nan_value<T>()) {}
    Field(ChartPtr chart, const T& fill) : chart_(std::move(chart)), v_(chart_->size(), fill) {
        for (std::size_t k = 0; k < v_.size(); ++k)
            if (!chart_->active(k)) v_[k] = nan_value<T>();
    }

    /// Sample fn(z) at every active node.
    template <class F>
    static Field sample(ChartPtr chart, F&& fn) {
        Field out(chart);
        for (std::size_t k = 0; k < chart->size(); ++k)
            if (chart->active(k)) out.v_[k] = fn(chart->z(k));
        return out;
    }

    /// out[k] = fn(k) at active nodes.
    template <class F>
    static Field generate(ChartPtr chart, F&& fn) {
        Field out(chart);
        for (std::size_t k = 0; k < chart->size(); ++k)
            if (chart->active(k)) out.v_[k] = fn(k);
        return out;
    }

    const GridChart& chart() const { return *chart_; }
    const ChartPtr& chart_ptr() const { return chart_; }
    std::size_t size() const { return v_.size(); }
    T& operator[](std::size_t k) { return v_[k]; }
    const T& operator[](std::size_t k) const { return v_[k]; }
    T& at(int i, int j) { return v_[chart_->index(i, j)]; }
    const T& at(int i, int j) const { return v_[chart_->index(i, j)]; }
    std::vector<T>& values() { return v_; }
    const std::vector<T>& values() const { return v_; }

    template <class F>
    auto map(F&& fn) const {
        using R = std::decay_t<decltype(fn(v_[0]))>;
        Field<R> out(chart_);
        for (std::size_t k = 0; k < v_.size(); ++k)
            if (chart_->active(k)) out[k] = fn(v_[k]);
        return out;
    }

private:
    ChartPtr chart_;
    std::vector<T> v_;
};

using ScalarField = Field<double>;
using ComplexField = Field<cplx>;
using CovectorField = Field<Vec2>;
using SymTensor2Field = Field<Sym2>;
using OperatorField = Field<Mat2>;

template <class A, class B>
void require_same_chart(const Field<A>& a, const Field<B>& b) {
    if (a.chart_ptr() != b.chart_ptr() && !a.chart().same_as(b.chart())) throw ChartMismatch();
}

template <class A, class B, class F>
auto zip(const Field<A>& a, const Field<B>& b, F&& fn) {
    require_same_chart(a, b);
    using R = std::decay_t<decltype(fn(a[0], b[0]))>;
    Field<R> out(a.chart_ptr());
    for (std::size_t k = 0; k < a.size(); ++k)
        if (a.chart().active(k)) out[k] = fn(a[k], b[k]);
    return out;
}

template <class T>
Field<T> operator+(const Field<T>& a, const Field<T>& b) {
    return zip(a, b, [](const T& p, const T& q) { return p + q; });
}
template <class T>
Field<T> operator-(const Field<T>& a, const Field<T>& b) {
    return zip(a, b, [](const T& p, const T& q) { return p - q; });
}
template <class T>
Field<T> operator*(double s, const Field<T>& a) {
    return a.map([s](const T& p) { return s * p; });
}

/// Same values on another chart with identical node geometry (mask and
/// periodicity may differ). Nodes inactive in the target become NaN.
template <class T>
Field<T> rebase(const Field<T>& f, const ChartPtr& target) {
    const auto& a = f.chart();
    const auto& b = *target;
    if (a.nx() != b.nx() || a.ny() != b.ny() || a.x0() != b.x0() || a.y0() != b.y0() || a.dx() != b.dx() ||
        a.dy() != b.dy())
        throw ChartMismatch();
    return Field<T>::generate(target, [&](std::size_t k) { return f[k]; });
}

/// Selects the nodes a sup-norm looks at: active nodes at least `margin`
/// nodes from any non-periodic edge and satisfying `pred` if given.
struct Region {
    int margin = 0;
    std::function<bool(cplx)> pred;

    bool contains(const GridChart& c, std::size_t k) const;
    static Region all() { return {}; }
    static Region inner(int m) { return {m, {}}; }
    static Region disk(double radius, int m = 0) {
        return {m, [radius](cplx z) { return std::abs(z) <= radius; }};
    }
};

double node_norm(double v);
double node_norm(const cplx& v);
double node_norm(const Vec2& v);
double node_norm(const Sym2& v);
double node_norm(const Mat2& v);

/// Sup of the pointwise norm over a region; +inf if any selected value is NaN.
template <class T>
double sup_norm(const Field<T>& f, const Region& r = {}) {
    double best = 0.0;
    const auto& c = f.chart();
    for (std::size_t k = 0; k < f.size(); ++k) {
        if (!r.contains(c, k)) continue;
        const double n = node_norm(f[k]);
        if (std::isnan(n)) return std::numeric_limits<double>::infinity();
        best = std::max(best, n);
    }
    return best;
}

}  // namespace epsteinlab
