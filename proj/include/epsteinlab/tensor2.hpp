#pragma once

#include <cmath>
#include <limits>

namespace epsteinlab {

/// Covector in the chart frame: components along dx and dy.
struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
    friend Vec2 operator*(Vec2 a, double s) { return s * a; }
    friend bool operator==(Vec2, Vec2) = default;
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm2() const { return x * x + y * y; }
    static Vec2 nan() {
        constexpr double q = std::numeric_limits<double>::quiet_NaN();
        return {q, q};
    }
};

/// Symmetric 2-tensor T11 dx^2 + 2 T12 dx dy + T22 dy^2.
struct Sym2 {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;

    friend Sym2 operator+(Sym2 a, Sym2 b) { return {a.xx + b.xx, a.xy + b.xy, a.yy + b.yy}; }
    friend Sym2 operator-(Sym2 a, Sym2 b) { return {a.xx - b.xx, a.xy - b.xy, a.yy - b.yy}; }
    friend Sym2 operator-(Sym2 a) { return {-a.xx, -a.xy, -a.yy}; }
    friend Sym2 operator*(double s, Sym2 a) { return {s * a.xx, s * a.xy, s * a.yy}; }
    friend Sym2 operator*(Sym2 a, double s) { return s * a; }
    friend bool operator==(Sym2, Sym2) = default;

    double det() const { return xx * yy - xy * xy; }
    double trace() const { return xx + yy; }
    /// Frobenius norm in the chart frame.
    double norm() const { return std::sqrt(xx * xx + 2.0 * xy * xy + yy * yy); }

    static Sym2 identity() { return {1.0, 0.0, 1.0}; }
    static Sym2 outer(Vec2 a) { return {a.x * a.x, a.x * a.y, a.y * a.y}; }
    /// Symmetrized product sym(a (x) b) = (a(x)b + b(x)a) / 2.
    static Sym2 sym_outer(Vec2 a, Vec2 b) { return {a.x * b.x, 0.5 * (a.x * b.y + a.y * b.x), a.y * b.y}; }
    static Sym2 nan() {
        constexpr double q = std::numeric_limits<double>::quiet_NaN();
        return {q, q, q};
    }
};

/// Linear map of the tangent plane, column convention: (a11 a12; a21 a22) * v.
struct Mat2 {
    double a11 = 0.0;
    double a12 = 0.0;
    double a21 = 0.0;
    double a22 = 0.0;

    friend Mat2 operator+(const Mat2& a, const Mat2& b) {
        return {a.a11 + b.a11, a.a12 + b.a12, a.a21 + b.a21, a.a22 + b.a22};
    }
    friend Mat2 operator-(const Mat2& a, const Mat2& b) {
        return {a.a11 - b.a11, a.a12 - b.a12, a.a21 - b.a21, a.a22 - b.a22};
    }
    friend Mat2 operator*(double s, const Mat2& a) { return {s * a.a11, s * a.a12, s * a.a21, s * a.a22}; }
    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        return {a.a11 * b.a11 + a.a12 * b.a21, a.a11 * b.a12 + a.a12 * b.a22,
                a.a21 * b.a11 + a.a22 * b.a21, a.a21 * b.a12 + a.a22 * b.a22};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;

    double det() const { return a11 * a22 - a12 * a21; }
    double trace() const { return a11 + a22; }
    double norm() const { return std::sqrt(a11 * a11 + a12 * a12 + a21 * a21 + a22 * a22); }
    Mat2 transpose() const { return {a11, a21, a12, a22}; }
    Mat2 adjugate() const { return {a22, -a12, -a21, a11}; }
    Mat2 inverse() const { return (1.0 / det()) * adjugate(); }

    static Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    static Mat2 scalar(double s) { return {s, 0.0, 0.0, s}; }
    static Mat2 from(const Sym2& s) { return {s.xx, s.xy, s.xy, s.yy}; }
    static Mat2 nan() {
        constexpr double q = std::numeric_limits<double>::quiet_NaN();
        return {q, q, q, q};
    }
};

/// Symmetric part of a matrix viewed as a bilinear form.
inline Sym2 sym_part(const Mat2& m) { return {m.a11, 0.5 * (m.a12 + m.a21), m.a22}; }

/// g(A., .) as a bilinear form: the matrix g * A (symmetrized).
inline Sym2 lower(const Sym2& g, const Mat2& a) { return sym_part(Mat2::from(g) * a); }

/// Operator A with T = g(A., .), i.e. A = g^{-1} T.
inline Mat2 raise(const Sym2& g, const Sym2& t) { return Mat2::from(g).inverse() * Mat2::from(t); }

/// Real eigenvalues of a matrix that is self-adjoint for some metric; a
/// slightly negative discriminant from round-off is clamped to zero.
struct Eigen2 {
    double lo;
    double hi;
};
inline Eigen2 real_eigenvalues(const Mat2& m) {
    const double half_tr = 0.5 * m.trace();
    const double disc = std::max(0.0, half_tr * half_tr - m.det());
    const double r = std::sqrt(disc);
    return {half_tr - r, half_tr + r};
}

/// Pointwise metric pairing <S, T>_g = tr(g^{-1} S g^{-1} T).
inline double metric_pairing(const Sym2& s, const Sym2& t, const Sym2& g) {
    const Mat2 gi = Mat2::from(g).inverse();
    return (gi * Mat2::from(s) * gi * Mat2::from(t)).trace();
}

}  // namespace epsteinlab
