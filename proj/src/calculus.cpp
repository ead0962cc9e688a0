#include "epsteinlab/calculus.hpp"

namespace epsteinlab {

CovectorField fd_gradient(const ScalarField& f) {
    const ScalarField fx = fd_partial(f, Axis::X);
    const ScalarField fy = fd_partial(f, Axis::Y);
    return zip(fx, fy, [](double a, double b) { return Vec2{a, b}; });
}

SymTensor2Field fd_hessian_flat(const ScalarField& f) {
    const ScalarField fxx = fd_second_partial(f, Axis::X);
    const ScalarField fyy = fd_second_partial(f, Axis::Y);
    const ScalarField fxy = fd_mixed_partial(f);
    return SymTensor2Field::generate(f.chart_ptr(), [&](std::size_t k) { return Sym2{fxx[k], fxy[k], fyy[k]}; });
}

ScalarField laplacian(const ScalarField& f) {
    return fd_second_partial(f, Axis::X) + fd_second_partial(f, Axis::Y);
}

ComplexField dbar(const ComplexField& g) {
    const ComplexField gx = fd_partial(g, Axis::X);
    const ComplexField gy = fd_partial(g, Axis::Y);
    return zip(gx, gy, [](cplx a, cplx b) { return 0.5 * (a + cplx(0.0, 1.0) * b); });
}

}  // namespace epsteinlab
