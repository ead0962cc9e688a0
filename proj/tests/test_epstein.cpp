#include <cmath>

#include "doctest.h"
#include "epsteinlab/epstein.hpp"
#include "epsteinlab/families.hpp"
#include "oracles.hpp"

using namespace epsteinlab;

namespace {

ScalarField fuchsian_u(const ChartPtr& c, double shift = 0.0) {
    return ScalarField::sample(c, [shift](cplx z) { return std::log(std::sqrt(2.0) / (1.0 - std::norm(z))) + shift; });
}

// margin skips nodes whose Hessian stencil is one-sided.
double point_gap(const EmbeddedSurface& s, MinkVec (*ref)(cplx, double), double arg, int margin = 0) {
    double worst = 0.0;
    const auto& c = s.x.chart();
    for (std::size_t k = 0; k < c.size(); ++k)
        if (c.active(k) && c.edge_distance(c.col(k), c.row(k)) >= margin) worst = std::max(worst, (s.x[k] - ref(c.z(k), arg)).euclidean_norm());
    return worst;
}

MinkVec fuchsian_ref(cplx z, double) { return oracle::fuchsian_point(z); }

}  // namespace

TEST_SUITE("epstein") {

TEST_CASE("constant metric: horosphere, umbilic with B = E") {
    const auto c = GridChart::square(-1.0, 1.0, 21);
    for (double u0 : {-0.7, 0.0, 0.4}) {
        const auto s = epstein_surface(ConformalMetric::flat(ScalarField(c, u0)), {1, true});
        CHECK(s.singular.empty());
        CHECK(s.model_residual() < 1e-12);
        CHECK(point_gap(s, oracle::constant_metric_point, u0) < 1e-12);
        const auto d = fundamental_forms(s);
        CHECK(sup_norm(d.B - OperatorField(d.B.chart_ptr(), Mat2::identity())) < 1e-10);
        CHECK(sup_norm(d.asymmetry) < 1e-10);
        const auto inf = data_at_infinity(d);
        CHECK(sup_norm(inf.Istar - conformal_tensor(ScalarField(d.I.chart_ptr(), u0))) < 1e-10);
        CHECK(sup_norm(inf.IIstar) < 1e-10);
        CHECK(gauss_map_residual(s) < 1e-12);
    }
}

TEST_CASE("Fuchsian metric: the totally geodesic plane") {
    const auto c = GridChart::square(-0.5, 0.5, 101);
    const auto s = epstein_surface(ConformalMetric::flat(fuchsian_u(c)), {1, true});
    const double tol = 10.0 * c->dx() * c->dx();
    CHECK(point_gap(s, fuchsian_ref, 0.0, 1) < tol);
    const auto d = fundamental_forms(s);
    CHECK(sup_norm(d.B, Region::inner(1)) < tol);
    const auto t = htame_check(d, Region::inner(1));
    CHECK(t.tame);
    CHECK(t.min_margin == doctest::Approx(1.0).epsilon(tol));
    const auto inf = data_at_infinity(d);
    CHECK(sup_norm(inf.Istar - conformal_tensor(fuchsian_u(c))) < 1e-12);
    CHECK(sup_norm(inf.Bstar - OperatorField(c, Mat2::identity()), Region::inner(1)) < tol);
}

TEST_CASE("the Fuchsian plane lies in <x, (0,0,0,1)> = 0") {
    const auto c = GridChart::square(-0.5, 0.5, 101);
    const auto s = epstein_surface(ConformalMetric::flat(fuchsian_u(c)), {1, true});
    const MinkVec e3(0, 0, 0, 1);
    double worst = 0.0;
    for (std::size_t k = 0; k < c->size(); ++k) worst = std::max(worst, std::abs(mink_inner(s.x[k], e3)));
    CHECK(worst < 10.0 * c->dx() * c->dx());
}

TEST_CASE("scaled Fuchsian metric: equidistant surface with B = tanh(r) E") {
    const auto c = GridChart::square(-0.5, 0.5, 101);
    for (double r : {-0.5, 0.3, 1.0}) {
        const auto d = fundamental_forms(epstein_surface(ConformalMetric::flat(fuchsian_u(c, r)), {1, true}));
        const OperatorField want(d.B.chart_ptr(), Mat2::scalar(std::tanh(r)));
        CHECK(sup_norm(d.B - want, Region::inner(1)) < 1e-3);
        CHECK(htame_check(d, Region::inner(1)).min_margin == doctest::Approx(1.0 - std::abs(std::tanh(r))).epsilon(1e-3));
    }
}

TEST_CASE("calibration and Gauss map for random metrics") {
    Families fam(kDefaultSeed);
    for (int trial = 0; trial < 3; ++trial) {
        const auto c = GridChart::square(-0.5, 0.5, 81);
        const auto h = ConformalMetric::flat(fam.smooth_field(c, 0.15, 0.5));
        const auto s = epstein_surface(h, {1, true});
        CHECK(s.model_residual() < 1e-10);
        CHECK(gauss_map_residual(s) < 1e-10);
        const auto inf = data_at_infinity(fundamental_forms(s));
        CHECK(sup_norm(inf.Istar - h.tensor()) < 1e-6);
        CHECK(s.tangency_residual(Region::inner(1)) < 1e-3);
    }
}

TEST_CASE("opposite orientation flips the normal and the Gauss map") {
    const auto c = GridChart::square(-0.5, 0.5, 11);
    const auto h = ConformalMetric::flat(ScalarField(c, 0.2));
    const auto up = epstein_surface(h, {1, true});
    const auto down = epstein_surface(h, {-1, true});
    CHECK(down.orientation == -1);
    CHECK(sup_norm(up.normal + down.normal) < 1e-15);
    CHECK(gauss_map_residual(down) > 0.1);
}

TEST_CASE("singular envelopes") {
    // The round metric of the unit sphere: the envelope collapses to a point.
    const auto c = GridChart::square(-0.5, 0.5, 11);
    const ConformalMetric round{BaseKind::Spherical, ScalarField(c, -0.5 * std::log(2.0))};
    CHECK_THROWS_AS(epstein_surface(round, {1, true}), SingularEnvelope);
    // Interior nodes collapse; edge nodes use one-sided Hessians whose O(h)
    // error keeps them above the cusp threshold.
    const auto s = epstein_surface(round, {1, false});
    CHECK(s.singular.size() == 81);
    for (auto k : s.singular) CHECK(c->edge_distance(c->col(k), c->row(k)) >= 1);
}

TEST_CASE("dictionary between B and B*") {
    CHECK(shape_at_infinity(Mat2::identity()) == Mat2{});
    CHECK(shape_at_infinity(Mat2{}) == Mat2::identity());
    CHECK(b_from_bstar(Mat2::identity()) == Mat2{});
    CHECK_THROWS_AS(shape_at_infinity(Mat2::scalar(-1.0)), EigenvalueMinusOne);
    CHECK_THROWS_AS(b_from_bstar(Mat2{-1.0, 0.0, 0.0, 0.5}), SingularDictionary);
    const auto c = GridChart::square(0, 1, 5);
    OperatorField f(c, Mat2::identity());
    f[12] = Mat2::scalar(-1.0);
    try {
        shape_at_infinity(f);
        FAIL("expected EigenvalueMinusOne");
    } catch (const EigenvalueMinusOne& e) {
        CHECK(e.node == 12);
    }
    Families fam(11);
    for (int n = 0; n < 100; ++n) {
        const Mat2 b = fam.operator_with_spectrum(0.95);
        CHECK((b_from_bstar(shape_at_infinity(b)) - b).norm() < 1e-12);
        // eigenvalues map by x -> (1 - x)/(1 + x)
        const Eigen2 eb = real_eigenvalues(b), es = real_eigenvalues(shape_at_infinity(b));
        CHECK(es.hi == doctest::Approx((1.0 - eb.lo) / (1.0 + eb.lo)).epsilon(1e-9));
        CHECK(es.lo == doctest::Approx((1.0 - eb.hi) / (1.0 + eb.hi)).epsilon(1e-9));
    }
}

TEST_CASE("admissibility of the data at infinity") {
    const auto c = GridChart::square(-0.5, 0.5, 101);
    Families fam(kDefaultSeed);
    const auto h = ConformalMetric::flat(fam.smooth_field(c, 0.15, 0.5));
    const auto inf = data_at_infinity(fundamental_forms(epstein_surface(h, {1, true})));
    const auto a = admissibility_residuals(inf, Region::inner(3));
    CHECK(a.gauss < 1e-8);
    CHECK(a.codazzi < 100.0 * c->dx() * c->dx());
    // A traceless non-Codazzi perturbation breaks only the Codazzi equation.
    const SymTensor2Field bump = SymTensor2Field::sample(c, [](cplx z) { return Sym2{z.imag(), 0.0, -z.imag()}; });
    const SymTensor2Field pert = SymTensor2Field::generate(
        c, [&](std::size_t k) { return inf.IIstar[k] + std::exp(2.0 * h.u[k]) * bump[k]; });
    const auto b = admissibility_residuals(infinity_data_from_pair(inf.Istar, pert), Region::inner(3));
    CHECK(b.gauss < 1e-8);
    CHECK(b.codazzi > 0.1);
}

TEST_CASE("equidistant metric") {
    const auto c = GridChart::square(-0.5, 0.5, 5);
    const auto flat = infinity_data_from_pair(SymTensor2Field(c, Sym2::identity()), SymTensor2Field(c, Sym2{}));
    const auto e = equidistant_metric(flat, 0.25);
    CHECK(sup_norm(e - SymTensor2Field(c, 0.5 * std::exp(0.5) * Sym2::identity())) < 1e-15);
    // I* = II* (the plane): 2 cosh^2 r I*
    const auto plane = infinity_data_from_pair(SymTensor2Field(c, Sym2::identity()), SymTensor2Field(c, Sym2::identity()));
    CHECK(sup_norm(equidistant_metric(plane, 0.7) - SymTensor2Field(c, 2.0 * std::pow(std::cosh(0.7), 2) * Sym2::identity())) <
          1e-14);
    // II* = -I*: the leaf through the point degenerates at r = 0
    const auto point = infinity_data_from_pair(SymTensor2Field(c, Sym2::identity()), SymTensor2Field(c, -Sym2::identity()));
    CHECK_THROWS_AS(equidistant_metric(point, 0.0), DegenerateMetric);
}

TEST_CASE("II* does not change when the metric is scaled by a constant") {
    const auto c = GridChart::square(-0.5, 0.5, 81);
    Families fam(3);
    const ScalarField u = fam.smooth_field(c, 0.15, 0.5);
    const auto a = data_at_infinity(fundamental_forms(epstein_surface(ConformalMetric::flat(u), {1, true})));
    const auto b = data_at_infinity(
        fundamental_forms(epstein_surface(ConformalMetric::flat(u.map([](double v) { return v + 0.35; })), {1, true})));
    CHECK(sup_norm(a.IIstar - b.IIstar) < 1e-8);
    CHECK(sup_norm(std::exp(0.7) * a.Istar - b.Istar) < 1e-8);
}

}
