#include <cmath>

#include "doctest.h"
#include "epsteinlab/families.hpp"
#include "epsteinlab/horocone.hpp"

using namespace epsteinlab;

TEST_SUITE("horocone") {

TEST_CASE("first form of a section") {
    const auto c = GridChart::square(-0.5, 0.5, 21);
    // l(z) is quadratic in z, so centred differences are exact
    const MinkField l = MinkField::sample(c, standard_null_section);
    CHECK(sup_norm(cone_first_form(l) - SymTensor2Field(c, Sym2::identity())) < 1e-12);
    const MinkField s = MinkField::sample(c, [](cplx z) { return 3.0 * standard_null_section(z); });
    CHECK(sup_norm(cone_first_form(s) - SymTensor2Field(c, 9.0 * Sym2::identity())) < 1e-12);
    Families fam(2);
    const auto f = GridChart::square(-0.5, 0.5, 101);
    const auto h = ConformalMetric::flat(fam.smooth_field(f, 0.2));
    const auto sec = LightConeSection::from_metric(h);
    CHECK(sup_norm(cone_first_form(sec.sigma) - h.tensor()) < 10.0 * f->dx() * f->dx());
}

TEST_CASE("second form examples") {
    const auto c = GridChart::square(-0.5, 0.5, 101);
    const double tol = 10.0 * c->dx() * c->dx();
    // section of the round metric: the sphere's data II*_c = 0
    CHECK(sup_norm(cone_second_form({BaseKind::Spherical, ScalarField(c, 0.0)}), Region::inner(1)) < tol);
    // e^{2a}|dz|^2: II*_c = e^{2a}|dz|^2 / 2
    for (double a : {0.0, 0.3}) {
        const auto ii = cone_second_form(ConformalMetric::flat(ScalarField(c, a)));
        CHECK(sup_norm(ii - SymTensor2Field(c, 0.5 * std::exp(2.0 * a) * Sym2::identity()), Region::inner(1)) < tol);
    }
}

TEST_CASE("first variation of the second form") {
    const auto c = GridChart::square(-0.5, 0.5, 5);
    CHECK(sup_norm(cone_variation(ScalarField(c, 1.0), ScalarField(c, 0.0)) - SymTensor2Field(c, Sym2::identity())) ==
          0.0);
    CHECK(sup_norm(cone_variation(ScalarField(c, 0.5), ScalarField(c, 0.2)) -
                   SymTensor2Field(c, 0.5 * std::exp(0.4) * Sym2::identity())) < 1e-15);
    // v = x on the flat metric: Hess v = 0
    const auto lin = cone_variation(ScalarField::sample(c, [](cplx z) { return z.real(); }), ScalarField(c, 0.0));
    for (std::size_t k = 0; k < c->size(); ++k) CHECK((lin[k] - c->z(k).real() * Sym2::identity()).norm() < 1e-14);

    // against a central difference of cone_second_form in the section scale
    // The two discretizations agree to second order in the grid spacing.
    double prev = 0.0;
    for (int n : {51, 101, 201}) {
        const auto g = GridChart::square(-0.5, 0.5, n);
        Families fam(17);
        const ScalarField big_u = fam.smooth_field(g, 0.2, 0.3);
        const ScalarField v = fam.smooth_field(g, 1.0);
        const double eps = 1e-4;
        const auto plus = cone_second_form(ConformalMetric::flat(big_u + eps * v));
        const auto minus = cone_second_form(ConformalMetric::flat(big_u - (eps * v)));
        const auto fd = (1.0 / (2.0 * eps)) * (plus - minus);
        const double r = sup_norm(fd - cone_variation(v, big_u), Region::inner(2));
        if (prev > 0.0) CHECK(std::log2(prev / r) == doctest::Approx(2.0).epsilon(0.15));
        prev = r;
    }
}

TEST_CASE("duality between Epstein and cone data") {
    Families fam(kDefaultSeed);
    struct Case {
        double lo, hi;
        std::function<ScalarField(const ChartPtr&)> u;
    };
    const std::vector<Case> cases = {
        {-0.4, 0.4,
         [](const ChartPtr& c) {
             return ScalarField::sample(c, [](cplx z) { return std::log(std::sqrt(2.0) / (1.0 - std::norm(z))); });
         }},
        {-0.5, 0.5, [](const ChartPtr& c) { return ScalarField(c, -0.2); }},
        {-0.5, 0.5, [&](const ChartPtr& c) { return fam.smooth_field(c, 0.15, 0.5); }},
    };
    for (const auto& cs : cases) {
        std::vector<double> second;
        for (int n : {81, 161}) {
            const auto c = GridChart::square(cs.lo, cs.hi, n);
            const double tol = 10.0 * c->dx() * c->dx();
            const auto s = epstein_surface(ConformalMetric::flat(cs.u(c)), {1, true});
            const auto inf = data_at_infinity(fundamental_forms(s));
            const auto cone = cone_data_from_surface(s);
            const auto d = duality_check(inf, cone, Region::inner(2));
            CHECK(d.first < tol);
            CHECK(d.second < tol);
            CHECK(cone_gauss_residual(cone, Region::inner(3)) < tol);
            second.push_back(d.second);
        }
        if (second[1] > 1e-9) CHECK(std::log2(second[0] / second[1]) == doctest::Approx(2.0).epsilon(0.15));
    }
}

TEST_CASE("section data needs the factor two of the dual surface") {
    // The section e^U l has I*_c = h, half of the dual surface's first form.
    const auto c = GridChart::square(-0.5, 0.5, 41);
    const auto h = ConformalMetric::flat(ScalarField(c, 0.1));
    const auto cone = cone_data_from_metric(h);
    CHECK(sup_norm(cone.Istar_c - h.tensor()) < 1e-12);
    const auto s = epstein_surface(h, {1, true});
    const auto dual = cone_data_from_surface(s);
    CHECK(sup_norm(dual.Istar_c - 2.0 * h.tensor()) < 1e-12);
}

TEST_CASE("conformal change of II*") {
    const auto c = GridChart::square(-0.5, 0.5, 101);
    Families fam(kDefaultSeed);
    const auto h = ConformalMetric::flat(fam.smooth_field(c, 0.15, 0.5));
    const ScalarField u = fam.smooth_field(c, 0.1);
    const double tol = 10.0 * c->dx() * c->dx();
    CHECK(epstein_conformal_change_residual(h, u, Region::inner(2)) < tol);
    CHECK(cone_conformal_change_residual(h, u, Region::inner(2)) < tol);
    CHECK(epstein_conformal_change_residual(h, ScalarField(c, 0.25)) < 1e-8);
}

TEST_CASE("Schwarzian at infinity of uniformized domains") {
    const auto disk = schwarzian_at_infinity_check(uniformized_domain("disk", 1e-2));
    CHECK(disk.reference == 0.0);
    const auto disk_fine = schwarzian_at_infinity_check(uniformized_domain("disk", 5e-3));
    CHECK(disk.residual < 1e-2);
    CHECK(std::log2(disk.residual / disk_fine.residual) == doctest::Approx(2.0).epsilon(0.15));
    const auto strip = schwarzian_at_infinity_check(uniformized_domain("strip", 1e-2));
    CHECK(strip.reference > 0.3);
    CHECK(strip.relative < 1e-2);
    const auto hp = schwarzian_at_infinity_check(uniformized_domain("half-plane", 1e-2));
    CHECK(hp.residual < 1e-3);
    CHECK_THROWS_AS(uniformized_domain("annulus", 1e-2), ConfigInvalid);
}

}
