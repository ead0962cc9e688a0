#include <cmath>

#include "doctest.h"
#include "epsteinlab/families.hpp"
#include "epsteinlab/schwarzian.hpp"
#include "oracles.hpp"

using namespace epsteinlab;

TEST_SUITE("schwarzian") {

TEST_CASE("closed-form Schwarzians agree with symbolic oracles") {
    const auto c = GridChart::square(0.3, 0.8, 11);  // avoids 0 and 1
    auto check = [&](const HolomorphicMap& f, cplx (*ref)(cplx)) {
        const auto s = schwarzian_derivative(f, c);
        for (std::size_t k = 0; k < c->size(); ++k) {
            const cplx want = ref(c->z(k));
            CHECK(std::abs(s.g[k] - want) < 1e-12 * (1.0 + std::abs(want)));
        }
    };
    check(exp_map(), oracle::schwarzian_exp);
    check(square_map(), oracle::schwarzian_square);
    check(log_map(), oracle::schwarzian_log);
    check(koebe_map(), oracle::schwarzian_koebe);
    check(compose(exp_map(), exp_map()), oracle::schwarzian_exp_exp);
}

TEST_CASE("Mobius kernel") {
    const auto c = GridChart::square(-0.5, 0.5, 21);
    CHECK(sup_norm(schwarzian_derivative(mobius(2, 1, 1, 1), c).g) < 1e-12);
    Families fam(kDefaultSeed);
    for (int n = 0; n < 20; ++n) CHECK(sup_norm(schwarzian_derivative(fam.mobius_map(), c).g) < 1e-10);
}

TEST_CASE("critical points are reported") {
    const auto c = GridChart::square(-0.5, 0.5, 11);  // contains z = 0
    CHECK_THROWS_AS(schwarzian_derivative(square_map(), c), CriticalPoint);
}

TEST_CASE("cocycle identity for maps") {
    const auto c = GridChart::square(-0.4, 0.4, 17);
    Families fam(4);
    const auto m = fam.mobius_map();
    CHECK(cocycle_residual(square_map(), m, GridChart::square(0.2, 0.6, 9)) < 1e-10);
    CHECK(cocycle_residual(m, exp_map(), c) < 1e-10);
    CHECK(cocycle_residual(exp_map(), exp_map(), c) < 1e-10);
}

TEST_CASE("sampled maps converge at second order in the cocycle") {
    auto res = [](double h) {
        const auto f = HolomorphicMap::sampled("q", [](cplx z) { return z + 0.3 * z * z; }, h, StencilOrder::Second);
        const auto g = HolomorphicMap::sampled("e", [](cplx z) { return std::exp(z); }, h, StencilOrder::Second);
        const int n = static_cast<int>(std::lround(0.5 / h)) + 1;
        return cocycle_residual(f, g, GridChart::square(-0.25, 0.25, n));
    };
    const double r1 = res(1e-2), r2 = res(5e-3);
    CHECK(r2 < 10.0 * 5e-3 * 5e-3);
    CHECK(std::log2(r1 / r2) == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("Schwarzian tensor examples") {
    const auto c = GridChart::square(-0.85, 0.85, 171);
    const auto flat = ConformalMetric::flat(ScalarField(c, 0.0));
    CHECK(sup_norm(schwarzian_tensor(flat, ScalarField(c, 0.7))) < 1e-10);
    const auto uh = ScalarField::sample(c, [](cplx z) { return std::log(2.0 / (1.0 - std::norm(z))); });
    const auto us = ScalarField::sample(c, [](cplx z) { return std::log(2.0 / (1.0 + std::norm(z))); });
    const double tol = 10.0 * 1e-2 * 1e-2;
    CHECK(sup_norm(schwarzian_tensor(flat, uh), Region::disk(0.8)) < tol);
    CHECK(sup_norm(schwarzian_tensor(flat, us), Region::disk(0.8)) < tol);
}

TEST_CASE("Bbar examples and its trace-free part") {
    const auto c = GridChart::square(-0.5, 0.5, 21);
    const auto flat = ConformalMetric::flat(ScalarField(c, 0.0));
    CHECK(sup_norm(bbar_tensor(flat, ScalarField(c, -0.4))) < 1e-10);
    const auto b = bbar_tensor(flat, ScalarField::sample(c, [](cplx z) { return z.real(); }));
    for (std::size_t k = 0; k < c->size(); ++k) {
        if (c->edge_distance(c->col(k), c->row(k)) < 1) continue;
        // the second difference of e^{-x} is off by a factor 1 + dx^2/12
        CHECK(b[k].xx == doctest::Approx(-0.5).epsilon(1e-3));
        CHECK(std::abs(b[k].xy) < 1e-12);
        CHECK(b[k].yy == doctest::Approx(0.5).epsilon(1e-12));
    }
    Families fam(8);
    const auto h = ConformalMetric::flat(fam.smooth_field(c, 0.3));
    const auto u = fam.smooth_field(c, 0.3);
    const auto full = bbar_tensor(h, u);
    const auto tf = schwarzian_tensor(h, u);
    CHECK(sup_norm(traceless_part(full, h.tensor()) - tf) < 1e-12);
    CHECK(sup_norm(metric_trace(tf, h.tensor())) < 1e-12);
}

TEST_CASE("tensor against derivative") {
    const auto c = GridChart::square(-0.5, 0.5, 101);
    Families fam(2);
    const double tol = 10.0 * c->dx() * c->dx();
    CHECK(schwarzian_vs_derivative_residual(fam.mobius_map(), c) < tol);
    // u = Re z for exp: both sides are -1/2 (dx^2 - dy^2) up to dx^2/24.
    CHECK(schwarzian_vs_derivative_residual(exp_map(), c) < c->dx() * c->dx() / 20.0);
    const auto k = GridChart::square(-0.55, 0.55, 221);
    CHECK(schwarzian_vs_derivative_residual(koebe_map(), k, Region::disk(0.5, 1)) < 1e-3);
}

TEST_CASE("tensor cocycle") {
    const auto c = GridChart::square(-0.5, 0.5, 41);
    Families fam(12);
    const auto g = ConformalMetric::flat(fam.smooth_field(c, 0.2));
    const auto u = fam.smooth_field(c, 0.2);
    CHECK(cocycle_tensor_residual(g, u, ScalarField(c, 0.0)) < 1e-12);
    CHECK(cocycle_tensor_residual(g, ScalarField(c, 0.3), ScalarField(c, -1.1)) < 1e-10);
    auto res = [](int n) {
        const auto t = GridChart::torus(0.0, 0.0, 2.0 * M_PI, 2.0 * M_PI, n, n);
        return cocycle_tensor_residual(ConformalMetric::flat(ScalarField(t, 0.0)),
                                       ScalarField::sample(t, [](cplx z) { return std::sin(z.real()); }),
                                       ScalarField::sample(t, [](cplx z) { return std::cos(z.imag()); }));
    };
    const double r1 = res(64), r2 = res(128);
    CHECK(r2 < 10.0 * std::pow(2.0 * M_PI / 128, 2));
    CHECK(std::log2(r1 / r2) == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("naturality under real affine chart maps") {
    // phi(z) = a z + b with a > 0 maps grids to grids, and stencils at
    // spacing dx on u o phi equal a times stencils at spacing a dx on u.
    const double a = 2.0;
    const cplx b(0.3, -0.1);
    const int n = 41;
    const auto c1 = GridChart::square(-0.2, 0.2, n);
    const auto c2 = std::make_shared<const GridChart>(n, n, a * -0.2 + b.real(), a * -0.2 + b.imag(), a * c1->dx(),
                                                      a * c1->dy());
    auto s = [](cplx z) { return 0.2 * std::sin(z.real() + 2.0 * z.imag()); };
    auto v = [](cplx z) { return 0.3 * std::cos(z.real() * z.imag()) + 0.1 * z.real(); };
    const auto image = schwarzian_tensor(ConformalMetric::flat(ScalarField::sample(c2, s)), ScalarField::sample(c2, v));
    const auto pulled = schwarzian_tensor(
        ConformalMetric::flat(ScalarField::sample(c1, [&](cplx z) { return s(a * z + b) + std::log(a); })),
        ScalarField::sample(c1, [&](cplx z) { return v(a * z + b); }));
    double worst = 0.0;
    for (std::size_t k = 0; k < c1->size(); ++k)
        worst = std::max(worst, (pulled[k] - a * a * image[k]).norm());
    CHECK(worst < 1e-9);
}

TEST_CASE("Nehari ratio") {
    const auto d = GridChart::square(-1.0, 1.0, 201);
    Families fam(6);
    CHECK(nehari_ratio(fam.mobius_map(3.0), d).ratio < 1e-10);
    const auto k = nehari_ratio(koebe_map(), GridChart::square(-0.95, 0.95, 191), 0.9);
    CHECK(k.ratio == doctest::Approx(1.5).epsilon(1e-12));
    // the ratio is 3/2 all along the real axis
    CHECK(std::abs(k.argmax.imag()) < 1e-12);
    CHECK(k.pass);
    const auto e = nehari_ratio(exp_map(), d);
    CHECK(e.ratio <= 0.125 + 1e-15);
    CHECK(e.ratio == doctest::Approx(0.125));
}

TEST_CASE("map registry") {
    for (const auto& name : builtin_map_names())
        if (name.find(':') == std::string::npos) CHECK_NOTHROW(map_from_name(name));
    const auto m = map_from_name("mobius:1,2,3,4");
    CHECK(std::abs(m(0.5) - cplx(2.5) / cplx(5.5)) < 1e-15);
    CHECK(std::abs(map_from_name("strip-uniformizer")(cplx(0.0, M_PI / 2))) < 1e-12);
    CHECK_THROWS_AS(map_from_name("mobius:1,2"), ConfigInvalid);
    CHECK_THROWS_AS(map_from_name("nonsense"), ConfigInvalid);
}

TEST_CASE("holomorphy residual of a Schwarzian field") {
    const auto c = GridChart::square(-0.3, 0.3, 61);
    CHECK(schwarzian_derivative(koebe_map(), c).holomorphy_residual() < 1e-2);
    const QuadDiffField not_holo{ComplexField::sample(c, [](cplx z) { return std::conj(z); })};
    CHECK(not_holo.holomorphy_residual() == doctest::Approx(1.0));
}

}
