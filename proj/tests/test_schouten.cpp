#include <cmath>

#include "doctest.h"
#include "epsteinlab/schouten.hpp"
#include "oracles.hpp"

using namespace epsteinlab;

namespace {

constexpr double kTwoPi = 2.0 * M_PI;
constexpr double kA = 0.1;

double test_u(double x, double y, double z) {
    return kA * std::sin(kTwoPi * x) * std::cos(kTwoPi * y) + 0.6 * kA * std::sin(kTwoPi * z);
}

// -Hess u + du (x) du - |du|^2/2 delta for test_u, differentiated by hand.
Sym3Field closed_form(const Grid3& g) {
    Sym3Field out{g, std::vector<Sym3>(g.size())};
    const double w = kTwoPi, w2 = w * w;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const auto p = g.point(k);
        const double sx = std::sin(w * p[0]), cx = std::cos(w * p[0]);
        const double sy = std::sin(w * p[1]), cy = std::cos(w * p[1]);
        const double sz = std::sin(w * p[2]), cz = std::cos(w * p[2]);
        const double du[3] = {kA * w * cx * cy, -kA * w * sx * sy, 0.6 * kA * w * cz};
        double hess[3][3] = {{-kA * w2 * sx * cy, -kA * w2 * cx * sy, 0.0},
                             {-kA * w2 * cx * sy, -kA * w2 * sx * cy, 0.0},
                             {0.0, 0.0, -0.6 * kA * w2 * sz}};
        const double n2 = du[0] * du[0] + du[1] * du[1] + du[2] * du[2];
        for (int a = 0; a < 3; ++a)
            for (int b = a; b < 3; ++b)
                out.v[k][sym3_slot(a, b)] = -hess[a][b] + du[a] * du[b] - (a == b ? 0.5 * n2 : 0.0);
    }
    return out;
}

}  // namespace

TEST_SUITE("schouten") {

TEST_CASE("flat metric has vanishing Schouten tensor") {
    const Grid3 g{8, 1.0};
    CHECK(sup_norm(schouten_conformal(3, Scalar3::sample(g, [](double, double, double) { return 0.0; }))) == 0.0);
    CHECK(sup_norm(schouten_conformal(3, Scalar3::sample(g, [](double, double, double) { return 0.8; }))) == 0.0);
}

TEST_CASE("h2 is minus the Schouten tensor") {
    const Grid3 g{16, 1.0};
    const auto u = Scalar3::sample(g, test_u);
    const auto s = schouten_conformal(3, u), h2 = h2_conformal(3, u);
    for (std::size_t k = 0; k < g.size(); ++k)
        for (int i = 0; i < 6; ++i) CHECK(h2.v[k][i] == -s.v[k][i]);
}

TEST_CASE("library against the closed form at second order") {
    std::vector<double> r;
    for (int n : {32, 64}) {
        const Grid3 g{n, 1.0};
        r.push_back(sup_norm(difference(schouten_conformal(3, Scalar3::sample(g, test_u)), closed_form(g))));
    }
    // the amplitude-0.1 field carries a truncation constant near 70
    CHECK(r[1] < 100.0 * std::pow(1.0 / 64, 2));
    CHECK(std::log2(r[0] / r[1]) == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("Ricci oracle agrees with the closed form") {
    const Grid3 g{40, 1.0};
    CHECK(sup_norm(difference(oracle::schouten_from_christoffels(Scalar3::sample(g, test_u)), closed_form(g))) <
          1e-3);
}

TEST_CASE("library against the Ricci oracle") {
    std::vector<double> r;
    for (int n : {20, 40}) {
        const Grid3 g{n, 1.0};
        const auto u = Scalar3::sample(g, test_u);
        r.push_back(sup_norm(difference(schouten_conformal(3, u), oracle::schouten_from_christoffels(u))));
    }
    CHECK(std::log2(r[0] / r[1]) == doctest::Approx(2.0).epsilon(0.15));
}

TEST_CASE("conformal change identity") {
    const auto mild = [](double x, double y, double z) {
        return 0.05 * std::sin(2.0 * M_PI * x) * std::cos(2.0 * M_PI * y) + 0.03 * std::sin(2.0 * M_PI * z);
    };
    for (int n : {32, 64}) {
        const Grid3 g{n, 1.0};
        CHECK(schouten_identity_residual(3, Scalar3::sample(g, mild)) < 10.0 * g.h() * g.h());
    }
    const Grid3 g{8, 1.0};
    CHECK(schouten_identity_residual(3, Scalar3::sample(g, [](double, double, double) { return 0.3; })) < 1e-15);
}

TEST_CASE("only dimension three is supported") {
    const Grid3 g{4, 1.0};
    const auto u = Scalar3::sample(g, test_u);
    CHECK_THROWS_AS(schouten_conformal(2, u), UnsupportedDimension);
    CHECK_THROWS_AS(schouten_identity_residual(4, u), UnsupportedDimension);
    try {
        h2_conformal(5, u);
    } catch (const UnsupportedDimension& e) {
        CHECK(e.d == 5);
    }
}

TEST_CASE("periodic indexing wraps") {
    const Grid3 g{5, 2.0};
    CHECK(g.index(-1, 0, 0) == g.index(4, 0, 0));
    CHECK(g.index(0, 6, -5) == g.index(0, 1, 0));
    CHECK(g.point(g.index(1, 2, 3))[2] == doctest::Approx(1.2));
}

}
