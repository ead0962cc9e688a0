#include "epsteinlab/families.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

namespace epsteinlab {

double Families::uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

cplx Families::complex_in_box(double r) { return {uniform(-r, r), uniform(-r, r)}; }

HolomorphicMap Families::mobius_map(double pole_radius) {
    for (;;) {
        const cplx a = complex_in_box(1.0), b = complex_in_box(1.0), c = complex_in_box(1.0), d = complex_in_box(1.0);
        if (std::abs(a * d - b * c) < 0.1) continue;
        if (std::abs(c) > 1e-12 && std::abs(d / c) <= pole_radius) continue;
        return mobius(a, b, c, d);
    }
}

ScalarField Families::smooth_field(const ChartPtr& chart, double amplitude, double offset, double period) {
    struct Mode {
        int kx, ky;
        double a, p;
    };
    std::vector<Mode> modes;
    double norm = 0.0;
    for (int kx = 0; kx <= 2; ++kx)
        for (int ky = 0; ky <= 2; ++ky) {
            if (!kx && !ky) continue;
            modes.push_back({kx, ky, uniform(-1.0, 1.0), uniform(0.0, 2.0 * M_PI)});
            norm += std::abs(modes.back().a);
        }
    const double w = 2.0 * M_PI / period;
    return ScalarField::sample(chart, [&](cplx z) {
        double s = 0.0;
        for (const auto& m : modes) s += m.a * std::cos(w * (m.kx * z.real() + m.ky * z.imag()) + m.p);
        return offset + amplitude * s / norm;
    });
}

Mat2 Families::operator_with_spectrum(double bound) {
    for (;;) {
        const Mat2 p{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
        if (std::abs(p.det()) < 0.2) continue;
        const Mat2 d{uniform(-bound, bound), 0.0, 0.0, uniform(-bound, bound)};
        return p * d * p.inverse();
    }
}

Sym2 Families::spd(double lo, double hi) {
    const double t = uniform(0.0, M_PI), c = std::cos(t), s = std::sin(t);
    const double l1 = uniform(lo, hi), l2 = uniform(lo, hi);
    return {c * c * l1 + s * s * l2, c * s * (l1 - l2), s * s * l1 + c * c * l2};
}

Mat2 Families::positive_operator(double lo, double hi) {
    const Sym2 g = spd(0.5, 2.0);
    return raise(g, spd(lo, hi));
}

unsigned long long default_seed() {
    if (const char* env = std::getenv("EPSTEIN_LAB_SEED")) {
        try {
            std::size_t used = 0;
            const unsigned long long v = std::stoull(env, &used);
            if (used == std::string(env).size()) return v;
        } catch (const std::exception&) {
        }
    }
    return kDefaultSeed;
}

}  // namespace epsteinlab
