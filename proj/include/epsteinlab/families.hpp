#pragma once

#include <random>

#include "epsteinlab/holomorphic.hpp"
#include "epsteinlab/grid.hpp"

namespace epsteinlab {

/// Seeded generators for the pseudo-random test families.
class Families {
public:
    explicit Families(unsigned long long seed) : rng_(seed) {}

    double uniform(double lo, double hi);
    cplx complex_in_box(double r);

    /// Mobius map with |ad - bc| >= 0.1 and pole outside |z| <= pole_radius.
    HolomorphicMap mobius_map(double pole_radius = 2.0);

    /// offset + amplitude * (normalized sum of low Fourier modes of period `period`).
    ScalarField smooth_field(const ChartPtr& chart, double amplitude, double offset = 0.0, double period = 2.0);

    /// P diag(l1, l2) P^{-1} with eigenvalues in (-bound, bound).
    Mat2 operator_with_spectrum(double bound);
    /// g^{-1} T for random SPD g and T (eigenvalues of T in [lo, hi]): self-adjoint
/// for g, with positive spectrum.
    Mat2 positive_operator(double lo, double hi);
    Sym2 spd(double lo, double hi);

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

/// EPSTEIN_LAB_SEED if set and valid, otherwise the fixed default.
unsigned long long default_seed();

inline constexpr unsigned long long kDefaultSeed = 20240917ULL;

}  // namespace epsteinlab
