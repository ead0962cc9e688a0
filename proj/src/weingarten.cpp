#include "epsteinlab/weingarten.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>
#include <random>

#include "epsteinlab/schwarzian.hpp"

namespace epsteinlab {

Classification classify(const WeingartenCoeffs& co) {
    Classification c;
    c.elliptic = co.discriminant() > 0.0;
    c.sign_ok = co.shift() * co.front() <= 0.0;
    c.degenerate_front = co.front() == 0.0 || co.a + co.b + co.c == 0.0;
    if (co.a == 0.0 && co.c == 0.0 && co.b != 0.0) {
        c.tag = "minimal";
    } else if (co.a == 0.0 && co.b != 0.0 && std::abs(co.b) == std::abs(co.c)) {
        c.tag = "cmc1";
    } else if (co.b == 0.0 && co.a != 0.0 && -co.c / co.a > 0.0 && -co.c / co.a < 1.0) {
        c.tag = "constant-Ke";
        c.k = -co.c / co.a;
    } else {
        c.tag = "generic";
    }
    return c;
}

ScalarField weingarten_residual_surface(const SurfaceData& d, const WeingartenCoeffs& co) {
    return d.B.map([&](const Mat2& b) { return co.a * b.det() + co.b * 0.5 * b.trace() + co.c; });
}

double weingarten_residual_infinity(const Mat2& bstar, const WeingartenCoeffs& co) {
    if (co.front() == 0.0) throw DegenerateFrontCoefficients();
    return (co.front() * bstar + Mat2::scalar(co.shift())).det() - co.discriminant();
}

ScalarField weingarten_residual_infinity(const InfinityData& inf, const WeingartenCoeffs& co) {
    if (co.front() == 0.0) throw DegenerateFrontCoefficients();
    return inf.Bstar.map([&](const Mat2& b) { return weingarten_residual_infinity(b, co); });
}

ScalarField cmc1_residual(const InfinityData& inf) {
    return inf.Bstar.map([](const Mat2& b) { return b.trace() + 2.0; });
}

double det_b_from_bstar(const Mat2& bs) {
    const double d = bs.det(), t = bs.trace();
    return (d - t + 1.0) / (d + t + 1.0);
}

double trace_b_from_bstar(const Mat2& bs) {
    const double d = bs.det(), t = bs.trace();
    return 2.0 * (1.0 - d) / (d + t + 1.0);
}

InfinityData MABase::infinity_data() const { return infinity_data_from_pair(conformal_tensor(v), iistar); }

AdmissibilityResiduals MABase::admissibility(const Region& r) const {
    return admissibility_residuals(infinity_data(), r);
}

MABase fuchsian_base(const ChartPtr& chart, const std::optional<ScalarField>& phi) {
    const ScalarField vf = ScalarField::sample(chart, [](cplx z) { return std::log(std::sqrt(2.0) / (1.0 - std::norm(z))); });
    MABase b;
    if (!phi) {
        b.v = vf;
        b.iistar = conformal_tensor(vf);
        return b;
    }
    const SymTensor2Field shift = bbar_flat(vf, *phi);
    b.v = vf + *phi;
    b.iistar = conformal_tensor(vf) + shift;
    return b;
}

MABase umbilic_base(const ChartPtr& chart, double u0) {
    return {ScalarField(chart, u0), SymTensor2Field(chart, Sym2{})};
}

MABase perturbed_flat_base(const ChartPtr& chart, double lambda, double eps, unsigned long long seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> amp(-1.0, 1.0), ph(0.0, 2.0 * M_PI);
    const double lx = chart->nx() * chart->dx(), ly = chart->ny() * chart->dy();
    struct Mode {
        int kx, ky;
        double a, p;
    };
    std::vector<Mode> modes;
    for (int kx = 0; kx <= 2; ++kx)
        for (int ky = 0; ky <= 2; ++ky)
            if (kx || ky) modes.push_back({kx, ky, amp(rng), ph(rng)});
    double norm = 0.0;
    for (const auto& m : modes) norm += std::abs(m.a);
    const ScalarField n = ScalarField::sample(chart, [&](cplx z) {
        double s = 0.0;
        for (const auto& m : modes)
            s += m.a * std::cos(2.0 * M_PI * (m.kx * (z.real() - chart->x0()) / lx + m.ky * (z.imag() - chart->y0()) / ly) + m.p);
        return s / norm;
    });
    MABase b;
    b.v = ScalarField(chart, 0.0);
    b.iistar = n.map([&](double x) {
        const double s = lambda * (1.0 + eps * x);
        return Sym2{s, 0.0, s};
    });
    return b;
}

SymTensor2Field ma_second_form(const ScalarField& u, const MAProblem& p) {
    const ScalarField& v = p.base.v;
    require_same_chart(u, v);
    const SymTensor2Field hu = fd_hessian_flat(u);
    const CovectorField du = fd_gradient(u), dv = fd_gradient(v);
    return SymTensor2Field::generate(u.chart_ptr(), [&](std::size_t k) {
        return p.base.iistar[k] + hu[k] - 2.0 * Sym2::sym_outer(dv[k], du[k]) - Sym2::outer(du[k]) +
               (dv[k].dot(du[k]) + 0.5 * du[k].norm2()) * Sym2::identity();
    });
}

namespace {

Sym2 ma_tensor(const Sym2& s, double u, double v, const WeingartenCoeffs& co) {
    return co.front() * s + (co.shift() * std::exp(2.0 * (u + v))) * Sym2::identity();
}

void check_coefficients(const WeingartenCoeffs& co) {
    if (!(co.discriminant() > 0.0)) throw NotElliptic(co.discriminant());
    if (co.front() == 0.0) throw DegenerateFrontCoefficients();
}

}  // namespace

ScalarField ma_residual(const ScalarField& u, const MAProblem& p) {
    const SymTensor2Field s = ma_second_form(u, p);
    const double disc = p.coeffs.discriminant();
    return ScalarField::generate(u.chart_ptr(), [&](std::size_t k) {
        const Sym2 t = ma_tensor(s[k], u[k], p.base.v[k], p.coeffs);
        return t.det() * std::exp(-4.0 * p.base.v[k]) - disc * std::exp(4.0 * u[k]);
    });
}

ScalarField ma_residual_operator_form(const ScalarField& u, const MAProblem& p) {
    const SymTensor2Field s = ma_second_form(u, p);
    return ScalarField::generate(u.chart_ptr(), [&](std::size_t k) {
        const double g = std::exp(2.0 * (u[k] + p.base.v[k]));
        const Mat2 bstar = raise(Sym2{g, 0.0, g}, s[k]);
        return weingarten_residual_infinity(bstar, p.coeffs);
    });
}

double default_initial_constant(const MAProblem& p) {
    const InfinityData inf = p.base.infinity_data();
    double sum = 0.0;
    std::size_t n = 0;
    for (std::size_t k = 0; k < inf.Bstar.size(); ++k) {
        if (!inf.Bstar.chart().active(k)) continue;
        sum += 0.5 * inf.Bstar[k].trace();
        ++n;
    }
    const double lam = n ? sum / n : 0.0;
    const double al = p.coeffs.front(), be = p.coeffs.shift(), rd = std::sqrt(std::max(0.0, p.coeffs.discriminant()));
    // (al lam + be s)^2 = D s^2  =>  s = al lam / (+-sqrt(D) - be).
    double best = 0.0;
    for (double sgn : {1.0, -1.0}) {
        const double den = sgn * rd - be;
        if (den == 0.0) continue;
        const double s = al * lam / den;
        if (s > best) best = s;
    }
    return best > 0.0 ? 0.5 * std::log(best) : 0.0;
}

namespace {

struct Layout {
    std::vector<long> unknown;  // node -> unknown index or -1
    std::vector<std::size_t> nodes;
};

Layout make_layout(const MAProblem& p) {
    const GridChart& c = p.base.v.chart();
    if (c.active_count() != c.size()) throw ConfigInvalid("Monge-Ampere charts may not exclude nodes");
    Layout l;
    l.unknown.assign(c.size(), -1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c.edge_distance(c.col(k), c.row(k)) < p.margin) continue;
        l.unknown[k] = static_cast<long>(l.nodes.size());
        l.nodes.push_back(k);
    }
    if (l.nodes.empty()) throw ConfigInvalid("no unknowns inside the Dirichlet margin");
    return l;
}

double sup_over(const ScalarField& f, const Layout& l) {
    double m = 0.0;
    for (auto k : l.nodes) {
        if (std::isnan(f[k])) return std::numeric_limits<double>::infinity();
        m = std::max(m, std::abs(f[k]));
    }
    return m;
}

Eigen::SparseMatrix<double> jacobian(const ScalarField& u, const MAProblem& p, const Layout& l) {
    const GridChart& c = u.chart();
    const WeingartenCoeffs& co = p.coeffs;
    const SymTensor2Field s = ma_second_form(u, p);
    const CovectorField du = fd_gradient(u), dv = fd_gradient(p.base.v);
    const double hx = c.dx(), hy = c.dy();
    std::vector<Eigen::Triplet<double>> trip;
    trip.reserve(l.nodes.size() * 9);
    for (std::size_t row = 0; row < l.nodes.size(); ++row) {
        const std::size_t k = l.nodes[row];
        const int i = c.col(k), j = c.row(k);
        const double v = p.base.v[k];
        const Sym2 t = ma_tensor(s[k], u[k], v, co);
        const double p11 = t.yy, p12 = -t.xy, p22 = t.xx;
        const Vec2 g = dv[k] + du[k];
        const double scale = std::exp(-4.0 * v);
        const double al = co.front() * scale;
        const double cxx = al * p11, cyy = al * p22, cxy = al * 2.0 * p12;
        const double cx = al * (-p11 * g.x + p22 * g.x - 2.0 * p12 * g.y);
        const double cy = al * (p11 * g.y - p22 * g.y - 2.0 * p12 * g.x);
        const double diag = scale * 2.0 * co.shift() * std::exp(2.0 * (u[k] + v)) * (p11 + p22) -
                            4.0 * co.discriminant() * std::exp(4.0 * u[k]);
        double w[3][3] = {};
        w[1][1] += diag - 2.0 * cxx / (hx * hx) - 2.0 * cyy / (hy * hy);
        w[2][1] += cxx / (hx * hx) + cx / (2.0 * hx);
        w[0][1] += cxx / (hx * hx) - cx / (2.0 * hx);
        w[1][2] += cyy / (hy * hy) + cy / (2.0 * hy);
        w[1][0] += cyy / (hy * hy) - cy / (2.0 * hy);
        const double m = cxy / (4.0 * hx * hy);
        w[2][2] += m;
        w[0][0] += m;
        w[2][0] -= m;
        w[0][2] -= m;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
                if (w[a][b] == 0.0) continue;
                int ii = i + a - 1, jj = j + b - 1;
                if (c.periodic_x()) ii = (ii + c.nx()) % c.nx();
                if (c.periodic_y()) jj = (jj + c.ny()) % c.ny();
                const long col = l.unknown[c.index(ii, jj)];
                if (col >= 0) trip.emplace_back(static_cast<int>(row), static_cast<int>(col), w[a][b]);
            }
    }
    Eigen::SparseMatrix<double> jm(static_cast<long>(l.nodes.size()), static_cast<long>(l.nodes.size()));
    jm.setFromTriplets(trip.begin(), trip.end());
    return jm;
}

}  // namespace

MASolution ma_newton_solve(const MAProblem& p, const NewtonConfig& cfg, const std::optional<ScalarField>& initial) {
    check_coefficients(p.coeffs);
    const Layout l = make_layout(p);
    const ChartPtr& chart = p.base.v.chart_ptr();
    const bool periodic = chart->periodic_x() && chart->periodic_y();

    MASolution sol;
    if (!periodic && !p.boundary) throw ConfigInvalid("Dirichlet problems need boundary values");
    // A Dirichlet start that jumps at the margin costs many damped steps, so
    // the boundary field itself is the default there.
    if (initial) sol.u = rebase(*initial, chart);
    else if (periodic) sol.u = ScalarField(chart, default_initial_constant(p));
    else sol.u = rebase(*p.boundary, chart);
    if (!periodic) {
        const ScalarField bc = rebase(*p.boundary, chart);
        for (std::size_t k = 0; k < chart->size(); ++k)
            if (l.unknown[k] < 0) sol.u[k] = bc[k];
    }

    double r = sup_over(ma_residual(sol.u, p), l);
    sol.newton_trace.push_back(r);
    int iter = 0;
    while (!(r < cfg.tol)) {
        if (iter++ >= cfg.max_iter || !std::isfinite(r)) throw NewtonDiverged(sol.newton_trace);
        const ScalarField f = ma_residual(sol.u, p);
        Eigen::SparseMatrix<double> jm = jacobian(sol.u, p, l);
        const long n = jm.rows();
        Eigen::VectorXd rhs(n);
        for (long q = 0; q < n; ++q) rhs[q] = -f[l.nodes[static_cast<std::size_t>(q)]];

        if (periodic) {
            const Eigen::VectorXd ones = Eigen::VectorXd::Ones(n);
            const double jmax = (jm.cwiseAbs() * ones).maxCoeff();
            if ((jm * ones).cwiseAbs().maxCoeff() <= 1e-10 * jmax) {
                sol.pinned_mean = true;
                std::vector<Eigen::Triplet<double>> trip;
                for (int o = 0; o < jm.outerSize(); ++o)
                    for (Eigen::SparseMatrix<double>::InnerIterator it(jm, o); it; ++it)
                        trip.emplace_back(static_cast<int>(it.row()), static_cast<int>(it.col()), it.value());
                for (long q = 0; q < n; ++q) {
                    trip.emplace_back(static_cast<int>(q), static_cast<int>(n), 1.0);
                    trip.emplace_back(static_cast<int>(n), static_cast<int>(q), 1.0);
                }
                jm.resize(n + 1, n + 1);
                jm.setFromTriplets(trip.begin(), trip.end());
                rhs.conservativeResize(n + 1);
                rhs[n] = 0.0;
            }
        }

        Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
        lu.analyzePattern(jm);
        lu.factorize(jm);
        if (lu.info() != Eigen::Success) throw NewtonDiverged(sol.newton_trace);
        Eigen::VectorXd step = lu.solve(rhs);
        if (lu.info() != Eigen::Success) throw NewtonDiverged(sol.newton_trace);
        for (int refine = 0; refine < 2; ++refine) step += lu.solve(rhs - jm * step);

        double lambda = 1.0;
        bool improved = false;
        for (int h = 0; h <= cfg.max_halvings; ++h, lambda *= 0.5) {
            ScalarField trial = sol.u;
            for (long q = 0; q < n; ++q) trial[l.nodes[static_cast<std::size_t>(q)]] += lambda * step[q];
            const double rt = sup_over(ma_residual(trial, p), l);
            if (rt < r) {
                sol.u = std::move(trial);
                r = rt;
                improved = true;
                break;
            }
        }
        if (!improved) throw NewtonDiverged(sol.newton_trace);
        sol.newton_trace.push_back(r);
    }
    sol.converged = true;

    for (std::size_t q = 1; q < sol.newton_trace.size(); ++q) {
        const double prev = sol.newton_trace[q - 1];
        // Once r_k^2 drops below tol the next residual sits on the round-off
        // floor and says nothing about the decay rate.
        if (prev < 1e-2 && prev * prev >= cfg.tol)
            sol.quadratic_constant = std::max(sol.quadratic_constant, sol.newton_trace[q] / (prev * prev));
    }

    // Positivity of II* + Bbar(I*, e^{2u} I*) relative to I*.
    const SymTensor2Field s = ma_second_form(sol.u, p);
    double cert = std::numeric_limits<double>::infinity();
    for (auto k : l.nodes) {
        const double g = std::exp(2.0 * p.base.v[k]);
        cert = std::min(cert, real_eigenvalues(raise(Sym2{g, 0.0, g}, s[k])).lo);
    }
    sol.positivity_certificate = cert;
    sol.positive = cert > 0.0;
    sol.accepted = sol.converged && sol.positive;
    return sol;
}

GeometricReport verify_solution_geometrically(const MASolution& sol, const MAProblem& p, int margin) {
    const EmbeddedSurface s = epstein_surface(ConformalMetric::flat(p.base.v + sol.u), {1, true});
    const SurfaceData d = fundamental_forms(s);
    const Region r = Region::inner(margin);
    GeometricReport g;
    g.sup_weingarten = sup_norm(weingarten_residual_surface(d, p.coeffs), r);
    g.sup_mean_curvature = sup_norm(d.B.map([](const Mat2& b) { return 0.5 * b.trace(); }), r);
    const Classification cl = classify(p.coeffs);
    if (cl.tag == "constant-Ke")
        g.sup_ke_error = sup_norm(d.B.map([&](const Mat2& b) { return b.det() - cl.k; }), r);
    const TameReport t = htame_check(d, r);
    g.tame_margin = t.min_margin;
    g.tame = t.tame;
    return g;
}

}  // namespace epsteinlab
