// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Every threshold below is fixed here and checked against the raw
// residuals, independently of the tolerances the suites carry.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "epsteinlab/foliation.hpp"
#include "epsteinlab/report.hpp"
#include "epsteinlab/schouten.hpp"
#include "oracles.hpp"

using namespace epsteinlab;

namespace {

constexpr double kDx = 5e-3;                  // finest spacing of the default run
constexpr double kTenDx2 = 10.0 * kDx * kDx;  // 2.5e-4
constexpr double kOrderLo = 1.7, kOrderHi = 2.3;
constexpr double kRoundOff = 1e-12;
constexpr double kRunTimeLimit = 120.0;  // seconds for the Monge-Ampere suite

struct Criterion {
    std::string title;
    bool pass = true;
    std::vector<std::string> detail;

    void need(const std::string& what, double value, double limit) {
        const bool ok = value < limit;
        pass = pass && ok;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s %.3e<%.1e%s", what.c_str(), value, limit, ok ? "" : "!");
        detail.emplace_back(buf);
    }
    void need_order(const std::string& what, double order) {
        const bool ok = order >= kOrderLo && order <= kOrderHi;
        pass = pass && ok;
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s order %.2f%s", what.c_str(), order, ok ? "" : "!");
        detail.emplace_back(buf);
    }
    void note(const std::string& s) { detail.push_back(s); }
};

class Results {
public:
    void load(const SuiteReport& r) {
        for (const auto& c : r.checks) checks_[r.suite + "/" + c.name] = c;
    }
    const Check& at(const std::string& key) const {
        static const Check missing{"missing", "", std::nan(""), 0.0};
        const auto it = checks_.find(key);
        return it == checks_.end() ? missing : it->second;
    }
    double residual(const std::string& key) const { return at(key).residual; }
    double order(const std::string& key) const {
        const auto& c = at(key);
        return c.convergence_order ? *c.convergence_order : std::nan("");
    }

private:
    std::map<std::string, Check> checks_;
};

double schouten_test_u(double x, double y, double z) {
    return 0.1 * std::sin(2.0 * M_PI * x) * std::cos(2.0 * M_PI * y) + 0.06 * std::sin(2.0 * M_PI * z);
}

// -Hess u + du (x) du - |du|^2/2 delta for schouten_test_u.
Sym3Field schouten_closed_form(const Grid3& g) {
    Sym3Field out{g, std::vector<Sym3>(g.size())};
    const double w = 2.0 * M_PI, w2 = w * w, A = 0.1;
    for (std::size_t k = 0; k < g.size(); ++k) {
        const auto p = g.point(k);
        const double sx = std::sin(w * p[0]), cx = std::cos(w * p[0]);
        const double sy = std::sin(w * p[1]), cy = std::cos(w * p[1]);
        const double sz = std::sin(w * p[2]), cz = std::cos(w * p[2]);
        const double du[3] = {A * w * cx * cy, -A * w * sx * sy, 0.6 * A * w * cz};
        const double hess[3][3] = {{-A * w2 * sx * cy, -A * w2 * cx * sy, 0.0},
                                   {-A * w2 * cx * sy, -A * w2 * sx * cy, 0.0},
                                   {0.0, 0.0, -0.6 * A * w2 * sz}};
        const double n2 = du[0] * du[0] + du[1] * du[1] + du[2] * du[2];
        for (int a = 0; a < 3; ++a)
            for (int b = a; b < 3; ++b)
                out.v[k][sym3_slot(a, b)] = -hess[a][b] + du[a] * du[b] - (a == b ? 0.5 * n2 : 0.0);
    }
    return out;
}

}  // namespace

int main() {
    SuiteConfig cfg = SuiteConfig::defaults();
    Results res;
    double weingarten_seconds = 0.0;
    for (const auto& name : suite_names()) {
        if (name == "all") continue;
        const auto t0 = std::chrono::steady_clock::now();
        res.load(run_suite(name, cfg));
        const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (name == "weingarten") weingarten_seconds = dt;
    }

    std::vector<Criterion> all;

    {
        Criterion c{"Schwarzian cocycle and Mobius kernel"};
        c.need("mobius-kernel", res.residual("schwarzian/mobius-kernel"), 1e-10);
        for (const char* k : {"schwarzian/map-cocycle", "schwarzian/tensor-cocycle"}) {
            c.need(k, res.residual(k), kTenDx2);
            c.need_order(k, res.order(k));
        }
        all.push_back(c);
    }
    {
        Criterion c{"flatness of the hyperbolic and spherical metrics on |z| <= 0.8"};
        c.need("hyperbolic", res.residual("schwarzian/flatness-hyperbolic"), kTenDx2);
        c.need("spherical", res.residual("schwarzian/flatness-spherical"), kTenDx2);
        all.push_back(c);
    }
    {
        Criterion c{"Epstein calibration, Gauss map and equidistant family"};
        for (const char* k : {"epstein/calibration-constant-metric", "epstein/gauss-map-envelope",
                              "epstein/equidistance-r0.3", "epstein/equidistance-r1.0"})
            c.need(k, res.residual(k), 1e-6);
        all.push_back(c);
    }
    {
        Criterion c{"horosphere-cone duality for three metrics"};
        for (const char* m : {"fuchsian", "umbilic", "random"}) {
            const std::string base = std::string("duality/") + m;
            c.need(base + "-first", res.residual(base + "-first"), kTenDx2);
            c.need(base + "-second", res.residual(base + "-second"), kTenDx2);
        }
        // the umbilic case is resolved exactly up to the envelope's own
        // round-off, so only the curved metrics carry a convergence order
        c.need_order("fuchsian-second", res.order("duality/fuchsian-second"));
        c.need_order("random-second", res.order("duality/random-second"));
        all.push_back(c);
    }
    {
        Criterion c{"Schwarzian at infinity of the strip"};
        c.need("relative", res.residual("duality/strip-schwarzian-at-infinity"), 1e-2);
        all.push_back(c);
    }
    {
        Criterion c{"conformal change of II* and of the Schouten tensor"};
        c.need("d2-epstein", res.residual("conformal-change/d2-epstein"), kTenDx2);
        c.need("d2-cone", res.residual("conformal-change/d2-cone"), kTenDx2);
        const double h3 = 1.0 / 64.0;
        c.need("d3-schouten", res.residual("conformal-change/d3-schouten"), 10.0 * h3 * h3);
        const Grid3 g50{50, 1.0};
        const auto u50 = Scalar3::sample(g50, schouten_test_u);
        const auto oracle50 = oracle::schouten_from_christoffels(u50);
        c.need("ricci-oracle-vs-closed-form", sup_norm(difference(oracle50, schouten_closed_form(g50))), 1e-3);
        const Grid3 g100{100, 1.0};
        const auto u100 = Scalar3::sample(g100, schouten_test_u);
        const double r50 = sup_norm(difference(schouten_conformal(3, u50), oracle50));
        const double r100 =
            sup_norm(difference(schouten_conformal(3, u100), oracle::schouten_from_christoffels(u100)));
        c.need_order("library-vs-ricci-oracle", convergence_order(r50, r100));
        all.push_back(c);
    }
    {
        Criterion c{"B/B* dictionary, transfer formulas, umbilic identity"};
        c.need("dictionary", res.residual("epstein/dictionary-involution"), kRoundOff);
        c.need("transfer", res.residual("weingarten/bstar-transfer"), kRoundOff);
        c.need("umbilic", res.residual("weingarten/umbilic-identity"), kRoundOff);
        all.push_back(c);
    }
    {
        Criterion c{"Monge-Ampere solver"};
        c.need("periodic-residual", res.residual("weingarten/minimal-periodic-residual"), 1e-10);
        char buf[64];
        std::snprintf(buf, sizeof buf, "C=%.3g", res.residual("weingarten/minimal-periodic-quadratic"));
        c.note(buf);
        c.need("|H|", res.residual("weingarten/minimal-geometric-closure"), 1e-3);
        c.need("|Ke-k|", res.residual("weingarten/constant-ke-closure"), 1e-3);
        c.need("positivity", res.residual("weingarten/minimal-positivity"), kRoundOff);
        c.need("seconds", weingarten_seconds, kRunTimeLimit);
        all.push_back(c);
    }
    {
        Criterion c{"foliations, extremal length and the Gardiner formula"};
        c.need("ext-scaling", res.residual("foliation/ext-scaling"), 1e-13);
        const double eps = 5e-3;
        c.need("gardiner", res.residual("foliation/gardiner"), 10.0 * eps * eps);
        c.need_order("gardiner", res.order("foliation/gardiner"));
        c.need("pairing", res.residual("foliation/pairing"), 1e-10);
        c.need("pairing-anti-regression", res.residual("foliation/pairing-factor-anti-regression"), 1e-6);
        double worst = 0.0;
        for (auto [p, q] : {std::pair{1, 0}, std::pair{1, 2}, std::pair{-2, 3}})
            for (cplx tau : {cplx(0.0, 1.0), cplx(0.3, 1.2)}) {
                const double want = oracle::extremal_length_by_energy(p, q, tau);
                worst = std::max(worst,
                                 std::abs(extremal_length(SlopeFoliation(p, q), TorusModulus(tau)) - want) / want);
            }
        c.need("ext-vs-energy-oracle", worst, 1e-6);
        all.push_back(c);
    }
    {
        Criterion c{"Nehari bound"};
        c.need("koebe |S|(1-|z|^2)^2/4 - 3/2", res.residual("schwarzian/nehari-koebe-equality"), 1e-3);
        c.need("koebe bound on |z| <= 0.9", res.residual("schwarzian/nehari-koebe-bound"), 1e-9);
        c.need("integral certificate", res.residual("foliation/nehari-certificate"), 1e-12);
        all.push_back(c);
    }

    bool ok = true;
    for (std::size_t i = 0; i < all.size(); ++i) {
        const auto& c = all[i];
        std::string line = c.pass ? "PASS" : "FAIL";
        line += " [" + std::to_string(i + 1) + "] " + c.title + ":";
        for (const auto& d : c.detail) line += " " + d + ";";
        line.pop_back();
        std::printf("%s\n", line.c_str());
        ok = ok && c.pass;
    }
    return ok ? 0 : 1;
}
