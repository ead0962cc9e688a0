#include "epsteinlab/holomorphic.hpp"

#include <sstream>

namespace epsteinlab {

Jet compose_jets(const Jet& f, const Jet& g) {
    const cplx f1 = f.d1, f2 = f.d2, f3 = f.d3;
    return {g.f, g.d1 * f1, g.d2 * f1 * f1 + g.d1 * f2,
            g.d3 * f1 * f1 * f1 + 3.0 * g.d2 * f1 * f2 + g.d1 * f3};
}

HolomorphicMap::HolomorphicMap(std::string name, JetFn jet)
    : name_(std::move(name)), closed_(true), jet_(std::move(jet)) {
    value_ = [j = jet_](cplx z) { return j(z).f; };
}

HolomorphicMap HolomorphicMap::sampled(std::string name, ValueFn value, double step, StencilOrder order) {
    if (!(step > 0.0)) throw ConfigInvalid("sampled maps need a positive step");
    HolomorphicMap m;
    m.name_ = std::move(name);
    m.closed_ = false;
    m.step_ = step;
    m.order_ = order;
    m.value_ = std::move(value);
    m.jet_ = [v = m.value_, h = step, order](cplx z) {
        auto at = [&](int k) { return v(z + cplx(k * h, 0.0)); };
        Jet j;
        j.f = at(0);
        if (order == StencilOrder::Second) {
            const cplx p1 = at(1), m1 = at(-1), p2 = at(2), m2 = at(-2);
            j.d1 = (p1 - m1) / (2.0 * h);
            j.d2 = (p1 - 2.0 * j.f + m1) / (h * h);
            j.d3 = (p2 - 2.0 * p1 + 2.0 * m1 - m2) / (2.0 * h * h * h);
        } else {
            const cplx p1 = at(1), m1 = at(-1), p2 = at(2), m2 = at(-2), p3 = at(3), m3 = at(-3);
            j.d1 = (-p2 + 8.0 * p1 - 8.0 * m1 + m2) / (12.0 * h);
            j.d2 = (-p2 + 16.0 * p1 - 30.0 * j.f + 16.0 * m1 - m2) / (12.0 * h * h);
            j.d3 = (-p3 + 8.0 * p2 - 13.0 * p1 + 13.0 * m1 - 8.0 * m2 + m3) / (8.0 * h * h * h);
        }
        return j;
    };
    return m;
}

Jet HolomorphicMap::jet(cplx z) const { return jet_(z); }

HolomorphicMap HolomorphicMap::as_sampled(double step, StencilOrder order) const {
    return sampled(name_, value_, step, order);
}

HolomorphicMap compose(const HolomorphicMap& f, const HolomorphicMap& g) {
    const std::string name = g.name() + "(" + f.name() + ")";
    if (f.closed_form() && g.closed_form()) {
        return HolomorphicMap(name, [f, g](cplx z) {
            const Jet jf = f.jet(z);
            return compose_jets(jf, g.jet(jf.f));
        });
    }
    double step = 0.0;
    StencilOrder order = StencilOrder::Fourth;
    for (const auto* m : {&f, &g}) {
        if (m->closed_form()) continue;
        if (step == 0.0 || m->step() < step) step = m->step();
        if (m->order() == StencilOrder::Second) order = StencilOrder::Second;
    }
    return HolomorphicMap::sampled(name, [f, g](cplx z) { return g(f(z)); }, step, order);
}

HolomorphicMap mobius(cplx a, cplx b, cplx c, cplx d) {
    if (std::abs(a * d - b * c) == 0.0) throw ConfigInvalid("mobius map with ad - bc = 0");
    return HolomorphicMap("mobius", [a, b, c, d](cplx z) {
        const cplx den = c * z + d;
        const cplx f1 = (a * d - b * c) / (den * den);
        return Jet{(a * z + b) / den, f1, -2.0 * c * f1 / den, 6.0 * c * c * f1 / (den * den)};
    });
}

HolomorphicMap identity_map() {
    return HolomorphicMap("identity", [](cplx z) { return Jet{z, 1.0, 0.0, 0.0}; });
}

HolomorphicMap exp_map() {
    return HolomorphicMap("exp", [](cplx z) {
        const cplx e = std::exp(z);
        return Jet{e, e, e, e};
    });
}

HolomorphicMap log_map() {
    return HolomorphicMap("log", [](cplx z) {
        const cplx iz = 1.0 / z;
        return Jet{std::log(z), iz, -iz * iz, 2.0 * iz * iz * iz};
    });
}

HolomorphicMap square_map() {
    return HolomorphicMap("square", [](cplx z) { return Jet{z * z, 2.0 * z, 2.0, 0.0}; });
}

HolomorphicMap koebe_map() {
    return HolomorphicMap("koebe", [](cplx z) {
        const cplx w = 1.0 - z;
        const cplx w2 = w * w, w3 = w2 * w;
        return Jet{z / w2, (1.0 + z) / w3, (4.0 + 2.0 * z) / (w3 * w), (18.0 + 6.0 * z) / (w3 * w2)};
    });
}

namespace {

Jet poly_jet(const std::vector<cplx>& c, cplx z) {
    Jet j{0.0, 0.0, 0.0, 0.0};
    for (std::size_t n = c.size(); n-- > 0;) {
        // Horner on the jet: j <- j * z + c_n.
        j.d3 = j.d3 * z + 3.0 * j.d2;
        j.d2 = j.d2 * z + 2.0 * j.d1;
        j.d1 = j.d1 * z + j.f;
        j.f = j.f * z + c[n];
    }
    return j;
}

}  // namespace

HolomorphicMap rational_map(std::vector<cplx> p, std::vector<cplx> q) {
    if (q.empty()) throw ConfigInvalid("rational map needs a denominator");
    return HolomorphicMap("rational", [p, q](cplx z) {
        const Jet a = poly_jet(p, z), b = poly_jet(q, z);
        // r = a / b, differentiate a = r b three times.
        Jet r;
        r.f = a.f / b.f;
        r.d1 = (a.d1 - r.f * b.d1) / b.f;
        r.d2 = (a.d2 - 2.0 * r.d1 * b.d1 - r.f * b.d2) / b.f;
        r.d3 = (a.d3 - 3.0 * r.d2 * b.d1 - 3.0 * r.d1 * b.d2 - r.f * b.d3) / b.f;
        return r;
    });
}

HolomorphicMap strip_uniformizer() {
    const cplx i(0.0, 1.0);
    HolomorphicMap m = compose(exp_map(), mobius(1.0, -i, 1.0, i));
    return HolomorphicMap("strip-uniformizer", [m](cplx z) { return m.jet(z); });
}

HolomorphicMap cayley_map() {
    const cplx i(0.0, 1.0);
    HolomorphicMap m = mobius(1.0, -i, 1.0, i);
    return HolomorphicMap("cayley", [m](cplx z) { return m.jet(z); });
}

HolomorphicMap map_from_name(const std::string& spec) {
    if (spec == "exp") return exp_map();
    if (spec == "log") return log_map();
    if (spec == "square") return square_map();
    if (spec == "koebe") return koebe_map();
    if (spec == "identity" || spec == "disk-identity") return identity_map();
    if (spec == "strip-uniformizer") return strip_uniformizer();
    if (spec == "cayley" || spec == "half-plane") return cayley_map();
    if (spec.rfind("mobius:", 0) == 0) {
        std::vector<double> v;
        std::stringstream ss(spec.substr(7));
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            try {
                v.push_back(std::stod(cell));
            } catch (const std::exception&) {
                throw ConfigInvalid("bad mobius coefficient '" + cell + "'");
            }
        }
        if (v.size() != 4) throw ConfigInvalid("mobius needs four coefficients a,b,c,d");
        return mobius(v[0], v[1], v[2], v[3]);
    }
    throw ConfigInvalid("unknown map '" + spec + "'");
}

std::vector<std::string> builtin_map_names() {
    return {"mobius:a,b,c,d", "exp", "log", "square", "koebe", "identity", "strip-uniformizer", "cayley"};
}

}  // namespace epsteinlab
