#pragma once

#include <functional>
#include <memory>
#include <string>

#include "epsteinlab/grid.hpp"

namespace epsteinlab {

/// Value and first three complex derivatives of a holomorphic map at a point.
struct Jet {
    cplx f, d1, d2, d3;
};

/// Jet of g o f from the jet of f at z and the jet of g at f(z).
Jet compose_jets(const Jet& f, const Jet& g);

enum class StencilOrder { Second = 2, Fourth = 4 };

/// A holomorphic map given either by closed-form derivatives or by values
/// only, in which case derivatives come from finite differences along the
/// real direction (so f''' carries the stencil error, roughly one order
/// worse in practice than the values).
class HolomorphicMap {
public:
    using JetFn = std::function<Jet(cplx)>;
    using ValueFn = std::function<cplx(cplx)>;

    HolomorphicMap(std::string name, JetFn jet);
    static HolomorphicMap sampled(std::string name, ValueFn value, double step,
                                  StencilOrder order = StencilOrder::Fourth);

    const std::string& name() const { return name_; }
    bool closed_form() const { return closed_; }
    double step() const { return step_; }
    StencilOrder order() const { return order_; }

    Jet jet(cplx z) const;
    cplx operator()(cplx z) const { return value_(z); }

    /// Sampled copy of this map (values only) at the given step.
    HolomorphicMap as_sampled(double step, StencilOrder order = StencilOrder::Fourth) const;

private:
    HolomorphicMap() = default;

    std::string name_;
    bool closed_ = true;
    double step_ = 0.0;
    StencilOrder order_ = StencilOrder::Fourth;
    JetFn jet_;
    ValueFn value_;
};

/// g o f. Closed forms compose by the chain rule; if either map is sampled
/// the composite is sampled from its values with the finer settings.
HolomorphicMap compose(const HolomorphicMap& f, const HolomorphicMap& g);

HolomorphicMap mobius(cplx a, cplx b, cplx c, cplx d);
HolomorphicMap identity_map();
HolomorphicMap exp_map();
HolomorphicMap log_map();
HolomorphicMap square_map();
HolomorphicMap koebe_map();
/// p(z)/q(z) with coefficients in increasing degree.
HolomorphicMap rational_map(std::vector<cplx> p, std::vector<cplx> q);
/// Riemann map of the strip 0 < Im z < pi onto the unit disk, (e^z - i)/(e^z + i).
HolomorphicMap strip_uniformizer();
/// Riemann map of the upper half-plane onto the unit disk, (z - i)/(z + i).
HolomorphicMap cayley_map();

/// Looks up "mobius:a,b,c,d", "exp", "log", "square", "koebe", "identity",
/// "strip-uniformizer", "cayley".
HolomorphicMap map_from_name(const std::string& spec);
std::vector<std::string> builtin_map_names();

}  // namespace epsteinlab
