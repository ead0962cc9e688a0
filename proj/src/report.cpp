#include "epsteinlab/report.hpp"

#include <algorithm>
#include <cmath>

#include "epsteinlab/errors.hpp"
#include "epsteinlab/families.hpp"

namespace epsteinlab {

void Check::evaluate() {
    pass = residual < tolerance;
    if (convergence_order) pass = pass && *convergence_order >= order_lo && *convergence_order <= order_hi;
}

void SuiteReport::finalize() {
    std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.name < b.name; });
    pass = !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

nlohmann::ordered_json number(double v) {
    if (std::isfinite(v)) return v;
    return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
}

}  // namespace

nlohmann::ordered_json SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["pass"] = pass;
    auto& arr = j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["name"] = c.name;
        e["anchor"] = c.anchor;
        e["residual"] = number(c.residual);
        e["tolerance"] = number(c.tolerance);
        if (c.convergence_order) {
            e["convergence_order"] = number(*c.convergence_order);
            e["order_window"] = {c.order_lo, c.order_hi};
        }
        if (!c.note.empty()) e["note"] = c.note;
        e["pass"] = c.pass;
        arr.push_back(std::move(e));
    }
    return j;
}

std::string SuiteReport::dump() const { return to_json().dump(2) + "\n"; }

SuiteConfig SuiteConfig::defaults() {
    SuiteConfig c;
    c.seed = default_seed();
    return c;
}

double SuiteConfig::spacing(int level) const { return std::ldexp(1.0 / grid, -level); }

void SuiteConfig::validate() const {
    if (grid < 16 || grid > 2000) throw ConfigInvalid("grid must lie in [16, 2000]");
    if (levels < 2 || levels > 4) throw ConfigInvalid("refinement levels must lie in [2, 4]");
    if (tol && !(*tol >= 0.0)) throw ConfigInvalid("tolerance must be non-negative");
}

double convergence_order(double coarse, double fine) { return std::log2(coarse / fine); }

}  // namespace epsteinlab
