#pragma once

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace epsteinlab {

struct Check {
    std::string name;
    std::string anchor;  ///< statement the check witnesses
    double residual = 0.0;
    double tolerance = 0.0;
    std::optional<double> convergence_order;
    double order_lo = 1.7, order_hi = 2.3;
    bool pass = false;
    std::string note;

    /// residual < tolerance, and the order inside its window when present.
    void evaluate();
};

struct SuiteReport {
    std::string suite;
    std::vector<Check> checks;
    bool pass = false;

    /// Sorts checks by name and sets the overall verdict.
    void finalize();
    nlohmann::ordered_json to_json() const;
    std::string dump() const;
};

struct SuiteConfig {
    int grid = 100;  ///< coarse level spacing is 1/grid
    int levels = 2;  ///< refinement levels, each halving the spacing
    std::optional<double> tol;  ///< overrides every tolerance
    unsigned long long seed = 0;
    std::string out;

    static SuiteConfig defaults();
    double spacing(int level) const;
    double finest() const { return spacing(levels - 1); }
    void validate() const;
};

std::vector<std::string> suite_names();

/// Runs one suite ("all" aggregates every suite with names prefixed by the
/// suite). Writes JSON to cfg.out when set. UnknownSuite, ConfigInvalid.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

/// log2 of successive residual ratios for halved spacings.
double convergence_order(double coarse, double fine);

}  // namespace epsteinlab
