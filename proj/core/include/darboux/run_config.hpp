#pragma once

#include <map>
#include <string>

#include "darboux/potentials.hpp"

namespace darboux {

struct GridSpec {
    double lo = 0.0;
    double hi = 0.0;
    int count = 0;
    bool node_scan = true;
    bool is_set() const noexcept { return count > 0; }
};

/// One fully-specified run. Parses from a JSON document with unknown keys
/// rejected; flags fill the same structure. Unset fields fall back to
/// family defaults when the family is built.
struct RunConfig {
    std::string family = "morse";
    std::map<std::string, double> params;
    int levels = 0;  ///< 0 = family default
    int order = 2;
    std::string method = "both";  ///< crum | darboux | both | si
    GridSpec grid;
    std::string out = "transform.csv";
    std::map<std::string, double> tolerances;

    static RunConfig from_json_text(const std::string& text);
    std::string to_json_text() const;
};

/// Family instance for a config, with defaulted parameters and levels.
PotentialFamily make_family(const RunConfig& cfg);

/// Grid range/count for a config, family defaults when unset.
GridSpec effective_grid(const RunConfig& cfg);

/// Tolerance by key with spec defaults (morse 1e-8, ginocchio 1e-6,
/// residual 1e-6) and per-run overrides.
double tolerance(const RunConfig& cfg, const std::string& key);

/// The family identity tolerance for this config.
double family_tolerance(const RunConfig& cfg);

}  // namespace darboux
