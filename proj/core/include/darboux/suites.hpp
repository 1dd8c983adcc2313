#pragma once

#include <string>

#include "darboux/report.hpp"
#include "darboux/run_config.hpp"

namespace darboux {

/// Verification suites exposed by the command line. Every suite is
/// deterministic: fixed evaluation order, fixed seeds, fixed formatting.
Report run_crum_darboux(const RunConfig& cfg);
Report run_shape_invariance(const RunConfig& cfg);
Report run_wronskian_identities(const RunConfig& cfg);
Report run_residuals(const RunConfig& cfg);

/// Dispatch by suite name; "all" concatenates every applicable suite (the
/// shape-invariance part is skipped with an observation when the family has
/// no flow).
Report run_suite(const RunConfig& cfg, const std::string& suite);

/// Rendered transform output: the CSV field data and its JSON sidecar.
struct TransformFiles {
    std::string csv;
    std::string sidecar;
};

TransformFiles render_transform(const RunConfig& cfg);

}  // namespace darboux
