#pragma once

#include <string>
#include <vector>

namespace darboux {

struct RunConfig;

/// One gated identity check. The anchor is a stable identifier for the
/// identity being verified (e.g. "Thm-III.1", "Lemma-II.2", "Eq-(82)") so
/// downstream tooling can key on it.
struct CheckRecord {
    std::string name;
    std::string anchor;
    double max_gap = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::vector<double> offending_points;
};

/// A reported measurement that does not gate the run, e.g. the deviation of a
/// quantity from a published closed form kept for reference.
struct Observation {
    std::string name;
    std::string anchor;
    double gap = 0.0;
    std::string note;
};

struct Report {
    std::string suite;
    std::string family;
    std::string config_echo;  ///< JSON text of the run configuration
    std::vector<CheckRecord> records;
    std::vector<Observation> observations;

    bool overall_pass() const;
    std::string to_json_text() const;
};

CheckRecord make_record(std::string name, std::string anchor, double max_gap, double tol,
                        std::vector<double> offending = {});

}  // namespace darboux
