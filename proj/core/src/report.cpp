#include "darboux/report.hpp"

#include <json.hpp>

namespace darboux {

using json = nlohmann::ordered_json;

CheckRecord make_record(std::string name, std::string anchor, double max_gap, double tol,
                        std::vector<double> offending) {
    CheckRecord r;
    r.name = std::move(name);
    r.anchor = std::move(anchor);
    r.max_gap = max_gap;
    r.tolerance = tol;
    r.pass = max_gap <= tol && offending.empty();
    r.offending_points = std::move(offending);
    return r;
}

bool Report::overall_pass() const {
    for (const auto& r : records)
        if (!r.pass) return false;
    return true;
}

std::string Report::to_json_text() const {
    json j;
    j["suite"] = suite;
    j["family"] = family;
    j["config"] = config_echo.empty() ? json::object() : json::parse(config_echo);
    j["records"] = json::array();
    for (const auto& r : records) {
        json rec;
        rec["name"] = r.name;
        rec["anchor"] = r.anchor;
        rec["max_gap"] = r.max_gap;
        rec["tolerance"] = r.tolerance;
        rec["pass"] = r.pass;
        rec["offending_points"] = r.offending_points;
        j["records"].push_back(rec);
    }
    j["observations"] = json::array();
    for (const auto& o : observations) {
        json obs;
        obs["name"] = o.name;
        obs["anchor"] = o.anchor;
        obs["gap"] = o.gap;
        obs["note"] = o.note;
        j["observations"].push_back(obs);
    }
    j["overall_pass"] = overall_pass();
    return j.dump(2);
}

}  // namespace darboux
