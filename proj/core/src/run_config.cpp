#include "darboux/run_config.hpp"

#include <cmath>
#include <numbers>
#include <set>

#include <json.hpp>

namespace darboux {

namespace {

using json = nlohmann::ordered_json;

void reject_unknown(const json& j, const std::set<std::string>& known, const std::string& where) {
    for (const auto& [key, value] : j.items())
        if (!known.contains(key)) throw ConfigError("unknown key \"" + key + "\" in " + where);
}

double require_positive(double v, const std::string& what) {
    if (!(v > 0.0)) throw ConfigError(what + " must be > 0");
    return v;
}

}  // namespace

RunConfig RunConfig::from_json_text(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    if (!j.is_object()) throw ConfigError("config root must be a JSON object");
    reject_unknown(j, {"family", "params", "levels", "order", "method", "grid", "out", "tolerances"},
                   "config");

    RunConfig cfg;
    if (j.contains("family")) cfg.family = j["family"].get<std::string>();
    if (j.contains("params")) {
        if (!j["params"].is_object()) throw ConfigError("\"params\" must be an object");
        for (const auto& [key, value] : j["params"].items()) cfg.params[key] = value.get<double>();
    }
    if (j.contains("levels")) cfg.levels = j["levels"].get<int>();
    if (j.contains("order")) cfg.order = j["order"].get<int>();
    if (j.contains("method")) cfg.method = j["method"].get<std::string>();
    if (j.contains("grid")) {
        const json& g = j["grid"];
        reject_unknown(g, {"min", "max", "count", "node_scan"}, "grid");
        if (!g.contains("min") || !g.contains("max") || !g.contains("count"))
            throw ConfigError("grid needs min, max and count");
        cfg.grid.lo = g["min"].get<double>();
        cfg.grid.hi = g["max"].get<double>();
        cfg.grid.count = g["count"].get<int>();
        if (g.contains("node_scan")) cfg.grid.node_scan = g["node_scan"].get<bool>();
    }
    if (j.contains("out")) cfg.out = j["out"].get<std::string>();
    if (j.contains("tolerances")) {
        reject_unknown(j["tolerances"], {"morse", "ginocchio", "residual"}, "tolerances");
        for (const auto& [key, value] : j["tolerances"].items()) {
            cfg.tolerances[key] = value.get<double>();
            require_positive(cfg.tolerances[key], "tolerance \"" + key + "\"");
        }
    }

    if (cfg.method != "crum" && cfg.method != "darboux" && cfg.method != "both" && cfg.method != "si")
        throw ConfigError("method must be one of crum, darboux, both, si");
    if (cfg.order < 0) throw ConfigError("order must be >= 0");
    if (cfg.levels < 0) throw ConfigError("levels must be >= 0");
    return cfg;
}

std::string RunConfig::to_json_text() const {
    json j;
    j["family"] = family;
    j["params"] = json::object();
    for (const auto& [key, value] : params) j["params"][key] = value;
    j["levels"] = levels;
    j["order"] = order;
    j["method"] = method;
    const GridSpec g = effective_grid(*this);
    j["grid"] = {{"min", g.lo}, {"max", g.hi}, {"count", g.count}, {"node_scan", g.node_scan}};
    j["out"] = out;
    j["tolerances"] = json::object();
    for (const auto& [key, value] : tolerances) j["tolerances"][key] = value;
    return j.dump(2);
}

PotentialFamily make_family(const RunConfig& cfg) {
    auto param = [&cfg](const std::string& name, double fallback) {
        const auto it = cfg.params.find(name);
        return it == cfg.params.end() ? fallback : it->second;
    };
    if (cfg.family == "morse") {
        for (const auto& [key, value] : cfg.params)
            if (key != "A" && key != "alpha") throw ConfigError("unknown morse parameter \"" + key + "\"");
        const int levels = cfg.levels > 0 ? cfg.levels : 3;
        return morse_family({param("A", 2.0 * std::numbers::sqrt2), param("alpha", 1.0)}, levels);
    }
    if (cfg.family == "ginocchio") {
        for (const auto& [key, value] : cfg.params)
            if (key != "beta" && key != "upsilon")
                throw ConfigError("unknown ginocchio parameter \"" + key + "\"");
        const int levels = cfg.levels > 0 ? cfg.levels : 4;
        return ginocchio_family({param("beta", 0.8), param("upsilon", 4.0)}, levels);
    }
    throw ConfigError("unknown family \"" + cfg.family + "\"");
}

GridSpec effective_grid(const RunConfig& cfg) {
    if (cfg.grid.is_set()) return cfg.grid;
    GridSpec g;
    g.node_scan = cfg.grid.node_scan;
    if (cfg.family == "ginocchio") {
        g.lo = -2.5;
        g.hi = 2.5;
        g.count = 101;
    } else {
        g.lo = -3.0;
        g.hi = 3.0;
        g.count = 121;
    }
    return g;
}

double tolerance(const RunConfig& cfg, const std::string& key) {
    const auto it = cfg.tolerances.find(key);
    if (it != cfg.tolerances.end()) return it->second;
    if (key == "morse") return 1e-8;
    if (key == "ginocchio") return 1e-6;
    if (key == "residual") return 1e-6;
    throw ConfigError("unknown tolerance key \"" + key + "\"");
}

double family_tolerance(const RunConfig& cfg) {
    if (cfg.family != "morse" && cfg.family != "ginocchio")
        throw ConfigError("unknown family \"" + cfg.family + "\"");
    return tolerance(cfg, cfg.family);
}

}  // namespace darboux
