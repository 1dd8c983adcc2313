// Command-line front end: transform emission and verification suites.
//
// Exit codes: 0 success / all checks pass, 1 a verification record failed,
// 2 configuration error, 3 singularity or degenerate grid, 4 missing flow.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "darboux/errors.hpp"
#include "darboux/suites.hpp"

namespace {

struct CliOptions {
    std::string config_path;
    std::string family;
    std::vector<std::string> params;
    int levels = 0;
    int order = -1;
    std::string method;
    std::string grid;
    bool no_node_scan = false;
    std::string out;
    std::vector<std::string> tols;
    std::string suite = "all";
};

std::pair<std::string, double> parse_assignment(const std::string& text, const std::string& what) {
    const auto eq = text.find('=');
    if (eq == std::string::npos || eq == 0)
        throw darboux::ConfigError("expected " + what + " as key=value, got \"" + text + "\"");
    try {
        return {text.substr(0, eq), std::stod(text.substr(eq + 1))};
    } catch (const std::exception&) {
        throw darboux::ConfigError("non-numeric value in \"" + text + "\"");
    }
}

darboux::RunConfig build_config(const CliOptions& opt) {
    darboux::RunConfig cfg;
    if (!opt.config_path.empty()) {
        std::ifstream in(opt.config_path);
        if (!in) throw darboux::ConfigError("cannot read config file " + opt.config_path);
        std::ostringstream text;
        text << in.rdbuf();
        cfg = darboux::RunConfig::from_json_text(text.str());
    }
    if (!opt.family.empty()) cfg.family = opt.family;
    for (const auto& p : opt.params) {
        const auto [key, value] = parse_assignment(p, "--param");
        cfg.params[key] = value;
    }
    if (opt.levels > 0) cfg.levels = opt.levels;
    if (opt.order >= 0) cfg.order = opt.order;
    if (!opt.method.empty()) cfg.method = opt.method;
    if (!opt.grid.empty()) {
        double lo = 0.0, hi = 0.0;
        int count = 0;
        char c1 = 0, c2 = 0;
        std::istringstream in(opt.grid);
        if (!(in >> lo >> c1 >> hi >> c2 >> count) || c1 != ',' || c2 != ',')
            throw darboux::ConfigError("expected --grid min,max,count, got \"" + opt.grid + "\"");
        cfg.grid.lo = lo;
        cfg.grid.hi = hi;
        cfg.grid.count = count;
    }
    if (opt.no_node_scan) cfg.grid.node_scan = false;
    if (!opt.out.empty()) cfg.out = opt.out;
    for (const auto& t : opt.tols) {
        const auto [key, value] = parse_assignment(t, "--tol");
        if (!(value > 0.0)) throw darboux::ConfigError("tolerance \"" + key + "\" must be > 0");
        cfg.tolerances[key] = value;
    }
    if (cfg.method != "crum" && cfg.method != "darboux" && cfg.method != "both" && cfg.method != "si")
        throw darboux::ConfigError("method must be one of crum, darboux, both, si");
    return cfg;
}

std::string sidecar_path(const std::string& out) {
    if (out.size() >= 4 && out.substr(out.size() - 4) == ".csv")
        return out.substr(0, out.size() - 4) + ".json";
    return out + ".json";
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw darboux::ConfigError("cannot write " + path);
    f << content;
}

void add_common_options(CLI::App* cmd, CliOptions& opt) {
    cmd->add_option("--config", opt.config_path, "JSON run configuration");
    cmd->add_option("--family", opt.family, "potential family: morse | ginocchio");
    cmd->add_option("--param", opt.params, "family parameter as name=value (repeatable)");
    cmd->add_option("--levels", opt.levels, "number of bound levels to build");
    cmd->add_option("--order", opt.order, "transform order n");
    cmd->add_option("--method", opt.method, "crum | darboux | both | si");
    cmd->add_option("--grid", opt.grid, "evaluation grid as min,max,count");
    cmd->add_flag("--no-node-scan", opt.no_node_scan, "disable denominator node scanning");
    cmd->add_option("--out", opt.out, "output CSV path (sidecar JSON alongside)");
    cmd->add_option("--tol", opt.tols, "tolerance override as key=value (repeatable)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Iterated isospectral transforms of solvable Sturm-Liouville problems"};
    app.require_subcommand(1);

    CliOptions opt;
    CLI::App* transform = app.add_subcommand("transform", "emit transformed potential and wavefunctions");
    add_common_options(transform, opt);
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite, JSON report to stdout");
    add_common_options(verify, opt);
    verify->add_option("--suite", opt.suite,
                       "crum-darboux | shape-invariance | wronskian-identities | residuals | all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const darboux::RunConfig cfg = build_config(opt);
        if (transform->parsed()) {
            const darboux::TransformFiles files = darboux::render_transform(cfg);
            write_file(cfg.out, files.csv);
            write_file(sidecar_path(cfg.out), files.sidecar);
            return 0;
        }
        const darboux::Report report = darboux::run_suite(cfg, opt.suite);
        std::cout << report.to_json_text() << "\n";
        return report.overall_pass() ? 0 : 1;
    } catch (const darboux::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const darboux::MissingFlow& e) {
        std::cerr << "missing flow: " << e.what() << "\n";
        return 4;
    } catch (const darboux::SingularDivision& e) {
        std::cerr << "singularity: " << e.what() << "\n";
        return 3;
    } catch (const darboux::EmptyGrid& e) {
        std::cerr << "degenerate grid: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
