#include "darboux/suites.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <random>

#include <json.hpp>

#include "darboux/shape_invariance.hpp"
#include "darboux/transforms.hpp"
#include "darboux/wronskian.hpp"

namespace darboux {

namespace {

Report base_report(const RunConfig& cfg, const std::string& suite) {
    Report r;
    r.suite = suite;
    r.family = cfg.family;
    r.config_echo = cfg.to_json_text();
    return r;
}

Grid grid_for(const RunConfig& cfg, const PotentialFamily& fam, int order) {
    const GridSpec g = effective_grid(cfg);
    return build_grid(fam, g.lo, g.hi, g.count, g.node_scan, order);
}

// --- reference closed forms for the Ginocchio family -----------------------
//
// These are the forms as published for this family. Their derivation drops
// the level-dependent prefactor of the eigenfunctions, so they deviate from
// the definition-path values; the suite evaluates them and reports the gap
// as observations instead of gating on them.

struct GinocchioRef {
    double beta, c;
    double mu2, eps0, eps1, eps2;

    static GinocchioRef from(const PotentialFamily& fam) {
        GinocchioRef r{};
        r.beta = fam.params[0];
        r.c = 1.0 - r.beta * r.beta;
        const GinocchioParams p{fam.params[0], fam.params[1]};
        r.mu2 = ginocchio_mu(p, 2);
        r.eps0 = fam.eigenpairs[0].eigenvalue;
        r.eps1 = fam.eigenpairs[1].eigenvalue;
        r.eps2 = fam.eigenpairs[2].eigenvalue;
        return r;
    }

    double g(double y) const { return 1.0 - c * y * y; }

    double printed_h0(double y) const { return -2.0 * c * y * (1.0 - y * y); }
    double printed_h1(double y) const { return (1.0 - y * y) / y * (1.0 - 2.0 * c * y * y); }

    double printed_first_partner(double v, double y) const {
        const double t = 1.0 - 3.0 * y * y;
        return v + 4.0 * c * t * t * (1.0 - y * y) * g(y);
    }

    double printed_second_partner(double v, double y) const {
        return v - 2.0 * ((-2.0 + c * (5.0 * y * y - 3.0)) + 10.0 * y * y * c) * (1.0 - y * y) * g(y);
    }

    double printed_third_state(double y) const {
        const double f2 = beta * beta * y * y / g(y);
        const double k = 1.0 / (2.0 * mu2 + 3.0);
        return (mu2 + 0.5) * (2.0 * mu2 + 3.0) * std::pow(g(y), -0.25 * (2.0 * mu2 + 1.0)) *
               ((eps2 - eps0) * (f2 - k) - (eps1 - eps0) * 2.0 * f2);
    }
};

void add_ginocchio_observations(Report& report, const RunConfig& cfg, const PotentialFamily& fam,
                                const Grid& grid) {
    if (cfg.family != "ginocchio" || fam.levels() < 3) return;
    const GinocchioRef ref = GinocchioRef::from(fam);
    const auto& y_of = *fam.coordinate;

    double gap_h0 = 0.0;
    double gap_h1 = 0.0;
    double gap_vd1 = 0.0;
    double gap_vc2 = 0.0;
    std::vector<double> third_engine;
    std::vector<double> third_printed;
    for (double x : grid.points) {
        const double y = y_of(x);
        gap_h0 = std::max(gap_h0, relative_gap(log_derivative(fam.eigenpairs[0], x, 0).value(),
                                               ref.printed_h0(y)));
        gap_h1 = std::max(gap_h1, relative_gap(log_derivative(fam.eigenpairs[1], x, 0).value(),
                                               ref.printed_h1(y)));
        const double v = fam.potential(x, 0).value();
        gap_vd1 = std::max(gap_vd1, relative_gap(crum_potential(fam, 1, x, 0).value(),
                                                 ref.printed_first_partner(v, y)));
        gap_vc2 = std::max(gap_vc2, relative_gap(crum_potential(fam, 2, x, 0).value(),
                                                 ref.printed_second_partner(v, y)));
        third_engine.push_back(crum_wavefunction(fam, 2, 2, x, 0).value());
        third_printed.push_back(ref.printed_third_state(y));
    }
    const double third_dev = proportionality(third_engine, third_printed).deviation;

    const std::string note = "published reference form; deviates from the definition-path value";
    report.observations.push_back({"log-derivative-reference-h0", "Eq-(G13)", gap_h0, note});
    report.observations.push_back({"log-derivative-reference-h1", "Eq-(G13)", gap_h1, note});
    report.observations.push_back({"first-partner-reference", "Eq-(16)", gap_vd1, note});
    report.observations.push_back({"second-partner-reference", "Eq-(G17)", gap_vc2, note});
    report.observations.push_back({"third-state-reference", "Eq-(G15)", third_dev, note});
}

}  // namespace

Report run_crum_darboux(const RunConfig& cfg) {
    Report report = base_report(cfg, "crum-darboux");
    const PotentialFamily fam = make_family(cfg);
    const int n = cfg.order;
    const double tol = family_tolerance(cfg);
    const Grid grid = grid_for(cfg, fam, n);

    const EquivalenceReport eq = equivalence_report(fam, n, grid);
    report.records.push_back(make_record("potential-equivalence-n" + std::to_string(n), "Thm-III.1",
                                         eq.max_potential_gap, tol, eq.singular_points));
    for (const auto& [label, prop] : eq.wavefunctions)
        report.records.push_back(make_record(
            "wavefunction-equivalence-n" + std::to_string(n) + "-s" + std::to_string(label),
            "Thm-III.1", prop.deviation, tol));

    // W_{m,m+1} and W_{m+1} are the same determinant; checked as evaluated.
    if (fam.levels() >= 2) {
        double gap = 0.0;
        const int m = fam.levels() - 1;
        std::vector<JetFun> seeds;
        for (int i = 0; i < m; ++i) seeds.push_back(fam.eigenpairs[static_cast<std::size_t>(i)].wavefunction);
        std::vector<JetFun> all = seeds;
        all.push_back(fam.eigenpairs[static_cast<std::size_t>(m)].wavefunction);
        for (double x : grid.points) {
            const double lhs = wronskian_with(seeds, all.back(), x, 0).value();
            const double rhs = wronskian(all, x, 0).value();
            gap = std::max(gap, relative_gap(lhs, rhs));
        }
        report.records.push_back(make_record("augmented-wronskian-collapse", "Sec-III-identity", gap, 1e-10));
    }

    if (fam.levels() >= 3 && n == 2) {
        // The log-derivative route is undefined at nodes of the second state
        // (a removable singularity of the formula); such points are skipped,
        // not counted against the identity.
        const int third = fam.base_index + 2;
        std::vector<double> ratio_route;
        std::vector<double> wronskian_route;
        for (double x : grid.points) {
            try {
                const double fast = h_ratio_psi23(fam, x);
                wronskian_route.push_back(crum_wavefunction(fam, 2, third, x, 0).value());
                ratio_route.push_back(fast);
            } catch (const SingularDivision&) {
            }
        }
        const double dev = proportionality(wronskian_route, ratio_route).deviation;
        report.records.push_back(make_record("h-ratio-third-state", "Eq-(G3)", dev, tol));
    }

    add_ginocchio_observations(report, cfg, fam, grid);
    return report;
}

Report run_residuals(const RunConfig& cfg) {
    Report report = base_report(cfg, "residuals");
    const PotentialFamily fam = make_family(cfg);
    const double tol = tolerance(cfg, "residual");
    const int n_max = std::min(2, fam.levels() - 1);

    for (int n = 0; n <= n_max; ++n) {
        const Grid grid = grid_for(cfg, fam, n);
        const JetFun u = [&fam, n](double x, int order) { return crum_potential(fam, n, x, order); };
        for (int ord = n; ord < fam.levels(); ++ord) {
            const int label = fam.base_index + ord;
            const JetFun psi = [&fam, n, label](double x, int order) {
                return crum_wavefunction(fam, n, label, x, order);
            };
            const ResidualReport res = schrodinger_residual(u, psi, fam.eigenvalue(label), grid);
            report.records.push_back(
                make_record("residual-n" + std::to_string(n) + "-s" + std::to_string(label),
                            "Eq-(113)", res.max_residual, tol, res.singular_points));
        }
    }
    return report;
}

Report run_shape_invariance(const RunConfig& cfg) {
    Report report = base_report(cfg, "shape-invariance");
    const PotentialFamily fam = make_family(cfg);
    if (!fam.flow) throw MissingFlow(fam.name + " family has no shape-invariance flow");
    const double tol = family_tolerance(cfg);
    const Grid grid = grid_for(cfg, fam, fam.levels());

    const SIReport base = check_si_condition(fam, grid);
    report.records.push_back(
        make_record("si-condition", "SI-condition", base.max_gap, tol, base.singular_points));

    // Identities needing flowed parameters are capped at the largest order
    // that keeps the flowed family bound; anything beyond is skipped with a
    // note rather than aborting the suite.
    const auto skip = [&report](const std::string& name, const std::string& anchor) {
        report.observations.push_back(
            {name, anchor, 0.0, "skipped: flowed parameters leave the bound region"});
    };

    for (int s = fam.base_index; s + 1 - fam.base_index < fam.levels(); ++s) {
        const std::string name = "eigenvalue-ladder-s" + std::to_string(s);
        try {
            const SIReport ladder = check_eigenvalue_ladder(fam, s);
            report.records.push_back(make_record(name, "Lemma-V.1", ladder.max_gap, 1e-12));
        } catch (const UnboundLevel&) {
            skip(name, "Lemma-V.1");
        }
    }

    for (int k = 1; k <= 2 && k < fam.levels(); ++k) {
        for (int s = fam.base_index + k - 1; s + 1 - fam.base_index < fam.levels(); ++s) {
            const std::string name = "wavefunction-si-k" + std::to_string(k) + "-s" + std::to_string(s);
            const std::string anchor = k == 1 ? "Lemma-V.1" : "Thm-V.3";
            try {
                const SIReport wf = check_wavefunction_si(fam, k, s, grid);
                report.records.push_back(make_record(name, anchor, wf.max_gap, tol, wf.singular_points));
            } catch (const UnboundLevel&) {
                skip(name, anchor);
            }
        }
    }

    for (int k = 1; k < fam.levels(); ++k) {
        const std::string name = "pairwise-si-k" + std::to_string(k);
        try {
            const SIReport pw = check_pairwise_si(fam, k, grid);
            report.records.push_back(make_record(name, "Thm-V.3", pw.max_gap, tol, pw.singular_points));
        } catch (const UnboundLevel&) {
            skip(name, "Thm-V.3");
        }
    }

    for (int s = 1; s <= fam.levels(); ++s) {
        const std::string name = "corollary-s" + std::to_string(s);
        try {
            const CorollaryReport cor = corollary_check(fam, s, grid);
            report.records.push_back(
                make_record(name, "Cor-V.4", cor.max_gap(), tol, cor.flow_vs_direct.singular_points));
        } catch (const UnboundLevel&) {
            skip(name, "Cor-V.4");
        }
    }
    return report;
}

Report run_wronskian_identities(const RunConfig& cfg) {
    Report report = base_report(cfg, "wronskian-identities");
    const PotentialFamily fam = make_family(cfg);
    const Grid grid = grid_for(cfg, fam, 0);
    const double tol_lemma1 = cfg.family == "morse" ? 1e-9 : tolerance(cfg, "ginocchio");
    const double tol_lemma2 = cfg.family == "morse" ? 1e-9 : 1e-8;

    // Polynomial and constant-Wronskian fixtures force exact zeros.
    {
        const std::vector<JetFun> polys = {
            [](double x, int order) { return Jet::constant(1.0, x, order); },
            [](double x, int order) { return Jet::variable(x, order); },
            [](double x, int order) {
                const Jet v = Jet::variable(x, order);
                return v * v;
            },
        };
        const std::vector<JetFun> trig = {
            [](double x, int order) { return sinh(Jet::variable(x, order)); },
            [](double x, int order) { return cosh(Jet::variable(x, order)); },
        };
        double gap_poly = 0.0;
        double gap_trig = 0.0;
        for (double x : {-1.25, 0.3, 2.0}) {
            gap_poly = std::max(gap_poly, wronskian_derivative_check(polys, x).gap);
            gap_trig = std::max(gap_trig, wronskian_derivative_check(trig, x).gap);
        }
        report.records.push_back(make_record("derivative-polynomial-fixture", "Lemma-II.1", gap_poly, 0.0));
        report.records.push_back(make_record("derivative-constant-fixture", "Lemma-II.1", gap_trig, 0.0));
    }

    std::vector<JetFun> funs;
    for (const auto& e : fam.eigenpairs) funs.push_back(e.wavefunction);

    if (fam.levels() >= 3) {
        const std::vector<JetFun> triple(funs.begin(), funs.begin() + 3);
        double gap = 0.0;
        for (double x : grid.points) gap = std::max(gap, wronskian_derivative_check(triple, x).gap);
        report.records.push_back(make_record("derivative-family-triple", "Lemma-II.1", gap, tol_lemma1));
    }

    for (int n = 2; n < fam.levels(); ++n) {
        const std::vector<JetFun> seeds(funs.begin(), funs.begin() + n);
        double gap = 0.0;
        std::vector<double> singular;
        for (double x : grid.points) {
            try {
                gap = std::max(gap, two_wronskian_identity_check(seeds, funs[static_cast<std::size_t>(n)], x).gap);
            } catch (const SingularDivision& e) {
                singular.push_back(e.where);
            }
        }
        report.records.push_back(make_record("two-wronskian-n" + std::to_string(n), "Eq-(82)", gap,
                                             tol_lemma2, std::move(singular)));
    }

    // Minor-of-cofactors identity on random integer matrices, exact by
    // construction (all intermediates stay below 2^53).
    std::mt19937 rng(20406u);
    std::uniform_int_distribution<int> entry(-9, 9);
    for (int size : {4, 5}) {
        bool all_exact = true;
        double gap = 0.0;
        std::uniform_int_distribution<int> first(0, size - 2);
        for (int trial = 0; trial < 100; ++trial) {
            std::vector<std::vector<double>> a(static_cast<std::size_t>(size),
                                               std::vector<double>(static_cast<std::size_t>(size)));
            for (auto& row : a)
                for (auto& v : row) v = entry(rng);
            const int l0 = first(rng);
            const int c0 = first(rng);
            std::uniform_int_distribution<int> line2(l0 + 1, size - 1);
            std::uniform_int_distribution<int> col2(c0 + 1, size - 1);
            const MinorSelection sel{{l0, line2(rng)}, {c0, col2(rng)}};
            const JacobiCheck check = jacobi_check(a, sel);
            all_exact = all_exact && check.exact;
            gap = std::max(gap, check.gap);
        }
        report.records.push_back(make_record("jacobi-integer-" + std::to_string(size) + "x" +
                                                 std::to_string(size),
                                             "Jacobi-thm", all_exact ? gap : std::max(gap, 1.0), 0.0));
    }
    return report;
}

Report run_suite(const RunConfig& cfg, const std::string& suite) {
    if (suite == "crum-darboux") return run_crum_darboux(cfg);
    if (suite == "shape-invariance") return run_shape_invariance(cfg);
    if (suite == "wronskian-identities") return run_wronskian_identities(cfg);
    if (suite == "residuals") return run_residuals(cfg);
    if (suite != "all") throw ConfigError("unknown suite \"" + suite + "\"");

    Report all = base_report(cfg, "all");
    const PotentialFamily fam = make_family(cfg);
    std::vector<Report> parts;
    parts.push_back(run_crum_darboux(cfg));
    if (fam.flow)
        parts.push_back(run_shape_invariance(cfg));
    else
        all.observations.push_back({"shape-invariance-skipped", "SI-condition", 0.0,
                                    "family has no parameter flow"});
    parts.push_back(run_wronskian_identities(cfg));
    parts.push_back(run_residuals(cfg));
    for (auto& p : parts) {
        for (auto& r : p.records) {
            r.name = p.suite + "/" + r.name;
            all.records.push_back(std::move(r));
        }
        for (auto& o : p.observations) {
            o.name = p.suite + "/" + o.name;
            all.observations.push_back(std::move(o));
        }
    }
    return all;
}

namespace {

std::string format17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

TransformFiles render_transform(const RunConfig& cfg) {
    const PotentialFamily fam = make_family(cfg);
    const int n = cfg.order;
    if (n > fam.levels()) throw ConfigError("order exceeds the family's level count");
    const Grid grid = grid_for(cfg, fam, n);

    const bool crum = cfg.method == "crum" || cfg.method == "both";
    const bool iter = cfg.method == "darboux" || cfg.method == "both";
    const bool si = cfg.method == "si";
    if (si && !fam.flow) throw MissingFlow(fam.name + " family has no shape-invariance flow");

    const TransformChain chain = iter ? darboux_chain(fam, n) : TransformChain{};
    std::vector<int> labels;
    for (int ord = n; ord < fam.levels(); ++ord) labels.push_back(fam.base_index + ord);

    std::string csv = "x,u0";
    if (cfg.method == "both") {
        csv += ",u_crum,u_darboux";
        for (int s : labels)
            csv += ",psi_crum_" + std::to_string(s) + ",psi_darboux_" + std::to_string(s);
    } else {
        csv += ",u_k";
        if (!si)
            for (int s : labels) csv += ",psi_" + std::to_string(s);
    }
    csv += "\n";

    for (double x : grid.points) {
        csv += format17(x);
        csv += ",";
        csv += format17(fam.potential(x, 0).value());
        if (crum) csv += "," + format17(crum_potential(fam, n, x, 0).value());
        if (iter) csv += "," + format17(chain.potential(x, 0).value());
        if (si) csv += "," + format17(si_hamiltonian_potential(fam, n, x, 0).value());
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (crum) csv += "," + format17(crum_wavefunction(fam, n, labels[i], x, 0).value());
            if (iter) csv += "," + format17(chain.transformed[i].second(x, 0).value());
        }
        csv += "\n";
    }

    nlohmann::ordered_json side;
    side["family"] = fam.name;
    side["params"] = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < fam.param_names.size(); ++i)
        side["params"][fam.param_names[i]] = fam.params[i];
    side["levels"] = fam.levels();
    side["method"] = cfg.method;
    side["order"] = n;
    side["eigenvalues"] = nlohmann::ordered_json::object();
    for (const auto& e : fam.eigenpairs)
        side["eigenvalues"][std::to_string(e.index)] = e.eigenvalue;
    const GridSpec g = effective_grid(cfg);
    side["grid"] = {{"min", g.lo}, {"max", g.hi}, {"count", g.count}, {"node_scan", g.node_scan}};
    side["excluded_intervals"] = nlohmann::ordered_json::array();
    for (const auto& [lo, hi] : grid.exclusions) side["excluded_intervals"].push_back({lo, hi});
    side["rows"] = grid.points.size();

    return {std::move(csv), side.dump(2) + "\n"};
}

}  // namespace darboux
