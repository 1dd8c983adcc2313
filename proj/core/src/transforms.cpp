#include "darboux/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "darboux/wronskian.hpp"

namespace darboux {

JetFun darboux_partner_potential(JetFun u, JetFun psi) {
    return [u = std::move(u), psi = std::move(psi)](double x, int order) {
        const Jet p = psi(x, order + 2);
        const Jet ratio = p.derivative_jet() / p.truncated(order + 1);
        return u(x, order) - 2.0 * ratio.derivative_jet();
    };
}

JetFun darboux_transformed_wavefunction(JetFun psi_k, JetFun psi_s) {
    return [psi_k = std::move(psi_k), psi_s = std::move(psi_s)](double x, int order) {
        const Jet k = psi_k(x, order + 1);
        const Jet s = psi_s(x, order + 1);
        return s.derivative_jet() - (k.derivative_jet() / k.truncated(order)) * s.truncated(order);
    };
}

TransformChain transform_chain(const PotentialFamily& fam) {
    TransformChain chain;
    chain.level = 0;
    chain.base_index = fam.base_index;
    chain.potential = fam.potential;
    for (const auto& e : fam.eigenpairs) chain.transformed.emplace_back(e.index, e.wavefunction);
    return chain;
}

TransformChain darboux_step(const TransformChain& chain) {
    if (chain.transformed.empty())
        throw IndexError("transform chain has no remaining wavefunction to divide by");
    const JetFun lowest = chain.transformed.front().second;

    TransformChain next;
    next.level = chain.level + 1;
    next.base_index = chain.base_index;
    next.potential = darboux_partner_potential(chain.potential, lowest);
    for (std::size_t i = 1; i < chain.transformed.size(); ++i)
        next.transformed.emplace_back(chain.transformed[i].first,
                                      darboux_transformed_wavefunction(lowest, chain.transformed[i].second));
    return next;
}

TransformChain darboux_chain(const PotentialFamily& fam, int n) {
    if (n < 0 || n > fam.levels()) throw IndexError("transform order exceeds the family's levels");
    TransformChain chain = transform_chain(fam);
    for (int i = 0; i < n; ++i) chain = darboux_step(chain);
    return chain;
}

namespace {

std::vector<JetFun> seed_functions(const PotentialFamily& fam, int n) {
    std::vector<JetFun> fs;
    fs.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) fs.push_back(fam.eigenpairs[static_cast<std::size_t>(i)].wavefunction);
    return fs;
}

}  // namespace

Jet crum_potential(const PotentialFamily& fam, int n, double x, int order) {
    if (n < 0 || n > fam.levels()) throw IndexError("transform order exceeds the family's levels");
    if (n == 0) return fam.potential(x, order);
    if (n == 1)
        return darboux_partner_potential(fam.potential, fam.eigenpairs[0].wavefunction)(x, order);

    const auto fs = seed_functions(fam, n);
    const Jet w = wronskian(fs, x, order + 2);
    const Jet wp = w.derivative_jet();
    const Jet w0 = w.truncated(order);
    const Jet t1 = wp.derivative_jet() / w0;
    const Jet t2 = wp.truncated(order) / w0;
    return fam.potential(x, order) - 2.0 * (t1 - t2 * t2);
}

Jet crum_wavefunction(const PotentialFamily& fam, int n, int s, double x, int order) {
    const int ord_s = fam.ordinal(s);
    if (n < 0 || n > fam.levels()) throw IndexError("transform order exceeds the family's levels");
    if (ord_s < n) throw IndexError("wavefunction with label " + std::to_string(s) +
                                    " is removed by the order-" + std::to_string(n) + " transform");
    const JetFun target = fam.eigenpairs[static_cast<std::size_t>(ord_s)].wavefunction;
    if (n == 0) return target(x, order);
    if (n == 1)
        return darboux_transformed_wavefunction(fam.eigenpairs[0].wavefunction, target)(x, order);

    const auto fs = seed_functions(fam, n);
    const Jet wns = wronskian_with(fs, target, x, order);
    const Jet wn = wronskian(fs, x, order);
    return wns / wn;
}

double h_ratio_psi23(const PotentialFamily& fam, double x) {
    if (fam.levels() < 3) throw IndexError("h-ratio route needs three eigenfunctions");
    double h[3];
    double eps[3];
    for (int i = 0; i < 3; ++i) {
        const EigenPair& e = fam.eigenpairs[static_cast<std::size_t>(i)];
        h[i] = log_derivative(e, x, 0).value();
        eps[i] = e.eigenvalue;
    }
    const double denom = h[1] - h[0];
    const double scale = std::max({std::abs(h[0]), std::abs(h[1]), 1.0});
    if (std::abs(denom) < 1e-12 * scale) throw SingularDivision(x);
    const double bracket =
        eps[0] * (h[2] - h[1]) - eps[1] * (h[2] - h[0]) + eps[2] * (h[1] - h[0]);
    return bracket / denom * fam.eigenpairs[2].wavefunction(x, 0).value();
}

EquivalenceReport equivalence_report(const PotentialFamily& fam, int n, const Grid& grid) {
    EquivalenceReport report;
    report.order = n;
    const TransformChain chain = darboux_chain(fam, n);

    std::vector<double> kept;
    kept.reserve(grid.points.size());
    for (double x : grid.points) {
        try {
            const double via_crum = crum_potential(fam, n, x, 0).value();
            const double via_chain = chain.potential(x, 0).value();
            report.max_potential_gap =
                std::max(report.max_potential_gap, relative_gap(via_crum, via_chain));
            kept.push_back(x);
        } catch (const SingularDivision& e) {
            report.singular_points.push_back(e.where);
        }
    }

    for (const auto& [label, fun] : chain.transformed) {
        std::vector<double> f;
        std::vector<double> g;
        f.reserve(kept.size());
        g.reserve(kept.size());
        for (double x : kept) {
            try {
                const double via_crum = crum_wavefunction(fam, n, label, x, 0).value();
                const double via_chain = fun(x, 0).value();
                f.push_back(via_crum);
                g.push_back(via_chain);
            } catch (const SingularDivision& e) {
                report.singular_points.push_back(e.where);
            }
        }
        report.wavefunctions.emplace_back(label, proportionality(f, g));
    }
    return report;
}

}  // namespace darboux
