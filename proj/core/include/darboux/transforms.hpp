#pragma once

#include <utility>
#include <vector>

#include "darboux/potentials.hpp"
#include "darboux/verify.hpp"

namespace darboux {

/// Level-k state of the iterated first-order transform: the current potential
/// and the not-yet-removed wavefunctions, keyed by family label. Chains are
/// immutable; each step produces a new chain one level deeper whose evaluators
/// wrap the previous ones (each level consumes one derivative order of the
/// seed budget).
struct TransformChain {
    int level = 0;
    int base_index = 0;
    JetFun potential;
    std::vector<std::pair<int, JetFun>> transformed;
};

/// Level-0 chain: the family itself.
TransformChain transform_chain(const PotentialFamily& fam);

/// One first-order step: divides by the lowest remaining wavefunction and
/// removes it.
TransformChain darboux_step(const TransformChain& chain);

/// n steps from level 0.
TransformChain darboux_chain(const PotentialFamily& fam, int n);

/// Partner potential u - 2 d/dx (psi'/psi) as an evaluator. Shared by the
/// chain step and the n = 1 direct transform, which therefore agree bitwise.
JetFun darboux_partner_potential(JetFun u, JetFun psi);

/// psi_s' - (psi_k'/psi_k) psi_s as an evaluator; the shared n = 1 map.
JetFun darboux_transformed_wavefunction(JetFun psi_k, JetFun psi_s);

/// u - 2 (ln W_n)'' via one Wronskian jet of order K+2:
/// u - 2 (W''/W - (W'/W)^2). n = 0 is the identity; n = 1 delegates to the
/// shared first-order path.
Jet crum_potential(const PotentialFamily& fam, int n, double x, int order);

/// W_{n,s}/W_n for a family label s with ordinal >= n. n = 1 delegates to the
/// shared first-order path.
Jet crum_wavefunction(const PotentialFamily& fam, int n, int s, double x, int order);

/// Second transform of the third state from log-derivative ratios alone:
/// [e0(h2-h1) - e1(h2-h0) + e2(h1-h0)] / (h1-h0) * psi2, with the first three
/// eigenpairs by ordinal. Proportional to the Wronskian route (the bracket
/// carries an overall sign relative to W_3/W_2).
double h_ratio_psi23(const PotentialFamily& fam, double x);

/// Pointwise comparison of the direct-Wronskian and iterated routes.
struct EquivalenceReport {
    int order = 0;
    double max_potential_gap = 0.0;
    /// label -> proportionality between the two wavefunction routes
    std::vector<std::pair<int, ProportionalityReport>> wavefunctions;
    std::vector<double> singular_points;
};

EquivalenceReport equivalence_report(const PotentialFamily& fam, int n, const Grid& grid);

}  // namespace darboux
