#pragma once

#include <optional>
#include <string>
#include <vector>

#include "darboux/potentials.hpp"
#include "darboux/verify.hpp"

namespace darboux {

/// Result of one shape-invariance identity over a grid.
struct SIReport {
    std::string identity;
    double max_gap = 0.0;
    std::vector<double> point_gaps;
    std::optional<double> fitted_constant;
    std::vector<double> singular_points;
};

/// Base condition: u[1](x; a) vs u(x; f(a)) + R, pointwise.
SIReport check_si_condition(const PotentialFamily& fam, const Grid& grid);

/// Eigenvalue ladder: lambda_s(a1) + R(a1) vs lambda_{s+1}(a), closed-form
/// arithmetic on both sides. s and s+1 are family labels.
SIReport check_eigenvalue_ladder(const PotentialFamily& fam, int s);

/// Wavefunction ladder: psi[k]_{s+1}(x; a) proportional to psi[k-1]_s(x; a1).
SIReport check_wavefunction_si(const PotentialFamily& fam, int k, int s, const Grid& grid);

/// Neighbouring transformed potentials: u[k](x; a) vs u[k-1](x; f(a)) + R.
SIReport check_pairwise_si(const PotentialFamily& fam, int k, const Grid& grid);

/// Potential of the flow-defined Hamiltonian: u(x; a_s) + sum_{k=1..s} R(a_k),
/// with a_k the k-fold flow of a. Parameters that leave the family's valid
/// region throw UnboundLevel unless allow_unbound is set; the potential
/// formula itself evaluates either way.
Jet si_hamiltonian_potential(const PotentialFamily& fam, int s, double x, int order,
                             bool allow_unbound = false);

/// Pairwise gaps among the three order-s potentials: the flow-defined one,
/// the iterated chain and the direct Wronskian form.
struct CorollaryReport {
    SIReport flow_vs_direct;
    SIReport flow_vs_iterated;
    SIReport iterated_vs_direct;
    double max_gap() const;
};

CorollaryReport corollary_check(const PotentialFamily& fam, int s, const Grid& grid);

}  // namespace darboux
