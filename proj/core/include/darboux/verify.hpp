#pragma once

#include <span>
#include <utility>
#include <vector>

#include "darboux/jet.hpp"
#include "darboux/potentials.hpp"

namespace darboux {

/// Evaluation grid with the intervals removed around nodes and poles.
struct Grid {
    std::vector<double> points;
    std::vector<std::pair<double, double>> exclusions;
};

/// |lhs - rhs| / max(|lhs|, |rhs|, 1e-300). Identities are checked near zeros
/// of Wronskians, so the normalizer never degenerates.
double relative_gap(double lhs, double rhs);

/// One fitted constant c = sum(f g)/sum(g g) and the residual deviation
/// max|f - c g| / max|f|. Sums run in fixed order.
struct ProportionalityReport {
    double constant = 0.0;
    double deviation = 0.0;
    double normalizer = 0.0;
};

ProportionalityReport proportionality(std::span<const double> f, std::span<const double> g);

struct ResidualReport {
    double max_residual = 0.0;
    std::vector<double> singular_points;
};

/// Max over the grid of |-psi'' + u psi - lambda psi|, normalized by the
/// grid-global max of |lambda psi| and |u psi|. Per-point normalization would
/// blow up at wavefunction nodes, so the maxima are global.
ResidualReport schrodinger_residual(const JetFun& u, const JetFun& psi, double lambda,
                                    const Grid& grid);

Grid uniform_grid(double lo, double hi, int count);

/// Uniform grid over [lo, hi] with exclusions carved out:
///  - for families on an implicit coordinate, the |y| < 0.05 band around the
///    pole of the first excited log-derivative;
///  - with node_scan, every Wronskian denominator W_1..W_n of the transform
///    order, scanned for sign changes at 10x resolution; each change removes
///    an interval of half-width two grid spacings.
Grid build_grid(const PotentialFamily& fam, double lo, double hi, int count, bool node_scan,
                int transform_order);

}  // namespace darboux
