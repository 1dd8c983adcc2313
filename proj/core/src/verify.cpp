#include "darboux/verify.hpp"

#include <algorithm>
#include <cmath>

#include "darboux/wronskian.hpp"

namespace darboux {

double relative_gap(double lhs, double rhs) {
    return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

ProportionalityReport proportionality(std::span<const double> f, std::span<const double> g) {
    if (f.size() != g.size() || f.empty())
        throw DomainError("proportionality needs equal-length nonempty samples");

    double max_g = 0.0;
    for (double v : g) max_g = std::max(max_g, std::abs(v));
    if (max_g < 1e-300) throw DegenerateComparand("comparand is numerically zero");

    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        num += f[i] * g[i];
        den += g[i] * g[i];
    }
    const double c = num / den;

    double max_f = 0.0;
    double max_dev = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        max_f = std::max(max_f, std::abs(f[i]));
        max_dev = std::max(max_dev, std::abs(f[i] - c * g[i]));
    }
    const double norm = std::max(max_f, 1e-300);
    return {c, max_dev / norm, norm};
}

ResidualReport schrodinger_residual(const JetFun& u, const JetFun& psi, double lambda,
                                    const Grid& grid) {
    ResidualReport out;
    double max_r = 0.0;
    double max_lambda_psi = 0.0;
    double max_u_psi = 0.0;
    for (double x : grid.points) {
        try {
            const Jet p = psi(x, 2);
            const double uv = u(x, 0).value();
            const double r = -p.derivative(2) + uv * p.value() - lambda * p.value();
            max_r = std::max(max_r, std::abs(r));
            max_lambda_psi = std::max(max_lambda_psi, std::abs(lambda * p.value()));
            max_u_psi = std::max(max_u_psi, std::abs(uv * p.value()));
        } catch (const SingularDivision&) {
            out.singular_points.push_back(x);
        }
    }
    out.max_residual = max_r / std::max({max_lambda_psi, max_u_psi, 1e-300});
    return out;
}

Grid uniform_grid(double lo, double hi, int count) {
    if (count < 2 || !(hi > lo)) throw EmptyGrid("grid needs an increasing range and at least two points");
    Grid g;
    g.points.reserve(static_cast<std::size_t>(count));
    const double h = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) g.points.push_back(lo + i * h);
    return g;
}

namespace {

void carve(Grid& g, double lo, double hi) {
    g.exclusions.emplace_back(lo, hi);
    std::erase_if(g.points, [lo, hi](double x) { return x >= lo && x <= hi; });
}

}  // namespace

Grid build_grid(const PotentialFamily& fam, double lo, double hi, int count, bool node_scan,
                int transform_order) {
    Grid g = uniform_grid(lo, hi, count);
    const double spacing = (hi - lo) / (count - 1);
    // 10x refinement of the grid itself, so every grid point is a scan point.
    const int fine_count = 10 * (count - 1) + 1;
    const double fine_h = spacing / 10.0;

    if (fam.coordinate) {
        // h of the first excited state has a pole at y = 0; drop the band,
        // widened to the enclosing scan points.
        const auto& y_of = *fam.coordinate;
        bool inside = false;
        double start = lo;
        for (int i = 0; i < fine_count; ++i) {
            const double x = lo + i * fine_h;
            const bool in_band = std::abs(y_of(x)) < 0.05;
            if (in_band && !inside) {
                inside = true;
                start = lo + (i - 1) * fine_h;
            } else if (!in_band && inside) {
                inside = false;
                carve(g, start, x);
            }
        }
        if (inside) carve(g, start, hi);
    }

    if (node_scan && transform_order > 0) {
        const int n = std::min(transform_order, fam.levels());
        std::vector<JetFun> seeds;
        for (int m = 0; m < n; ++m) {
            seeds.push_back(fam.eigenpairs[static_cast<std::size_t>(m)].wavefunction);
            // Order-0 values of W_m at 10x resolution; a sign change (possibly
            // through an exact zero at a scan point) marks a node of a
            // transform denominator.
            int last_sign = 0;
            double last_x = lo;
            for (int i = 0; i < fine_count; ++i) {
                const double x = lo + i * fine_h;
                const double w = wronskian(seeds, x, 0).value();
                const int sign = w > 0.0 ? 1 : (w < 0.0 ? -1 : 0);
                if (sign == 0) {
                    carve(g, x - 2.0 * spacing, x + 2.0 * spacing);
                } else {
                    if (last_sign != 0 && sign != last_sign) {
                        const double mid = 0.5 * (last_x + x);
                        carve(g, mid - 2.0 * spacing, mid + 2.0 * spacing);
                    }
                    last_sign = sign;
                    last_x = x;
                }
            }
        }
    }

    if (g.points.empty()) throw EmptyGrid("grid exclusions removed every point");
    return g;
}

}  // namespace darboux
