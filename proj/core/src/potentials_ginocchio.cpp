#include <cmath>

#include "darboux/poly_ode.hpp"
#include "darboux/potentials.hpp"

namespace darboux {

namespace {

void validate(const GinocchioParams& p) {
    if (!(p.beta > 0.0) || !(p.beta <= 1.0) || !(p.upsilon > 0.0))
        throw DomainError("Ginocchio family requires beta in (0,1] and upsilon > 0");
}

// dy/dx = (1-y^2)(1-c y^2) = 1 - (1+c) y^2 + c y^4, c = 1-beta^2.
std::vector<double> rhs_coefficients(double c) { return {1.0, 0.0, -(1.0 + c), 0.0, c}; }

// Closed-form antiderivative of 1/[(1-y^2)(1-c y^2)] by partial fractions:
// x(y) = [atanh(y) - sqrt(c) atanh(sqrt(c) y)] / beta^2.
// Differentiating reproduces 1/P(y); the unit test re-verifies this.
double x_of_y(double y, double c, double beta2) {
    return (std::atanh(y) - std::sqrt(c) * std::atanh(std::sqrt(c) * y)) / beta2;
}

}  // namespace

double ginocchio_mu(const GinocchioParams& p, int n) {
    const double b2 = p.beta * p.beta;
    const double half = n + 0.5;
    const double rad = std::sqrt(b2 * (p.upsilon + 0.5) * (p.upsilon + 0.5) + (1.0 - b2) * half * half);
    return (rad - half) / b2;
}

double ginocchio_coordinate_value(const GinocchioParams& p, double x) {
    validate(p);
    const double c = 1.0 - p.beta * p.beta;
    const double b2 = p.beta * p.beta;

    // x(y) is odd and strictly increasing; bisection then Newton polish
    // (dy/dx = P(y)) down to ~1e-15 in y.
    double lo = -1.0 + 1e-16;
    double hi = 1.0 - 1e-16;
    for (int it = 0; it < 120; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (x_of_y(mid, c, b2) < x)
            lo = mid;
        else
            hi = mid;
    }
    double y = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) {
        const double pval = (1.0 - y * y) * (1.0 - c * y * y);
        y -= (x_of_y(y, c, b2) - x) * pval;
        if (y <= -1.0) y = -1.0 + 1e-16;
        if (y >= 1.0) y = 1.0 - 1e-16;
    }
    return y;
}

Jet ginocchio_coordinate(const GinocchioParams& p, double x, int order) {
    const double c = 1.0 - p.beta * p.beta;
    const PolyOde ode{rhs_coefficients(c), ginocchio_coordinate_value(p, x)};
    return ode.propagate(x, order);
}

Jet gegenbauer(int n, double a, const Jet& z) {
    switch (n) {
        case 0:
            return Jet::constant(1.0, z.expansion_point(), z.order());
        case 1:
            return 2.0 * a * z;
        case 2:
            return 2.0 * a * (a + 1.0) * z * z - a;
        case 3:
            return 4.0 / 3.0 * a * (a + 1.0) * (a + 2.0) * (z * z * z) - 2.0 * a * (a + 1.0) * z;
        default:
            throw Unsupported("Gegenbauer polynomials are provided for n = 0..3 only");
    }
}

PotentialFamily ginocchio_family(const GinocchioParams& p, int levels) {
    validate(p);
    if (levels < 1 || levels > 4) throw Unsupported("Ginocchio family provides one to four closed-form levels");
    for (int n = 0; n < levels; ++n)
        if (!(ginocchio_mu(p, n) > 0.0))
            throw UnboundLevel("Ginocchio level " + std::to_string(n) + " is not bound (mu <= 0)");

    PotentialFamily fam;
    fam.name = "ginocchio";
    fam.param_names = {"beta", "upsilon"};
    fam.params = {p.beta, p.upsilon};
    fam.base_index = 0;

    fam.potential_at = [](const std::vector<double>& a, double x, int order) {
        const GinocchioParams q{a[0], a[1]};
        validate(q);
        const double b2 = q.beta * q.beta;
        const double c = 1.0 - b2;
        const Jet y = ginocchio_coordinate(q, x, order);
        const Jet y2 = y * y;
        return (-b2 * q.upsilon * (q.upsilon + 1.0) +
                0.25 * c * (5.0 * c * y2 * y2 - (7.0 - b2) * y2 + 2.0)) *
               (1.0 - y2);
    };
    fam.potential = [pa = fam.potential_at, prms = fam.params](double x, int order) {
        return pa(prms, x, order);
    };

    const double b = p.beta;
    const double c = 1.0 - b * b;
    for (int n = 0; n < levels; ++n) {
        const double mu = ginocchio_mu(p, n);
        EigenPair pair;
        pair.index = n;
        pair.eigenvalue = -mu * mu * b * b * b * b;
        pair.wavefunction = [pp = p, mu, n, b, c](double x, int order) {
            const Jet y = ginocchio_coordinate(pp, x, order);
            const Jet y2 = y * y;
            const Jet g = 1.0 - c * y2;
            const Jet f = b * y * pow(g, -0.5);
            return pow(1.0 - y2, 0.5 * mu) * pow(g, -0.25 * (2.0 * mu + 1.0)) *
                   gegenbauer(n, mu + 0.5, f);
        };
        fam.eigenpairs.push_back(std::move(pair));
    }

    fam.remake = [](const std::vector<double>& a, int lv) {
        return ginocchio_family({a[0], a[1]}, lv);
    };
    fam.params_valid = [](const std::vector<double>& a) {
        return a[0] > 0.0 && a[0] <= 1.0 && a[1] > 0.0;
    };
    fam.coordinate = [pp = p](double x) { return ginocchio_coordinate_value(pp, x); };
    return fam;
}

}  // namespace darboux
