#pragma once

#include <vector>

#include "darboux/jet.hpp"

namespace darboux {

/// Autonomous scalar ODE y' = P(y) with a polynomial right-hand side,
/// solved as a Taylor jet. Degree 4 covers the implicit coordinates used by
/// the potential families; arbitrary degree is supported.
struct PolyOde {
    /// P coefficients in ascending powers of y.
    std::vector<double> coefficients;
    /// y at the base point.
    double initial_value = 0.0;

    /// Jet of y(x) at x0 to the requested order, seeded with the initial
    /// value and filled by c_{j+1} = [coefficient j of P(y-jet)]/(j+1).
    Jet propagate(double x0, int order) const;
};

/// Polynomial evaluated on a jet by Horner's scheme.
Jet polyval(const std::vector<double>& coefficients, const Jet& y);

}  // namespace darboux
