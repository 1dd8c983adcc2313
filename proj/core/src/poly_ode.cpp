#include "darboux/poly_ode.hpp"

namespace darboux {

Jet polyval(const std::vector<double>& coefficients, const Jet& y) {
    Jet acc = Jet::constant(0.0, y.expansion_point(), y.order());
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * y + *it;
    return acc;
}

Jet PolyOde::propagate(double x0, int order) const {
    Jet y(x0, order);
    y.coeff(0) = initial_value;
    // Coefficient m of P(y) only involves y-coefficients up to m, so the
    // recurrence can fill one coefficient per pass over the partial jet.
    for (int m = 0; m < order; ++m) {
        const Jet rhs = polyval(coefficients, y.truncated(m));
        y.coeff(m + 1) = rhs.coeff(m) / (m + 1);
    }
    return y;
}

}  // namespace darboux
